#include "kp/wedge.hpp"

#include <stdexcept>

namespace kp {

WedgeMonomial::WedgeMonomial(std::vector<WedgeFactor> sorted_factors) : factors_(std::move(sorted_factors)) {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].row < 1 || factors_[k].col < 1)
      throw std::invalid_argument("WedgeMonomial: factor indices must be positive");
    if (k > 0 && !(factors_[k - 1] < factors_[k]))
      throw std::invalid_argument("WedgeMonomial: factors must be strictly increasing");
  }
}

std::optional<std::pair<WedgeMonomial, int>> WedgeMonomial::from_unordered(std::vector<WedgeFactor> factors) {
  int sign = 1;
  for (std::size_t a = 1; a < factors.size(); ++a)
    for (std::size_t b = a; b > 0 && factors[b] < factors[b - 1]; --b) {
      std::swap(factors[b], factors[b - 1]);
      sign = -sign;
    }
  for (std::size_t k = 1; k < factors.size(); ++k)
    if (factors[k] == factors[k - 1]) return std::nullopt;
  return std::make_pair(WedgeMonomial(std::move(factors)), sign);
}

std::vector<long> WedgeMonomial::weight(int n) const {
  std::vector<long> w(static_cast<std::size_t>(n), 0);
  for (const WedgeFactor& f : factors_) {
    if (f.row > n) throw std::invalid_argument("WedgeMonomial::weight: factor row exceeds n");
    ++w[static_cast<std::size_t>(f.row) - 1];
  }
  return w;
}

std::string WedgeMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const WedgeFactor& f : factors_) {
    if (!s.empty()) s += '^';
    s += "u[" + std::to_string(f.row) + "," + std::to_string(f.col) + "]";
  }
  return s;
}

SparseElement act_e(int p, int q, const SparseElement& x, int n) {
  if (p < 1 || p > q || q > n) throw std::invalid_argument("act_e: need 1 <= p <= q <= n");
  SparseElement out;
  for (const auto& [mono, c] : x.terms()) {
    const auto& fs = mono.factors();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (fs[k].row != q) continue;
      auto moved = fs;
      moved[k].row = p;
      if (auto norm = WedgeMonomial::from_unordered(std::move(moved)))
        out.add_term(std::move(norm->first), c * norm->second);
    }
  }
  return out;
}

SparseElement u_of(const Permutation& w, int n) {
  if (!w.in_s_paren(n)) throw std::invalid_argument("u_of: w is not in S^(n)");
  std::vector<WedgeFactor> fs;
  for (const auto& [i, j] : w.inversion_set()) fs.push_back({i, j});
  return SparseElement::unit(WedgeMonomial(std::move(fs)));
}

SparseElement wedge_left(WedgeFactor f, const SparseElement& x) {
  SparseElement out;
  for (const auto& [mono, c] : x.terms()) {
    std::vector<WedgeFactor> fs;
    fs.reserve(mono.factors().size() + 1);
    fs.push_back(f);
    fs.insert(fs.end(), mono.factors().begin(), mono.factors().end());
    if (auto norm = WedgeMonomial::from_unordered(std::move(fs)))
      out.add_term(std::move(norm->first), c * norm->second);
  }
  return out;
}

std::string to_string(const SparseElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [mono, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += c.get_str() + "*";
    s += mono.to_string();
  }
  return s;
}

}  // namespace kp

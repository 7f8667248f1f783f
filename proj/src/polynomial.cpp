#include "kp/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace kp {

namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents with_exponent(Exponents e, int i, int value) {
  if (static_cast<int>(e.size()) < i) e.resize(static_cast<std::size_t>(i), 0);
  e[static_cast<std::size_t>(i) - 1] = value;
  trim(e);
  return e;
}

}  // namespace

int exponent_at(const Exponents& e, int i) {
  return i <= static_cast<int>(e.size()) ? e[static_cast<std::size_t>(i) - 1] : 0;
}

std::strong_ordering revlex_compare(const Exponents& a, const Exponents& b) {
  for (int k = static_cast<int>(std::max(a.size(), b.size())); k >= 1; --k)
    if (auto c = exponent_at(a, k) <=> exponent_at(b, k); c != 0) return c;
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(mpz_class c) {
  Polynomial f;
  f.add_term({}, c);
  return f;
}

Polynomial Polynomial::variable(int i) {
  if (i < 1) throw std::invalid_argument("Polynomial::variable: need i >= 1");
  Exponents e(static_cast<std::size_t>(i), 0);
  e.back() = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents e, mpz_class c) {
  Polynomial f;
  f.add_term(std::move(e), c);
  return f;
}

mpz_class Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int Polynomial::max_variable() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e.size()));
  return m;
}

Polynomial& Polynomial::add_term(Exponents e, const mpz_class& c) {
  if (c == 0) return *this;
  for (int v : e)
    if (v < 0) throw std::invalid_argument("Polynomial: negative exponent");
  trim(e);
  const auto [it, fresh] = terms_.try_emplace(std::move(e), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = (k < ea.size() ? ea[k] : 0) + (k < eb.size() ? eb[k] : 0);
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator*(const mpz_class& c) const {
  Polynomial out;
  for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
  return out;
}

Polynomial Polynomial::swap_adjacent_variables(int i) const {
  if (i < 1) throw std::invalid_argument("swap_adjacent_variables: need i >= 1");
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Exponents e2 = with_exponent(e, i, exponent_at(e, i + 1));
    e2 = with_exponent(std::move(e2), i + 1, exponent_at(e, i));
    out.add_term(std::move(e2), c);
  }
  return out;
}

mpz_class Polynomial::evaluate_all_ones() const {
  mpz_class sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // map order is lex-ascending; print descending so x1-heavy terms lead
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    std::string mono;
    for (int k = 1; k <= static_cast<int>(e.size()); ++k) {
      const int a = exponent_at(e, k);
      if (a == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k);
      if (a > 1) mono += "^" + std::to_string(a);
    }
    if (mono.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1) throw std::invalid_argument("divided_difference: need i >= 1");
  const Polynomial g = f - f.swap_adjacent_variables(i);
  Polynomial out;
  for (const auto& [e, c] : g.terms()) {
    const int a = exponent_at(e, i);
    const int b = exponent_at(e, i + 1);
    if (a == b) throw std::logic_error("divided_difference: symmetric term survived subtraction");
    if (a < b) continue;  // mirror of a term with a > b, already accounted for
    // (x^a y^b - x^b y^a)/(x - y) = sum_s x^(a-1-s) y^(b+s), s = 0..a-b-1
    for (int s = 0; s <= a - b - 1; ++s) {
      Exponents e2 = with_exponent(e, i, a - 1 - s);
      e2 = with_exponent(std::move(e2), i + 1, b + s);
      out.add_term(std::move(e2), c);
    }
  }
  return out;
}

}  // namespace kp

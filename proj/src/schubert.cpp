#include "kp/schubert.hpp"

#include <stdexcept>
#include <string>

namespace kp {

namespace {

int pick_descent(const Permutation& u, DescentPolicy policy) {
  int found = 0;
  for (int i = 1; i < u.window(); ++i) {
    if (u(i) > u(i + 1)) {
      if (policy == DescentPolicy::TakeFirst) return i;
      found = i;
    }
  }
  return found;  // 0 only for the identity
}

}  // namespace

namespace detail {

Polynomial schubert_with_policy(const Permutation& w, DescentPolicy policy) {
  if (w.is_identity()) return Polynomial::constant(1);
  const int m = w.window();
  Exponents stair(static_cast<std::size_t>(m) - 1);
  for (int k = 0; k < m - 1; ++k) stair[static_cast<std::size_t>(k)] = m - 1 - k;
  Polynomial f = Polynomial::monomial(std::move(stair), 1);
  // w = w0 s_{j1} ... s_{jk} along descents of u = w^{-1} w0
  Permutation u = compose(w.inverse(), Permutation::longest_element(m));
  while (!u.is_identity()) {
    const int i = pick_descent(u, policy);
    f = divided_difference(f, i);
    u = u.times_transposition(i, i + 1);
  }
  return f;
}

}  // namespace detail

Polynomial schubert(const Permutation& w) {
  return detail::schubert_with_policy(w, DescentPolicy::TakeFirst);
}

Polynomial complete_symmetric(int d, int i) {
  if (d < 0 || i < 1) throw std::invalid_argument("complete_symmetric: need d >= 0, i >= 1");
  Polynomial out;
  Exponents e(static_cast<std::size_t>(i), 0);
  // all weak compositions of d into i parts
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == i) {
      if (remaining == 0) out.add_term(e, 1);
      return;
    }
    for (int t = 0; t <= remaining; ++t) {
      e[static_cast<std::size_t>(pos)] = t;
      self(self, pos + 1, remaining - t);
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, d);
  return out;
}

Polynomial elementary_symmetric(int d, int i) {
  if (d < 0 || i < 1) throw std::invalid_argument("elementary_symmetric: need d >= 0, i >= 1");
  if (d > i) return Polynomial();
  Polynomial out;
  Exponents e(static_cast<std::size_t>(i), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (remaining == 0) {
      out.add_term(e, 1);
      return;
    }
    if (pos == i || i - pos < remaining) return;
    e[static_cast<std::size_t>(pos)] = 1;
    self(self, pos + 1, remaining - 1);
    e[static_cast<std::size_t>(pos)] = 0;
    self(self, pos + 1, remaining);
  };
  rec(rec, 0, d);
  return out;
}

std::map<Permutation, mpz_class> expand_in_schubert_basis(const Polynomial& f) {
  std::map<Permutation, mpz_class> out;
  Polynomial rem = f;
  bool have_prev = false;
  Exponents prev;
  while (!rem.is_zero()) {
    const Exponents* extremal = nullptr;
    for (const auto& [e, c] : rem.terms())
      if (extremal == nullptr || revlex_compare(e, *extremal) > 0) extremal = &e;
    const Exponents code = *extremal;
    if (have_prev && revlex_compare(code, prev) >= 0)
      throw std::runtime_error("expand_in_schubert_basis: remainder failed to shrink at exponent tuple of size " +
                               std::to_string(code.size()));
    const Permutation v = Permutation::from_lehmer_code(code);
    std::vector<int> roundtrip = v.lehmer_code();
    while (!roundtrip.empty() && roundtrip.back() == 0) roundtrip.pop_back();
    if (roundtrip != code)
      throw std::runtime_error("expand_in_schubert_basis: extremal exponent is not a Lehmer code");
    const mpz_class c = rem.coefficient(code);
    rem -= schubert(v) * c;
    out.emplace(v, c);
    prev = code;
    have_prev = true;
  }
  return out;
}

}  // namespace kp

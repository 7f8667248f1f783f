#ifndef KP_POLYNOMIAL_HPP
#define KP_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace kp {

// Exponent tuples are trailing-zero free; x1^2*x2 is {2, 1}.
using Exponents = std::vector<int>;

// Reverse-lexicographic order on exponent tuples: the deepest position where
// the tuples differ decides, larger entry there wins.
std::strong_ordering revlex_compare(const Exponents& a, const Exponents& b);

int exponent_at(const Exponents& e, int i);  // 1-based, 0 beyond the tuple

/*
  Sparse multivariate polynomial over the integers.  Coefficients are exact
  arbitrary-precision values and zero coefficients are never stored, so ring
  identities hold on the nose.
*/
class Polynomial {
public:
  using Terms = std::map<Exponents, mpz_class>;

  Polynomial() = default;
  static Polynomial constant(mpz_class c);
  static Polynomial variable(int i);  // x_i, 1-based
  static Polynomial monomial(Exponents e, mpz_class c);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  mpz_class coefficient(const Exponents& e) const;
  int max_variable() const;

  Polynomial& add_term(Exponents e, const mpz_class& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const mpz_class& c) const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  bool operator==(const Polynomial&) const = default;

  // Substitute x_i <-> x_{i+1}.
  Polynomial swap_adjacent_variables(int i) const;
  mpz_class evaluate_all_ones() const;

  std::string to_string() const;

private:
  Terms terms_;
};

// (f - s_i f) / (x_i - x_{i+1}), computed exactly by pairing each monomial
// orbit under s_i with a telescopic geometric sum.  Never divides.
Polynomial divided_difference(const Polynomial& f, int i);

}  // namespace kp

#endif

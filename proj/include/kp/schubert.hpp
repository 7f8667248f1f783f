#ifndef KP_SCHUBERT_HPP
#define KP_SCHUBERT_HPP

#include <map>

#include "kp/permutation.hpp"
#include "kp/polynomial.hpp"

namespace kp {

// The Schubert polynomial of w: start from the staircase monomial of the
// longest element of the smallest S_m containing w and walk down by divided
// differences.  The result does not depend on the chosen path.
Polynomial schubert(const Permutation& w);

Polynomial complete_symmetric(int d, int i);    // h_d(x_1, ..., x_i)
Polynomial elementary_symmetric(int d, int i);  // e_d(x_1, ..., x_i); zero when d > i

// Write f as an integer combination of Schubert polynomials by greedy
// elimination of the revlex-extremal monomial (read as a Lehmer code).
// Throws if the remainder ever fails to shrink.
std::map<Permutation, mpz_class> expand_in_schubert_basis(const Polynomial& f);

enum class DescentPolicy { TakeFirst, TakeLast };

namespace detail {
// Exposed so tests can drive two different reduced words down from w0.
Polynomial schubert_with_policy(const Permutation& w, DescentPolicy policy);
}  // namespace detail

}  // namespace kp

#endif

#ifndef KP_WEDGE_HPP
#define KP_WEDGE_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kp/linear.hpp"
#include "kp/permutation.hpp"

namespace kp {

// Basis vector u_{row,col} of U, 1 <= row <= n, col any positive integer.
struct WedgeFactor {
  int row = 0;
  int col = 0;
  auto operator<=>(const WedgeFactor&) const = default;
};

/*
  Basis monomial of the exterior algebra T: a strictly increasing sequence of
  factors under the (row, col) pair order.  Every construction from an
  unordered factor list goes through from_unordered, the single sign
  authority, so act_e, e_prime and mu cannot disagree on conventions.

  The total order (degree first, then lexicographic on the flattened factor
  sequence) is the pivot order of all echelon spans.
*/
class WedgeMonomial {
public:
  WedgeMonomial() = default;  // the unit of T
  explicit WedgeMonomial(std::vector<WedgeFactor> sorted_factors);

  // Sorts the factors, returning the monomial and the parity of the sort,
  // or nullopt when a factor repeats (the wedge vanishes).
  static std::optional<std::pair<WedgeMonomial, int>> from_unordered(std::vector<WedgeFactor> factors);

  const std::vector<WedgeFactor>& factors() const { return factors_; }
  int degree() const { return static_cast<int>(factors_.size()); }
  std::vector<long> weight(int n) const;  // entry r counts factors in row r

  std::strong_ordering operator<=>(const WedgeMonomial& o) const {
    if (auto c = factors_.size() <=> o.factors_.size(); c != 0) return c;
    return factors_ <=> o.factors_;
  }
  bool operator==(const WedgeMonomial&) const = default;

  std::string to_string() const;  // e.g. "u[1,2]^u[2,3]", "1" for the unit

private:
  std::vector<WedgeFactor> factors_;
};

using SparseElement = LinearCombination<WedgeMonomial>;

// Action of the matrix unit e_{pq} (1 <= p <= q <= n) extended to T by the
// Leibniz rule: each factor in row q moves to row p.
SparseElement act_e(int p, int q, const SparseElement& x, int n);

// u_w, the wedge of u_{ij} over the inversion set of w in canonical factor
// order.  Requires w in S^(n).
SparseElement u_of(const Permutation& w, int n);

// f ^ x with the factor wedged on the left.
SparseElement wedge_left(WedgeFactor f, const SparseElement& x);

std::string to_string(const SparseElement& x);

}  // namespace kp

#endif

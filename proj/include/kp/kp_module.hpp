#ifndef KP_KP_MODULE_HPP
#define KP_KP_MODULE_HPP

#include <cstddef>
#include <vector>

#include "kp/linear.hpp"
#include "kp/polynomial.hpp"
#include "kp/wedge.hpp"

namespace kp {

using EchelonSpan = EchelonBasis<WedgeMonomial>;

// Smallest subspace of T containing the seeds and closed under e_{pq} for
// all 1 <= p <= q <= n.
EchelonSpan generate_span(const std::vector<SparseElement>& seeds, int n);

// Character of a span closed under the diagonal action: each echelon row is
// weight homogeneous, so pivot weights enumerate the weight spaces.
Polynomial character(const EchelonSpan& span, int n);

struct KpModuleReport {
  Permutation generator;
  int n = 0;
  std::size_t dimension = 0;
  Polynomial character;
};

// Build S_w = <u_w> under b_n and report dimension and character.
KpModuleReport kp_module_report(const Permutation& w, int n);

}  // namespace kp

#endif

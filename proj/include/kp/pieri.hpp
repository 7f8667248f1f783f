#ifndef KP_PIERI_HPP
#define KP_PIERI_HPP

#include <string>
#include <vector>

#include "kp/permutation.hpp"
#include "kp/polynomial.hpp"

namespace kp {

enum class PieriKind { X, Y };

char kind_letter(PieriKind kind);

struct CoverStep {
  int p = 0;
  int q = 0;  // p < q
  bool operator==(const CoverStep&) const = default;
};

/*
  A chain zeta = t_{p_1 q_1} ... t_{p_d q_d} of Bruhat covers out of w with
  p_j <= i < q_j, carried with its intermediate permutations.  Kind X chains
  have strictly increasing values w_j(p_j), kind Y chains strictly decreasing
  values w_j(q_j).
*/
struct PieriChain {
  PieriKind kind = PieriKind::X;
  Permutation base;
  int i = 0;
  std::vector<CoverStep> steps;
  std::vector<Permutation> perms;  // perms[j] = w_{j+1}; perms[0] = base, perms[d] = w zeta
  Permutation zeta;

  int depth() const { return static_cast<int>(steps.size()); }
  const Permutation& end() const { return perms.back(); }
};

std::vector<PieriChain> enumerate_x(const Permutation& w, int i, int d);
std::vector<PieriChain> enumerate_y(const Permutation& w, int i, int d);
std::vector<PieriChain> enumerate_chains(const Permutation& w, int i, int d, PieriKind kind);

// Order used by the filtration construction: increasing lexicographic (X)
// or reverse lexicographic (Y) order of (w zeta)^{-1}.
void sort_for_filtration(std::vector<PieriChain>& chains);

struct PieriVerification {
  bool ok = false;
  Polynomial lhs;  // S_w * h_d or S_w * e_d
  Polynomial rhs;  // sum of S_{w zeta}
  std::vector<Permutation> ends;
};

PieriVerification verify_pieri(const Permutation& w, int i, int d, PieriKind kind);

namespace detail {
// Search with the cover-column bound widened by `margin`; used to check that
// the production bound loses nothing.
std::vector<PieriChain> enumerate_with_margin(const Permutation& w, int i, int d, PieriKind kind, int margin);
}  // namespace detail

}  // namespace kp

#endif

#ifndef KP_TENSOR_HPP
#define KP_TENSOR_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "kp/kp_module.hpp"
#include "kp/linear.hpp"
#include "kp/pieri.hpp"
#include "kp/polynomial.hpp"
#include "kp/wedge.hpp"

namespace kp {

// Label basis of the second tensor factor: multisets (Sym, weakly
// increasing) for S^d(K^i), sets (Ext, strictly increasing) for Lambda^d(K^i).
enum class LabelKind { Sym, Ext };

LabelKind label_kind_for(PieriKind kind);  // X -> Sym, Y -> Ext

struct TensorKey {
  WedgeMonomial mono;
  std::vector<int> label;
  auto operator<=>(const TensorKey&) const = default;
};
using TensorElement = LinearCombination<TensorKey>;

// Basis of T (x) (K^i)^(tensor a); the tuple order is significant.
struct TupleKey {
  WedgeMonomial mono;
  std::vector<int> tuple;
  auto operator<=>(const TupleKey&) const = default;
};
using TensorPowerElement = LinearCombination<TupleKey>;

// Raised exception when a construction that the theory guarantees nonzero
// degenerates; callers treat it as a failed verification, not bad input.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// e_{pq} on S_w (x) S^d(K^i) or S_w (x) Lambda^d(K^i): Leibniz over the two
// factors; on labels one occurrence of q becomes p per summand.
TensorElement tensor_act(int p, int q, const TensorElement& x, LabelKind kind, int i, int n);

// e'_{qp} (p <= q): each factor in column p moves to column q.
SparseElement e_prime(int q, int p, const SparseElement& x);
TensorPowerElement e_prime(int q, int p, const TensorPowerElement& x);

// mu_j peels the first tuple slot v and wedges iota_j(v) = u_{v,j} on the
// left of the T part.  Rejects empty tuples.
TensorPowerElement mu(int j, const TensorPowerElement& x);

// Full (anti)symmetrization of a label over S_d, as an explicit element of
// the d-fold tensor power with unit T part.
TensorPowerElement embed_tensor(LabelKind kind, const std::vector<int>& label);

// v_zeta = (prod_j e_{p_j q_j}^{m_{p_j q_j}(w_j)} u_w) (x) label{p_1..p_d}.
// Operators with q_j > n must carry exponent zero and are skipped.
TensorElement build_v(const PieriChain& chain, int n);

// phi_zeta = mu_{q_d} ... mu_{q_1} prod_j (e'_{q_j p_j})^{m'_{q_j p_j}(w_j)},
// applied to the symmetrized expansion of x.  Lands in T.
SparseElement apply_phi(const PieriChain& chain, const TensorElement& x, int n);

using TensorSpan = EchelonBasis<TensorKey>;

TensorSpan close_tensor_span(const std::vector<TensorElement>& seeds, LabelKind kind, int i, int n);
Polynomial tensor_character(const TensorSpan& span, int n);

mpz_class binomial(long n, long k);

/*
  Zero pattern of phi_{zeta'}(v_zeta) over all ordered chain pairs, rows and
  columns sorted by the filtration order.  The construction demands a nonzero
  multiple of u_{w zeta} on the diagonal and zero strictly above it.
*/
struct TriangularityReport {
  Permutation w;
  int i = 0, d = 0;
  PieriKind kind = PieriKind::X;
  int n = 0;
  std::vector<PieriChain> chains;           // sorted
  std::vector<std::vector<bool>> nonzero;   // [row=zeta][col=zeta']
  std::vector<mpq_class> diagonal;          // observed constants c with phi(v) = c u_{w zeta}
  bool diagonal_ok = false;
  bool triangular_ok = false;
  std::string failure;  // empty when ok
  bool ok() const { return diagonal_ok && triangular_ok; }
};

TriangularityReport check_triangularity(const Permutation& w, int i, int d, PieriKind kind, int n);

struct QuotientInfo {
  Permutation end;
  std::size_t dim = 0;
  Polynomial character;
};

struct FiltrationReport {
  Permutation w;
  int i = 0, d = 0;
  PieriKind kind = PieriKind::X;
  int n = 0;
  std::vector<PieriChain> chains;  // in filtration order
  std::vector<std::size_t> ladder;  // dim <v_{zeta_1}, ..., v_{zeta_j}>, starting at 0
  std::vector<QuotientInfo> quotients;
  bool triangular = false;
  std::string verdict;  // "ok" or "fail:<item>"
  bool ok() const { return verdict == "ok"; }
};

/*
  Assemble the filtration 0 < <v_{zeta_1}> < <v_{zeta_1}, v_{zeta_2}> < ...
  of S_w (x) S^d(K^i) (X) or S_w (x) Lambda^d(K^i) (Y) and verify, step by
  step: the dimension ladder against dim S_{w zeta_j}, the quotient
  characters against Schubert polynomials, that phi_{zeta_j} kills the
  previous stage and maps the current one onto S_{w zeta_j}, and finally
  that the v_zeta generate the whole tensor product.
*/
FiltrationReport build_filtration(const Permutation& w, int i, int d, PieriKind kind, int n);

}  // namespace kp

#endif

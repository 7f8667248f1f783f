#include "kp/pieri.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "kp/schubert.hpp"

namespace kp {

char kind_letter(PieriKind kind) { return kind == PieriKind::X ? 'X' : 'Y'; }

namespace {

struct Search {
  PieriKind kind;
  Permutation base;
  int i;
  int d;
  int margin;
  std::vector<CoverStep> steps;
  std::vector<Permutation> perms;
  std::vector<PieriChain>* out;

  void emit() {
    PieriChain chain;
    chain.kind = kind;
    chain.base = base;
    chain.i = i;
    chain.steps = steps;
    chain.perms = perms;
    chain.zeta = Permutation::identity();
    for (const CoverStep& s : steps) chain.zeta = compose(chain.zeta, Permutation::transposition(s.p, s.q));
    if (compose(base, chain.zeta) != chain.end())
      throw std::logic_error("pieri search: zeta product does not reach the chain end");
    out->push_back(std::move(chain));
  }

  // last_value = w_j(p_j) (X) or w_j(q_j) (Y) of the step just taken
  void run(int last_value) {
    if (static_cast<int>(steps.size()) == d) {
      emit();
      return;
    }
    const Permutation z = perms.back();  // by value: the recursion grows perms
    // Covers w t_{pq} > w with p <= i < q force q <= max(window, i) + 1:
    // any larger q is blocked by the fixed point at q - 1.
    const int qmax = std::max(z.window(), i) + 1 + margin;
    for (int p = 1; p <= i; ++p) {
      const int vp = z(p);
      if (kind == PieriKind::X && vp <= last_value) continue;
      for (int q = i + 1; q <= qmax; ++q) {
        if (kind == PieriKind::Y && z(q) >= last_value) continue;
        if (!is_cover(z, p, q)) continue;
        steps.push_back({p, q});
        perms.push_back(z.times_transposition(p, q));
        run(kind == PieriKind::X ? vp : z(q));
        perms.pop_back();
        steps.pop_back();
      }
    }
  }
};

std::vector<PieriChain> enumerate_impl(const Permutation& w, int i, int d, PieriKind kind, int margin) {
  if (i < 1 || d < 0) throw std::invalid_argument("pieri enumeration: need i >= 1, d >= 0");
  std::vector<PieriChain> out;
  Search search{kind, w, i, d, margin, {}, {w}, &out};
  search.run(kind == PieriKind::X ? 0 : std::numeric_limits<int>::max());
  std::set<Permutation> zetas;
  for (const PieriChain& c : out)
    if (!zetas.insert(c.zeta).second)
      throw std::logic_error("pieri enumeration: duplicate zeta, decomposition not unique");
  return out;
}

}  // namespace

std::vector<PieriChain> enumerate_x(const Permutation& w, int i, int d) {
  return enumerate_impl(w, i, d, PieriKind::X, 0);
}

std::vector<PieriChain> enumerate_y(const Permutation& w, int i, int d) {
  return enumerate_impl(w, i, d, PieriKind::Y, 0);
}

std::vector<PieriChain> enumerate_chains(const Permutation& w, int i, int d, PieriKind kind) {
  return enumerate_impl(w, i, d, kind, 0);
}

namespace detail {
std::vector<PieriChain> enumerate_with_margin(const Permutation& w, int i, int d, PieriKind kind, int margin) {
  return enumerate_impl(w, i, d, kind, margin);
}
}  // namespace detail

void sort_for_filtration(std::vector<PieriChain>& chains) {
  std::sort(chains.begin(), chains.end(), [](const PieriChain& a, const PieriChain& b) {
    if (a.kind != b.kind) throw std::invalid_argument("sort_for_filtration: mixed chain kinds");
    const auto cmp = a.kind == PieriKind::X ? lex_compare_inverse(a.end(), b.end())
                                            : rlex_compare_inverse(a.end(), b.end());
    return cmp < 0;
  });
}

PieriVerification verify_pieri(const Permutation& w, int i, int d, PieriKind kind) {
  PieriVerification v;
  const Polynomial factor = kind == PieriKind::X ? complete_symmetric(d, i) : elementary_symmetric(d, i);
  v.lhs = schubert(w) * factor;
  for (const PieriChain& chain : enumerate_chains(w, i, d, kind)) {
    v.rhs += schubert(chain.end());
    v.ends.push_back(chain.end());
  }
  v.ok = v.lhs == v.rhs;
  return v;
}

}  // namespace kp

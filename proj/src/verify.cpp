#include "kp/verify.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "kp/kp_module.hpp"
#include "kp/pieri.hpp"
#include "kp/schubert.hpp"
#include "kp/tensor.hpp"

namespace kp {

namespace {

std::string fail_note(const std::string& what) { return what; }

struct ChainCase {
  Permutation w;
  int i = 0, d = 0;
  PieriKind kind = PieriKind::X;
  std::string key() const {
    return w.to_string() + " i=" + std::to_string(i) + " d=" + std::to_string(d) + " kind=" + kind_letter(kind);
  }
};

std::vector<ChainCase> chain_cases(int group, int max_i, const std::vector<int>& depths) {
  std::vector<ChainCase> cases;
  for (const Permutation& w : symmetric_group(group))
    for (int i = 1; i <= max_i; ++i)
      for (int d : depths)
        for (PieriKind kind : {PieriKind::X, PieriKind::Y}) cases.push_back({w, i, d, kind});
  return cases;
}

}  // namespace

std::vector<CaseOutcome> character_sweep(int group, int n, RunMode mode) {
  const std::vector<Permutation> cases = symmetric_group(group);
  return map_cases(cases, mode, [n](const Permutation& w) {
    CaseOutcome oc{w.to_string(), true, {}};
    const KpModuleReport report = kp_module_report(w, n);
    const Polynomial expected = schubert(w);
    if (report.character != expected)
      oc = {oc.key, false, "character != Schubert polynomial"};
    else if (mpz_class(static_cast<unsigned long>(report.dimension)) != expected.evaluate_all_ones())
      oc = {oc.key, false, "dimension != Schubert evaluation at 1"};
    return oc;
  });
}

std::vector<CaseOutcome> pieri_sweep(int group, int max_i, int max_d, RunMode mode) {
  std::vector<int> depths;
  for (int d = 0; d <= max_d; ++d) depths.push_back(d);
  const std::vector<ChainCase> cases = chain_cases(group, max_i, depths);
  return map_cases(cases, mode, [](const ChainCase& c) {
    CaseOutcome oc{c.key(), true, {}};
    const PieriVerification v = verify_pieri(c.w, c.i, c.d, c.kind);
    if (!v.ok) oc = {oc.key, false, "product identity failed"};
    return oc;
  });
}

std::vector<CaseOutcome> filtration_sweep(int group, int n, RunMode mode) {
  const std::vector<ChainCase> cases = chain_cases(group, 3, {1, 2});
  return map_cases(cases, mode, [n](const ChainCase& c) {
    CaseOutcome oc{c.key(), true, {}};
    const FiltrationReport report = build_filtration(c.w, c.i, c.d, c.kind, n);
    if (!report.ok()) oc = {oc.key, false, report.verdict};
    return oc;
  });
}

std::vector<CaseOutcome> triangularity_sweep(int group, int n, RunMode mode) {
  const std::vector<ChainCase> cases = chain_cases(group, 3, {1, 2});
  return map_cases(cases, mode, [n](const ChainCase& c) {
    CaseOutcome oc{c.key(), true, {}};
    const TriangularityReport report = check_triangularity(c.w, c.i, c.d, c.kind, n);
    if (!report.ok()) oc = {oc.key, false, report.failure};
    return oc;
  });
}

std::vector<CaseOutcome> micro_case_checks() {
  std::vector<CaseOutcome> out;

  {
    CaseOutcome oc{"module of s_2", true, {}};
    const KpModuleReport report = kp_module_report(Permutation({1, 3, 2}), 2);
    Polynomial expected = Polynomial::variable(1) + Polynomial::variable(2);
    if (report.dimension != 2)
      oc = {oc.key, false, "dimension != 2"};
    else if (report.character != expected)
      oc = {oc.key, false, "character != x1 + x2"};
    out.push_back(oc);
  }

  {
    // S_{1,3,2} (x) K^2 = S_{1,3,2} (x) S^1(K^2): two chains; the filtration
    // order puts end 1,4,2,3 (dimension 3) first, then end 2,3,1 (dimension 1).
    CaseOutcome oc{"filtration of S_{1,3,2} (x) K^2", true, {}};
    const FiltrationReport report = build_filtration(Permutation({1, 3, 2}), 2, 1, PieriKind::X, 4);
    const std::vector<std::size_t> expected_ladder{0, 3, 4};
    if (!report.ok())
      oc = {oc.key, false, report.verdict};
    else if (report.ladder != expected_ladder)
      oc = {oc.key, false, "ladder differs from (0, 3, 4)"};
    else if (report.quotients.size() != 2 || report.quotients[0].dim != 3 || report.quotients[1].dim != 1)
      oc = {oc.key, false, "quotient dimensions differ from (3, 1)"};
    else if (report.quotients[0].end != Permutation({1, 4, 2, 3}) || report.quotients[1].end != Permutation({2, 3, 1}))
      oc = {oc.key, false, "quotient ends differ"};
    out.push_back(oc);
  }

  return out;
}

std::vector<CaseOutcome> single_cover_wedge_sweep() {
  std::vector<CaseOutcome> out;
  const int n = 6;
  for (const Permutation& w : symmetric_group(4))
    for (int i = 1; i <= 5; ++i)
      for (int p = 1; p <= i; ++p)
        for (int q = i + 1; q <= 6; ++q) {
          if (!is_cover(w, p, q)) continue;
          for (int pp = 1; pp <= i; ++pp)
            for (int qq = i + 1; qq <= 6; ++qq) {
              if (!is_cover(w, pp, qq)) continue;
              std::ostringstream key;
              key << w.to_string() << " i=" << i << " (p,q)=(" << p << "," << q << ") (p',q')=(" << pp << "," << qq
                  << ")";
              CaseOutcome oc{key.str(), true, {}};
              SparseElement x = u_of(w, n);
              const int mprime = m_prime_value(w, qq, pp);
              for (int t = 0; t < mprime; ++t) x = e_prime(qq, pp, x);
              const int m = m_value(w, p, q);
              for (int t = 0; t < m; ++t) x = act_e(p, q, x, n);
              const SparseElement expr = wedge_left({p, qq}, x);
              if (!expr.is_zero() && (w(pp) < w(p) || w(qq) < w(q)))
                oc = {oc.key, false, "nonzero wedge with w(p') < w(p) or w(q') < w(q)"};
              if (p == pp && q == qq) {
                const SparseElement target = u_of(w.times_transposition(p, q), n);
                const bool multiple =
                    expr.term_count() == 1 && expr.leading() == target.leading();
                if (!multiple) oc = {oc.key, false, "diagonal case is not a nonzero multiple of u_{w t_pq}"};
              }
              out.push_back(oc);
            }
        }
  return out;
}

std::vector<CaseOutcome> m_invariance_sweep() {
  std::vector<CaseOutcome> out;
  for (const Permutation& w : symmetric_group(4))
    for (int i = 1; i <= 3; ++i)
      for (int d = 0; d <= 3; ++d)
        for (PieriKind kind : {PieriKind::X, PieriKind::Y})
          for (const PieriChain& chain : enumerate_chains(w, i, d, kind))
            for (int a = 0; a < chain.depth(); ++a) {
              bool earlier_repeat = false;
              for (int b = 0; b < a; ++b) {
                const bool same = kind == PieriKind::X
                                      ? chain.steps[static_cast<std::size_t>(b)].p == chain.steps[static_cast<std::size_t>(a)].p
                                      : chain.steps[static_cast<std::size_t>(b)].q == chain.steps[static_cast<std::size_t>(a)].q;
                if (same) earlier_repeat = true;
              }
              if (earlier_repeat) continue;
              const auto [p, q] = chain.steps[static_cast<std::size_t>(a)];
              const Permutation& wa = chain.perms[static_cast<std::size_t>(a)];
              std::ostringstream key;
              key << w.to_string() << " i=" << i << " d=" << d << " kind=" << kind_letter(kind) << " a=" << a + 1;
              CaseOutcome oc{key.str(), true, {}};
              if (m_value(wa, p, q) != m_value(w, p, q))
                oc = {oc.key, false, "m changed along the chain"};
              else if (m_prime_value(wa, q, p) != m_prime_value(w, q, p))
                oc = {oc.key, false, "m' changed along the chain"};
              out.push_back(oc);
            }
  return out;
}

std::vector<CaseOutcome> disjoint_cover_sweep() {
  std::vector<CaseOutcome> out;
  for (const Permutation& w : symmetric_group(4))
    for (int p = 1; p <= 6; ++p)
      for (int q = p + 1; q <= 6; ++q)
        for (int pp = 1; pp <= 6; ++pp)
          for (int qq = pp + 1; qq <= 6; ++qq) {
            if (pp == p || pp == q || qq == p || qq == q) continue;
            if (!is_cover(w, pp, qq)) continue;
            const Permutation wt = w.times_transposition(pp, qq);
            if (!is_cover(wt, p, q)) continue;
            std::ostringstream key;
            key << w.to_string() << " (p,q)=(" << p << "," << q << ") (p',q')=(" << pp << "," << qq << ")";
            CaseOutcome oc{key.str(), true, {}};
            if (m_value(wt, p, q) != m_value(w, p, q))
              oc = {oc.key, false, "m not preserved"};
            else if (m_prime_value(wt, q, p) != m_prime_value(w, q, p))
              oc = {oc.key, false, "m' not preserved"};
            else if (!is_cover(w, p, q))
              oc = {oc.key, false, "t_pq is not a cover of w"};
            out.push_back(oc);
          }
  return out;
}

namespace {

Polynomial random_polynomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> term_count(1, 6);
  std::uniform_int_distribution<int> exponent(0, 3);
  std::uniform_int_distribution<int> coeff(-9, 9);
  Polynomial f;
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    Exponents e(4);
    int degree = 0;
    for (auto& v : e) {
      v = exponent(rng);
      degree += v;
    }
    if (degree > 6) continue;
    f.add_term(std::move(e), coeff(rng));
  }
  return f;
}

SparseElement random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> mono_count(1, 3);
  std::uniform_int_distribution<int> degree(0, 3);
  std::uniform_int_distribution<int> row(1, n);
  std::uniform_int_distribution<int> col(1, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  SparseElement x;
  const int monos = mono_count(rng);
  for (int t = 0; t < monos; ++t) {
    std::vector<WedgeFactor> fs;
    const int deg = degree(rng);
    for (int k = 0; k < deg; ++k) fs.push_back({row(rng), col(rng)});
    const auto norm = WedgeMonomial::from_unordered(std::move(fs));
    if (!norm) continue;
    const int c = coeff(rng);
    if (c != 0) x.add_term(norm->first, c * norm->second);
  }
  return x;
}

void run_check(std::vector<CaseOutcome>& out, const std::string& key, bool pass, const std::string& detail) {
  out.push_back({key, pass, pass ? std::string() : detail});
}

}  // namespace

std::vector<CaseOutcome> structural_suite(unsigned seed) {
  std::vector<CaseOutcome> out;
  std::mt19937 rng(seed);

  // Divided differences square to zero and satisfy the braid relation.
  for (int sample = 0; sample < 200; ++sample) {
    const Polynomial f = random_polynomial(rng);
    bool nilpotent = true;
    for (int i = 1; i <= 3 && nilpotent; ++i)
      nilpotent = divided_difference(divided_difference(f, i), i).is_zero();
    const Polynomial lhs = divided_difference(divided_difference(divided_difference(f, 1), 2), 1);
    const Polynomial rhs = divided_difference(divided_difference(divided_difference(f, 2), 1), 2);
    run_check(out, "divided difference identities, sample " + std::to_string(sample), nilpotent && lhs == rhs,
              nilpotent ? "braid relation failed" : "square is not zero");
  }

  // [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb on T.
  const int n = 3;
  for (int sample = 0; sample < 100; ++sample) {
    const SparseElement x = random_element(rng, n);
    bool pass = true;
    for (int a = 1; a <= n && pass; ++a)
      for (int b = a; b <= n && pass; ++b)
        for (int c = 1; c <= n && pass; ++c)
          for (int d = c; d <= n && pass; ++d) {
            SparseElement lhs = act_e(a, b, act_e(c, d, x, n), n);
            lhs -= act_e(c, d, act_e(a, b, x, n), n);
            SparseElement rhs;
            if (b == c) rhs += act_e(a, d, x, n);
            if (d == a) rhs -= act_e(c, b, x, n);
            pass = lhs == rhs;
          }
    run_check(out, "bracket compatibility, sample " + std::to_string(sample), pass, "commutator mismatch");
  }

  // e_{pq} shifts weights by epsilon_p - epsilon_q on basis monomials.
  for (int sample = 0; sample < 100; ++sample) {
    const SparseElement x = random_element(rng, n);
    bool pass = true;
    for (const auto& [mono, c] : x.terms())
      for (int p = 1; p <= n && pass; ++p)
        for (int q = p; q <= n && pass; ++q) {
          const SparseElement image = act_e(p, q, SparseElement::unit(mono), n);
          std::vector<long> shifted = mono.weight(n);
          ++shifted[static_cast<std::size_t>(p) - 1];
          --shifted[static_cast<std::size_t>(q) - 1];
          for (const auto& [m2, c2] : image.terms())
            if (m2.weight(n) != shifted) pass = false;
        }
    run_check(out, "weight shift, sample " + std::to_string(sample), pass, "image left its weight space");
  }

  // The operator products in v_zeta and phi_zeta are order independent.
  for (const Permutation& w : symmetric_group(4))
    for (int i = 1; i <= 3; ++i)
      for (int d = 1; d <= 2; ++d)
        for (PieriKind kind : {PieriKind::X, PieriKind::Y})
          for (const PieriChain& chain : enumerate_chains(w, i, d, kind)) {
            const int nn = 4;
            SparseElement forward = u_of(w, nn);
            SparseElement backward = forward;
            for (int j = 0; j < chain.depth(); ++j) {
              const auto [p, q] = chain.steps[static_cast<std::size_t>(j)];
              const int m = q > nn ? 0 : m_value(chain.perms[static_cast<std::size_t>(j)], p, q);
              for (int t = 0; t < m; ++t) forward = act_e(p, q, forward, nn);
            }
            for (int j = chain.depth() - 1; j >= 0; --j) {
              const auto [p, q] = chain.steps[static_cast<std::size_t>(j)];
              const int m = q > nn ? 0 : m_value(chain.perms[static_cast<std::size_t>(j)], p, q);
              for (int t = 0; t < m; ++t) backward = act_e(p, q, backward, nn);
            }
            bool pass = forward == backward;
            SparseElement fwd_prime = u_of(w, nn);
            SparseElement bwd_prime = fwd_prime;
            for (int j = 0; j < chain.depth(); ++j) {
              const auto [p, q] = chain.steps[static_cast<std::size_t>(j)];
              const int m = m_prime_value(chain.perms[static_cast<std::size_t>(j)], q, p);
              for (int t = 0; t < m; ++t) fwd_prime = e_prime(q, p, fwd_prime);
            }
            for (int j = chain.depth() - 1; j >= 0; --j) {
              const auto [p, q] = chain.steps[static_cast<std::size_t>(j)];
              const int m = m_prime_value(chain.perms[static_cast<std::size_t>(j)], q, p);
              for (int t = 0; t < m; ++t) bwd_prime = e_prime(q, p, bwd_prime);
            }
            pass = pass && fwd_prime == bwd_prime;
            run_check(out,
                      "operator commutation, w=" + w.to_string() + " i=" + std::to_string(i) + " d=" +
                          std::to_string(d) + " kind=" + kind_letter(chain.kind),
                      pass, "operator order changed the result");
          }

  // phi and the tensor action commute on every v_zeta over the S_4 range.
  for (const Permutation& w : symmetric_group(4))
    for (int i = 1; i <= 3; ++i)
      for (int d = 1; d <= 2; ++d)
        for (PieriKind kind : {PieriKind::X, PieriKind::Y})
          for (const PieriChain& chain : enumerate_chains(w, i, d, kind)) {
            const int nn = 4;
            const TensorElement v = build_v(chain, nn);
            bool pass = true;
            for (int p = 1; p <= nn && pass; ++p)
              for (int q = p; q <= nn && pass; ++q) {
                const TensorElement moved = tensor_act(p, q, v, label_kind_for(kind), i, nn);
                pass = apply_phi(chain, moved, nn) == act_e(p, q, apply_phi(chain, v, nn), nn);
              }
            run_check(out,
                      "phi commutes with the action, w=" + w.to_string() + " i=" + std::to_string(i) + " d=" +
                          std::to_string(d) + " kind=" + kind_letter(kind) + " end=" + chain.end().to_string(),
                      pass, "phi is not equivariant on v_zeta");
          }

  // lex and rlex comparisons of inverses are total orders on S_4.
  {
    const std::vector<Permutation> group = symmetric_group(4);
    bool pass = true;
    std::string detail;
    const auto flip = [](std::strong_ordering o) {
      if (o < 0) return std::strong_ordering::greater;
      if (o > 0) return std::strong_ordering::less;
      return std::strong_ordering::equal;
    };
    for (const auto& a : group)
      for (const auto& b : group) {
        const auto lex = lex_compare_inverse(a, b);
        const auto rlex = rlex_compare_inverse(a, b);
        if ((lex == 0) != (a == b) || (rlex == 0) != (a == b)) {
          pass = false;
          detail = "comparison not antisymmetric";
        }
        if (lex_compare_inverse(b, a) != flip(lex) || rlex_compare_inverse(b, a) != flip(rlex)) {
          pass = false;
          detail = "comparison not skew";
        }
      }
    for (const auto& a : group)
      for (const auto& b : group)
        for (const auto& c : group) {
          if (lex_compare_inverse(a, b) < 0 && lex_compare_inverse(b, c) < 0 && lex_compare_inverse(a, c) >= 0) {
            pass = false;
            detail = "lex not transitive";
          }
          if (rlex_compare_inverse(a, b) < 0 && rlex_compare_inverse(b, c) < 0 && rlex_compare_inverse(a, c) >= 0) {
            pass = false;
            detail = "rlex not transitive";
          }
        }
    run_check(out, "order totality on S_4", pass, detail);
  }

  return out;
}

namespace {

CriterionResult summarize(int index, const std::string& name, const std::vector<CaseOutcome>& outcomes,
                          double seconds) {
  CriterionResult r;
  r.index = index;
  r.name = name;
  r.cases = static_cast<long>(outcomes.size());
  r.seconds = seconds;
  r.pass = true;
  for (const CaseOutcome& oc : outcomes)
    if (!oc.pass) {
      r.pass = false;
      if (r.detail.empty()) r.detail = oc.key + ": " + fail_note(oc.detail);
    }
  return r;
}

template <class Fn>
CriterionResult timed(int index, const std::string& name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<CaseOutcome> outcomes = fn();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return summarize(index, name, outcomes, elapsed.count());
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options) {
  const int chars_group = std::max(2, options.max_sn);
  const int chain_group = std::max(1, chars_group - 1);
  const int n_chars = chars_group - 1;
  const int n_filtr = 4;
  const RunMode mode = options.mode;

  std::vector<CriterionResult> results;
  results.push_back(timed(1,
                          "character theorem on S_" + std::to_string(chars_group) + " (n = " + std::to_string(n_chars) +
                              ")",
                          [&] { return character_sweep(chars_group, n_chars, mode); }));
  results.push_back(timed(2, "Pieri and dual Pieri identities on S_" + std::to_string(chain_group),
                          [&] { return pieri_sweep(chain_group, 3, 4, mode); }));
  results.push_back(timed(3,
                          "filtrations of S_w (x) S^d(K^i) and S_w (x) L^d(K^i) on S_" + std::to_string(chain_group) +
                              " (n = 4)",
                          [&] { return filtration_sweep(chain_group, n_filtr, mode); }));
  results.push_back(timed(4, "triangularity of the phi/v pairing on S_" + std::to_string(chain_group) + " (n = 4)",
                          [&] { return triangularity_sweep(chain_group, n_filtr, mode); }));
  results.push_back(timed(5, "worked micro-cases", [&] { return micro_case_checks(); }));
  results.push_back(timed(6, "cover and m-statistic sweeps", [&] {
    std::vector<CaseOutcome> all = single_cover_wedge_sweep();
    for (auto& oc : m_invariance_sweep()) all.push_back(std::move(oc));
    for (auto& oc : disjoint_cover_sweep()) all.push_back(std::move(oc));
    return all;
  }));
  results.push_back(
      timed(7, "structural identity suites (seed " + std::to_string(options.seed) + ")",
            [&] { return structural_suite(options.seed); }));
  return results;
}

}  // namespace kp

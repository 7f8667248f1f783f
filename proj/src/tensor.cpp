#include "kp/tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "kp/schubert.hpp"

namespace kp {

namespace {

// Sort a label with one out-of-place entry; Ext labels pick up the parity,
// Sym labels do not.  Returns 0 sign for a vanished Ext label.
std::pair<std::vector<int>, int> sort_label(std::vector<int> label, LabelKind kind) {
  int sign = 1;
  for (std::size_t a = 1; a < label.size(); ++a)
    for (std::size_t b = a; b > 0 && label[b] < label[b - 1]; --b) {
      std::swap(label[b], label[b - 1]);
      sign = -sign;
    }
  if (kind == LabelKind::Ext)
    for (std::size_t k = 1; k < label.size(); ++k)
      if (label[k] == label[k - 1]) return {std::move(label), 0};
  return {std::move(label), kind == LabelKind::Ext ? sign : 1};
}

int permutation_parity(const std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] > idx[b]) sign = -sign;
  return sign;
}

void validate_label(const std::vector<int>& label, LabelKind kind, int i) {
  for (std::size_t k = 0; k < label.size(); ++k) {
    if (label[k] < 1 || label[k] > i) throw std::invalid_argument("tensor label entry out of 1..i");
    if (k > 0 && (kind == LabelKind::Ext ? label[k] <= label[k - 1] : label[k] < label[k - 1]))
      throw std::invalid_argument("tensor label is not sorted for its kind");
  }
}

}  // namespace

LabelKind label_kind_for(PieriKind kind) { return kind == PieriKind::X ? LabelKind::Sym : LabelKind::Ext; }

TensorElement tensor_act(int p, int q, const TensorElement& x, LabelKind kind, int i, int n) {
  if (p < 1 || p > q || q > n) throw std::invalid_argument("tensor_act: need 1 <= p <= q <= n");
  if (i < 1 || i > n) throw std::invalid_argument("tensor_act: need 1 <= i <= n");
  TensorElement out;
  for (const auto& [key, c] : x.terms()) {
    // T factor
    const auto& fs = key.mono.factors();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (fs[k].row != q) continue;
      auto moved = fs;
      moved[k].row = p;
      if (auto norm = WedgeMonomial::from_unordered(std::move(moved)))
        out.add_term({std::move(norm->first), key.label}, c * norm->second);
    }
    // K^i factor: e_{pq} u_j = delta_{qj} u_p, one occurrence per summand
    for (std::size_t t = 0; t < key.label.size(); ++t) {
      if (key.label[t] != q) continue;  // entries are <= i, so q > i contributes nothing
      auto relabeled = key.label;
      relabeled[t] = p;
      auto [sorted, sign] = sort_label(std::move(relabeled), kind);
      if (sign != 0) out.add_term({key.mono, std::move(sorted)}, c * sign);
    }
  }
  return out;
}

namespace {

template <class Key>
LinearCombination<Key> e_prime_impl(int q, int p, const LinearCombination<Key>& x) {
  if (p < 1 || p > q) throw std::invalid_argument("e_prime: need 1 <= p <= q");
  LinearCombination<Key> out;
  for (const auto& [key, c] : x.terms()) {
    const auto& fs = [&]() -> const std::vector<WedgeFactor>& {
      if constexpr (std::is_same_v<Key, WedgeMonomial>)
        return key.factors();
      else
        return key.mono.factors();
    }();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (fs[k].col != p) continue;
      auto moved = fs;
      moved[k].col = q;
      auto norm = WedgeMonomial::from_unordered(std::move(moved));
      if (!norm) continue;
      if constexpr (std::is_same_v<Key, WedgeMonomial>)
        out.add_term(std::move(norm->first), c * norm->second);
      else
        out.add_term({std::move(norm->first), key.tuple}, c * norm->second);
    }
  }
  return out;
}

}  // namespace

SparseElement e_prime(int q, int p, const SparseElement& x) { return e_prime_impl<WedgeMonomial>(q, p, x); }

TensorPowerElement e_prime(int q, int p, const TensorPowerElement& x) { return e_prime_impl<TupleKey>(q, p, x); }

TensorPowerElement mu(int j, const TensorPowerElement& x) {
  if (j < 1) throw std::invalid_argument("mu: need j >= 1");
  TensorPowerElement out;
  for (const auto& [key, c] : x.terms()) {
    if (key.tuple.empty()) throw std::invalid_argument("mu: tensor power degree is zero");
    const WedgeFactor lifted{key.tuple.front(), j};
    std::vector<WedgeFactor> fs;
    fs.reserve(key.mono.factors().size() + 1);
    fs.push_back(lifted);
    fs.insert(fs.end(), key.mono.factors().begin(), key.mono.factors().end());
    if (auto norm = WedgeMonomial::from_unordered(std::move(fs))) {
      std::vector<int> rest(key.tuple.begin() + 1, key.tuple.end());
      out.add_term({std::move(norm->first), std::move(rest)}, c * norm->second);
    }
  }
  return out;
}

TensorPowerElement embed_tensor(LabelKind kind, const std::vector<int>& label) {
  const std::size_t d = label.size();
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  TensorPowerElement out;
  do {
    std::vector<int> tuple(d);
    for (std::size_t k = 0; k < d; ++k) tuple[k] = label[static_cast<std::size_t>(idx[k])];
    const int sign = kind == LabelKind::Ext ? permutation_parity(idx) : 1;
    out.add_term({WedgeMonomial(), std::move(tuple)}, sign);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

TensorElement build_v(const PieriChain& chain, int n) {
  SparseElement t_part = u_of(chain.base, n);
  for (int j = 0; j < chain.depth(); ++j) {
    const auto [p, q] = chain.steps[static_cast<std::size_t>(j)];
    const int exponent = m_value(chain.perms[static_cast<std::size_t>(j)], p, q);
    if (q > n) {
      if (exponent != 0) throw std::logic_error("build_v: positive exponent for a column beyond n");
      continue;
    }
    for (int t = 0; t < exponent; ++t) t_part = act_e(p, q, t_part, n);
  }
  if (t_part.is_zero()) throw VerificationError("build_v: the T part of v_zeta vanished");
  std::vector<int> label;
  for (const CoverStep& s : chain.steps) label.push_back(s.p);
  auto [sorted, sign] = sort_label(std::move(label), label_kind_for(chain.kind));
  if (sign == 0) throw std::logic_error("build_v: repeated p in a Y chain");
  TensorElement v;
  for (const auto& [mono, c] : t_part.terms()) v.add_term({mono, sorted}, c);
  return v;
}

SparseElement apply_phi(const PieriChain& chain, const TensorElement& x, int n) {
  if (chain.i > n) throw std::invalid_argument("apply_phi: chain column split exceeds n");
  const LabelKind kind = label_kind_for(chain.kind);
  TensorPowerElement y;
  for (const auto& [key, c] : x.terms()) {
    if (static_cast<int>(key.label.size()) != chain.depth())
      throw std::invalid_argument("apply_phi: label degree does not match the chain");
    const TensorPowerElement expanded = embed_tensor(kind, key.label);
    for (const auto& [tk, s] : expanded.terms()) y.add_term({key.mono, tk.tuple}, c * s);
  }
  for (int j = 0; j < chain.depth(); ++j) {
    const auto [p, q] = chain.steps[static_cast<std::size_t>(j)];
    const int exponent = m_prime_value(chain.perms[static_cast<std::size_t>(j)], q, p);
    for (int t = 0; t < exponent; ++t) y = e_prime(q, p, y);
  }
  for (int j = 0; j < chain.depth(); ++j) y = mu(chain.steps[static_cast<std::size_t>(j)].q, y);
  SparseElement out;
  for (const auto& [key, c] : y.terms()) {
    if (!key.tuple.empty()) throw std::logic_error("apply_phi: tensor power not fully consumed");
    out.add_term(key.mono, c);
  }
  return out;
}

TensorSpan close_tensor_span(const std::vector<TensorElement>& seeds, LabelKind kind, int i, int n) {
  for (const auto& seed : seeds)
    for (const auto& [key, c] : seed.terms()) validate_label(key.label, kind, i);
  std::vector<LinearOperator<TensorKey>> ops;
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q)
      ops.push_back([p, q, kind, i, n](const TensorElement& x) { return tensor_act(p, q, x, kind, i, n); });
  TensorSpan span;
  close_under(span, seeds, ops);
  return span;
}

Polynomial tensor_character(const TensorSpan& span, int n) {
  Polynomial ch;
  for (const auto& row : span.rows()) {
    const auto weight_of = [n](const TensorKey& key) {
      std::vector<long> lambda = key.mono.weight(n);
      for (int entry : key.label) ++lambda[static_cast<std::size_t>(entry) - 1];
      return lambda;
    };
    const std::vector<long> lambda = weight_of(row.leading());
    for (const auto& [key, c] : row.terms())
      if (weight_of(key) != lambda) throw std::logic_error("tensor_character: row is not weight homogeneous");
    Exponents e(lambda.begin(), lambda.end());
    ch.add_term(std::move(e), 1);
  }
  return ch;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

TriangularityReport check_triangularity(const Permutation& w, int i, int d, PieriKind kind, int n) {
  TriangularityReport report;
  report.w = w;
  report.i = i;
  report.d = d;
  report.kind = kind;
  report.n = n;
  report.chains = enumerate_chains(w, i, d, kind);
  sort_for_filtration(report.chains);
  const std::size_t r = report.chains.size();
  report.nonzero.assign(r, std::vector<bool>(r, false));
  report.diagonal.assign(r, 0);
  report.diagonal_ok = true;
  report.triangular_ok = true;
  for (std::size_t row = 0; row < r; ++row) {
    TensorElement v;
    try {
      v = build_v(report.chains[row], n);
    } catch (const VerificationError& e) {
      report.diagonal_ok = false;
      report.failure = e.what();
      continue;
    }
    for (std::size_t col = 0; col < r; ++col) {
      const SparseElement image = apply_phi(report.chains[col], v, n);
      report.nonzero[row][col] = !image.is_zero();
      if (row == col) {
        const SparseElement expected = u_of(report.chains[row].end(), n);
        const bool is_multiple = image.term_count() == 1 && image.leading() == expected.leading();
        if (is_multiple) {
          report.diagonal[row] = image.leading_coefficient();
        } else {
          report.diagonal_ok = false;
          if (report.failure.empty())
            report.failure = "phi(v) is not a nonzero multiple of u_{w zeta} at chain " + std::to_string(row);
        }
      } else if (row < col && report.nonzero[row][col]) {
        report.triangular_ok = false;
        if (report.failure.empty())
          report.failure = "phi_{zeta'}(v_zeta) != 0 at pair (" + std::to_string(row) + ", " + std::to_string(col) + ")";
      }
    }
  }
  return report;
}

FiltrationReport build_filtration(const Permutation& w, int i, int d, PieriKind kind, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("build_filtration: need 1 <= i <= n");
  if (d < 0) throw std::invalid_argument("build_filtration: need d >= 0");
  if (!w.in_s_paren(n)) throw std::invalid_argument("build_filtration: w is not in S^(n)");

  FiltrationReport report;
  report.w = w;
  report.i = i;
  report.d = d;
  report.kind = kind;
  report.n = n;
  report.chains = enumerate_chains(w, i, d, kind);
  sort_for_filtration(report.chains);
  report.ladder.push_back(0);
  report.verdict = "ok";

  const LabelKind lkind = label_kind_for(kind);
  const std::size_t dim_w = generate_span({u_of(w, n)}, n).dimension();
  const mpz_class factor_dim = kind == PieriKind::X ? binomial(i + d - 1, d) : binomial(i, d);

  const TriangularityReport tri = check_triangularity(w, i, d, kind, n);
  report.triangular = tri.ok();

  auto fail = [&](const std::string& item) {
    if (report.verdict == "ok") report.verdict = "fail:" + item;
  };

  std::vector<LinearOperator<TensorKey>> ops;
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q)
      ops.push_back([p, q, lkind, i, n](const TensorElement& x) { return tensor_act(p, q, x, lkind, i, n); });

  TensorSpan span;
  std::vector<TensorElement> previous_rows;
  Polynomial previous_character;
  for (const PieriChain& chain : report.chains) {
    TensorElement v;
    try {
      v = build_v(chain, n);
    } catch (const VerificationError&) {
      fail("v-zero");
      break;
    }
    close_under(span, {v}, ops);
    report.ladder.push_back(span.dimension());

    const Permutation& end = chain.end();
    const EchelonSpan quotient_module = generate_span({u_of(end, n)}, n);
    const Polynomial current_character = tensor_character(span, n);
    const Polynomial character_step = current_character - previous_character;

    QuotientInfo info;
    info.end = end;
    info.dim = span.dimension() - report.ladder[report.ladder.size() - 2];
    info.character = character_step;
    report.quotients.push_back(info);

    if (info.dim != quotient_module.dimension()) fail("dimension");
    if (character_step != schubert(end)) fail("character");

    // phi_{zeta_j} must vanish on the previous stage and carry the current
    // stage onto the span of S_{w zeta_j}.
    for (const TensorElement& row : previous_rows)
      if (!apply_phi(chain, row, n).is_zero()) {
        fail("phi-kernel");
        break;
      }
    EchelonSpan image;
    for (const TensorElement& row : span.rows()) {
      const SparseElement mapped = apply_phi(chain, row, n);
      if (!quotient_module.contains(mapped)) {
        fail("phi-image");
        break;
      }
      image.insert(mapped);
    }
    if (image.dimension() != quotient_module.dimension()) fail("phi-rank");

    previous_rows = span.rows();
    previous_character = current_character;
  }

  const mpz_class expected_total = mpz_class(static_cast<unsigned long>(dim_w)) * factor_dim;
  if (mpz_class(static_cast<unsigned long>(span.dimension())) != expected_total) fail("generation");
  if (!report.triangular) fail("triangularity");
  return report;
}

}  // namespace kp

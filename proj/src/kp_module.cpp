#include "kp/kp_module.hpp"

#include <stdexcept>

namespace kp {

namespace {

std::vector<LinearOperator<WedgeMonomial>> raising_operators(int n) {
  std::vector<LinearOperator<WedgeMonomial>> ops;
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q)
      ops.push_back([p, q, n](const SparseElement& x) { return act_e(p, q, x, n); });
  return ops;
}

}  // namespace

EchelonSpan generate_span(const std::vector<SparseElement>& seeds, int n) {
  if (n < 1) throw std::invalid_argument("generate_span: need n >= 1");
  EchelonSpan span;
  close_under(span, seeds, raising_operators(n));
  return span;
}

Polynomial character(const EchelonSpan& span, int n) {
  Polynomial ch;
  for (const auto& row : span.rows()) {
    const std::vector<long> lambda = row.leading().weight(n);
    for (const auto& [mono, c] : row.terms())
      if (mono.weight(n) != lambda)
        throw std::logic_error("character: echelon row is not weight homogeneous");
    Exponents e(lambda.begin(), lambda.end());
    ch.add_term(std::move(e), 1);
  }
  return ch;
}

KpModuleReport kp_module_report(const Permutation& w, int n) {
  KpModuleReport report;
  report.generator = w;
  report.n = n;
  const EchelonSpan span = generate_span({u_of(w, n)}, n);
  report.dimension = span.dimension();
  report.character = character(span, n);
  return report;
}

}  // namespace kp

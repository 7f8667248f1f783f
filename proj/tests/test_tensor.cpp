#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kp/schubert.hpp"
#include "kp/tensor.hpp"

using namespace kp;

namespace {

Permutation perm(std::vector<int> im) { return Permutation(std::move(im)); }

WedgeMonomial mono(std::vector<WedgeFactor> fs) { return WedgeMonomial(std::move(fs)); }

TensorElement tensor_unit(std::vector<WedgeFactor> fs, std::vector<int> label, mpq_class c = 1) {
  return TensorElement::unit({mono(std::move(fs)), std::move(label)}, c);
}

TensorPowerElement power_unit(std::vector<WedgeFactor> fs, std::vector<int> tuple, mpq_class c = 1) {
  return TensorPowerElement::unit({mono(std::move(fs)), std::move(tuple)}, c);
}

PieriChain the_chain(const Permutation& w, int i, int d, PieriKind kind, const std::vector<CoverStep>& steps) {
  for (const PieriChain& chain : enumerate_chains(w, i, d, kind))
    if (chain.steps == steps) return chain;
  throw std::runtime_error("chain not found");
}

}  // namespace

TEST_CASE("tensor action acts on both factors") {
  const int i = 2, n = 2;
  CHECK(tensor_act(1, 2, tensor_unit({}, {2}), LabelKind::Sym, i, n) == tensor_unit({}, {1}));
  CHECK(tensor_act(1, 2, tensor_unit({}, {1}), LabelKind::Sym, i, n).is_zero());
  CHECK(tensor_act(1, 2, tensor_unit({{2, 3}}, {2}), LabelKind::Sym, i, n) ==
        tensor_unit({{1, 3}}, {2}) + tensor_unit({{2, 3}}, {1}));
  // repeated symmetric entries pick up multiplicity
  CHECK(tensor_act(1, 2, tensor_unit({}, {2, 2}), LabelKind::Sym, i, n) == tensor_unit({}, {1, 2}, 2));
  // exterior labels vanish on repeats and track sign
  CHECK(tensor_act(1, 2, tensor_unit({}, {1, 2}), LabelKind::Ext, i, n).is_zero());
  CHECK(tensor_act(1, 3, tensor_unit({}, {2, 3}), LabelKind::Ext, 3, 3) == tensor_unit({}, {1, 2}, -1));
  CHECK_THROWS_AS(tensor_act(1, 3, tensor_unit({}, {1}), LabelKind::Sym, 2, 2), std::invalid_argument);
}

TEST_CASE("column raising operator") {
  CHECK(e_prime(3, 1, SparseElement::unit(mono({{2, 1}}))) == SparseElement::unit(mono({{2, 3}})));
  CHECK(e_prime(2, 1, SparseElement::unit(mono({{1, 3}}))).is_zero());
  CHECK(e_prime(3, 2, SparseElement::unit(mono({{1, 2}, {3, 2}}))) ==
        SparseElement::unit(mono({{1, 3}, {3, 2}})) + SparseElement::unit(mono({{1, 2}, {3, 3}})));
  CHECK_THROWS_AS(e_prime(1, 2, SparseElement::unit(mono({{1, 2}}))), std::invalid_argument);
}

TEST_CASE("mu peels the first slot onto the left of the wedge") {
  CHECK(mu(3, power_unit({}, {1})) == power_unit({{1, 3}}, {}));
  CHECK(mu(2, power_unit({{1, 2}}, {1})).is_zero());
  CHECK(mu(3, power_unit({{1, 2}}, {1})) == power_unit({{1, 2}, {1, 3}}, {}, -1));
  CHECK_THROWS_AS(mu(3, power_unit({}, {})), std::invalid_argument);
}

TEST_CASE("label symmetrization") {
  CHECK(embed_tensor(LabelKind::Sym, {1, 1}) == power_unit({}, {1, 1}, 2));
  CHECK(embed_tensor(LabelKind::Sym, {1, 2}) == power_unit({}, {1, 2}) + power_unit({}, {2, 1}));
  CHECK(embed_tensor(LabelKind::Ext, {1, 2}) == power_unit({}, {1, 2}) + power_unit({}, {2, 1}, -1));
  CHECK(embed_tensor(LabelKind::Sym, {}) == power_unit({}, {}));
}

TEST_CASE("generating vectors v_zeta") {
  {
    const PieriChain chain = the_chain(perm({2, 1}), 1, 1, PieriKind::X, {{1, 3}});
    CHECK(build_v(chain, 4) == tensor_unit({{1, 2}}, {1}));
  }
  {
    const PieriChain chain = the_chain(perm({2, 3, 1}), 2, 0, PieriKind::X, {});
    CHECK(build_v(chain, 4) == tensor_unit({{1, 3}, {2, 3}}, {}));
  }
  {
    // exponents m_{12}(1) and m_{13}(2,1) both vanish
    const PieriChain chain = the_chain(Permutation::identity(), 1, 2, PieriKind::X, {{1, 2}, {1, 3}});
    CHECK(build_v(chain, 4) == tensor_unit({}, {1, 1}));
  }
  {
    // m_{12}(1,3,2) = 1: one raising operator application survives
    const PieriChain chain = the_chain(perm({1, 3, 2}), 1, 1, PieriKind::X, {{1, 2}});
    CHECK(m_value(perm({1, 3, 2}), 1, 2) == 1);
    CHECK(build_v(chain, 4) == tensor_unit({{1, 3}}, {1}));
  }
}

TEST_CASE("phi on worked examples") {
  {
    const PieriChain chain = the_chain(perm({2, 1}), 1, 1, PieriKind::X, {{1, 3}});
    const TensorElement v = build_v(chain, 4);
    const SparseElement image = apply_phi(chain, v, 4);
    CHECK(image == SparseElement::unit(mono({{1, 2}, {1, 3}}), -1));
    CHECK(image.leading() == u_of(perm({3, 1, 2}), 4).leading());
  }
  {
    const PieriChain chain = the_chain(perm({2, 3, 1}), 2, 0, PieriKind::X, {});
    CHECK(apply_phi(chain, build_v(chain, 4), 4) == u_of(perm({2, 3, 1}), 4));
    CHECK(apply_phi(chain, TensorElement(), 4).is_zero());
  }
  {
    const PieriChain chain = the_chain(Permutation::identity(), 1, 2, PieriKind::X, {{1, 2}, {1, 3}});
    const SparseElement image = apply_phi(chain, build_v(chain, 4), 4);
    CHECK(image == SparseElement::unit(mono({{1, 2}, {1, 3}}), -2));
  }
}

TEST_CASE("phi and the operators commute with the algebra action") {
  const int n = 4;
  for (const Permutation& w : symmetric_group(3))
    for (int i = 1; i <= 2; ++i)
      for (int d = 1; d <= 2; ++d)
        for (PieriKind kind : {PieriKind::X, PieriKind::Y})
          for (const PieriChain& chain : enumerate_chains(w, i, d, kind)) {
            const TensorElement v = build_v(chain, n);
            for (int p = 1; p <= n; ++p)
              for (int q = p; q <= n; ++q) {
                const TensorElement moved = tensor_act(p, q, v, label_kind_for(kind), i, n);
                CHECK(apply_phi(chain, moved, n) == act_e(p, q, apply_phi(chain, v, n), n));
              }
          }
}

TEST_CASE("triangularity worked examples") {
  {
    const TriangularityReport report = check_triangularity(perm({2, 1}), 1, 1, PieriKind::X, 4);
    REQUIRE(report.chains.size() == 1);
    CHECK(report.ok());
    CHECK(report.nonzero == std::vector<std::vector<bool>>{{true}});
    CHECK(report.diagonal[0] != 0);
  }
  {
    const TriangularityReport report = check_triangularity(perm({1, 3, 2}), 2, 1, PieriKind::X, 4);
    REQUIRE(report.chains.size() == 2);
    CHECK(report.ok());
    CHECK(report.chains[0].end() == perm({1, 4, 2, 3}));
    CHECK(report.chains[1].end() == perm({2, 3, 1}));
    CHECK(report.nonzero == std::vector<std::vector<bool>>{{true, false}, {true, true}});
  }
  {
    const TriangularityReport report = check_triangularity(perm({2, 3, 1}), 2, 0, PieriKind::Y, 4);
    REQUIRE(report.chains.size() == 1);
    CHECK(report.ok());
  }
}

TEST_CASE("filtration worked examples") {
  {
    const FiltrationReport report = build_filtration(perm({2, 1}), 1, 1, PieriKind::X, 4);
    CHECK(report.ok());
    CHECK(report.ladder == std::vector<std::size_t>{0, 1});
    REQUIRE(report.quotients.size() == 1);
    CHECK(report.quotients[0].end == perm({3, 1, 2}));
    CHECK(report.quotients[0].dim == 1);
  }
  {
    // the increasing inverse-lex order forces end 1,4,2,3 (dimension 3) first
    const FiltrationReport report = build_filtration(perm({1, 3, 2}), 2, 1, PieriKind::X, 4);
    CHECK(report.ok());
    CHECK(report.triangular);
    CHECK(report.ladder == std::vector<std::size_t>{0, 3, 4});
    REQUIRE(report.quotients.size() == 2);
    CHECK(report.quotients[0].end == perm({1, 4, 2, 3}));
    CHECK(report.quotients[0].dim == 3);
    CHECK(report.quotients[0].character == schubert(perm({1, 4, 2, 3})));
    CHECK(report.quotients[1].end == perm({2, 3, 1}));
    CHECK(report.quotients[1].dim == 1);
  }
  {
    // d = 0: a single step carrying S_w itself
    const FiltrationReport report = build_filtration(perm({2, 1}), 1, 0, PieriKind::X, 4);
    CHECK(report.ok());
    CHECK(report.ladder == std::vector<std::size_t>{0, 1});
    CHECK(report.quotients[0].end == perm({2, 1}));
  }
  {
    // Lambda^2(K^1) = 0: no chains, zero module
    const FiltrationReport report = build_filtration(perm({2, 1}), 1, 2, PieriKind::Y, 4);
    CHECK(report.ok());
    CHECK(report.ladder == std::vector<std::size_t>{0});
    CHECK(report.quotients.empty());
  }
}

TEST_CASE("dimension bookkeeping over S_3") {
  for (const Permutation& w : symmetric_group(3))
    for (int i = 1; i <= 3; ++i)
      for (int d = 1; d <= 2; ++d)
        for (PieriKind kind : {PieriKind::X, PieriKind::Y}) {
          const FiltrationReport report = build_filtration(w, i, d, kind, 4);
          CHECK(report.ok());
          const mpz_class factor_dim = kind == PieriKind::X ? binomial(i + d - 1, d) : binomial(i, d);
          const mpz_class total = schubert(w).evaluate_all_ones() * factor_dim;
          CHECK(mpz_class(static_cast<unsigned long>(report.ladder.back())) == total);
          mpz_class sum = 0;
          for (const QuotientInfo& q : report.quotients) sum += schubert(q.end).evaluate_all_ones();
          CHECK(sum == total);
        }
}

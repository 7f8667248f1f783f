#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kp/kp_module.hpp"
#include "kp/schubert.hpp"
#include "kp/wedge.hpp"

using namespace kp;

namespace {

WedgeMonomial mono(std::vector<WedgeFactor> fs) { return WedgeMonomial(std::move(fs)); }

SparseElement unit(std::vector<WedgeFactor> fs) { return SparseElement::unit(mono(std::move(fs))); }

}  // namespace

TEST_CASE("wedge normalization is the single sign authority") {
  {
    const auto norm = WedgeMonomial::from_unordered({{2, 3}, {1, 2}});
    REQUIRE(norm.has_value());
    CHECK(norm->first == mono({{1, 2}, {2, 3}}));
    CHECK(norm->second == -1);
  }
  {
    const auto norm = WedgeMonomial::from_unordered({{1, 2}, {1, 2}});
    CHECK_FALSE(norm.has_value());
  }
  {
    const auto norm = WedgeMonomial::from_unordered({{3, 1}, {2, 1}, {1, 1}});
    REQUIRE(norm.has_value());
    CHECK(norm->second == -1);  // three factors reversed: parity of 3 swaps
  }
  CHECK_THROWS_AS(mono({{2, 3}, {1, 2}}), std::invalid_argument);
  CHECK(mono({}).degree() == 0);
  CHECK(mono({}).to_string() == "1");
}

TEST_CASE("pivot order is graded then lexicographic") {
  CHECK(mono({}) < mono({{1, 1}}));
  CHECK(mono({{9, 9}}) < mono({{1, 1}, {1, 2}}));
  CHECK(mono({{1, 1}, {2, 1}}) < mono({{1, 1}, {2, 2}}));
}

TEST_CASE("raising action on basis factors") {
  const int n = 3;
  CHECK(act_e(1, 2, unit({{2, 3}}), n) == unit({{1, 3}}));
  CHECK(act_e(1, 2, unit({{1, 3}}), n).is_zero());
  CHECK(act_e(1, 2, unit({{1, 2}, {2, 3}}), n) == unit({{1, 2}, {1, 3}}));
  // diagonal entries count factors in their row
  CHECK(act_e(2, 2, unit({{2, 3}}), n) == unit({{2, 3}}));
  CHECK(act_e(1, 1, unit({{2, 3}}), n).is_zero());
  CHECK_THROWS_AS(act_e(1, 4, unit({{2, 3}}), 3), std::invalid_argument);
  CHECK_THROWS_AS(act_e(2, 1, unit({{2, 3}}), 3), std::invalid_argument);
}

TEST_CASE("highest weight vectors u_w") {
  CHECK(u_of(Permutation::identity(), 2) == SparseElement::unit(WedgeMonomial()));
  CHECK(u_of(Permutation({2, 1}), 2) == unit({{1, 2}}));
  CHECK(u_of(Permutation({3, 2, 1}), 3) == unit({{1, 2}, {1, 3}, {2, 3}}));
  CHECK_THROWS_AS(u_of(Permutation({1, 3, 2}), 1), std::invalid_argument);
}

TEST_CASE("span generation worked examples") {
  {
    const EchelonSpan span = generate_span({u_of(Permutation({1, 3, 2}), 2)}, 2);
    CHECK(span.dimension() == 2);
    CHECK(span.contains(unit({{2, 3}})));
    CHECK(span.contains(unit({{1, 3}})));
  }
  {
    const EchelonSpan span = generate_span({u_of(Permutation({3, 2, 1}), 3)}, 3);
    CHECK(span.dimension() == 1);
  }
  CHECK(generate_span({}, 3).dimension() == 0);
}

TEST_CASE("characters of worked examples") {
  {
    const KpModuleReport report = kp_module_report(Permutation({1, 3, 2}), 2);
    CHECK(report.dimension == 2);
    CHECK(report.character == Polynomial::variable(1) + Polynomial::variable(2));
  }
  {
    const KpModuleReport report = kp_module_report(Permutation({3, 2, 1}), 3);
    CHECK(report.character == schubert(Permutation({3, 2, 1})));
  }
  CHECK(character(generate_span({}, 2), 2).is_zero());
}

TEST_CASE("character theorem over S_4 with n = 3") {
  for (const Permutation& w : symmetric_group(4)) {
    const KpModuleReport report = kp_module_report(w, 3);
    const Polynomial expected = schubert(w);
    CHECK(report.character == expected);
    CHECK(mpz_class(static_cast<unsigned long>(report.dimension)) == expected.evaluate_all_ones());
  }
}

TEST_CASE("weight shifts on basis monomials") {
  const int n = 3;
  const WedgeMonomial m = mono({{2, 1}, {3, 2}});
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q) {
      const SparseElement image = act_e(p, q, SparseElement::unit(m), n);
      std::vector<long> shifted = m.weight(n);
      ++shifted[static_cast<std::size_t>(p) - 1];
      --shifted[static_cast<std::size_t>(q) - 1];
      for (const auto& [m2, c] : image.terms()) CHECK(m2.weight(n) == shifted);
    }
}

TEST_CASE("bracket compatibility on random elements") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> row(1, 3), col(1, 4), coeff(-3, 3), deg(0, 3), cnt(1, 3);
  const int n = 3;
  for (int sample = 0; sample < 25; ++sample) {
    SparseElement x;
    for (int t = 0, monos = cnt(rng); t < monos; ++t) {
      std::vector<WedgeFactor> fs;
      for (int k = 0, d = deg(rng); k < d; ++k) fs.push_back({row(rng), col(rng)});
      if (const auto norm = WedgeMonomial::from_unordered(std::move(fs)))
        x.add_term(norm->first, coeff(rng) * norm->second);
    }
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = c; d <= n; ++d) {
            SparseElement lhs = act_e(a, b, act_e(c, d, x, n), n);
            lhs -= act_e(c, d, act_e(a, b, x, n), n);
            SparseElement rhs;
            if (b == c) rhs += act_e(a, d, x, n);
            if (d == a) rhs -= act_e(c, b, x, n);
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("echelon basis stays reduced") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> row(1, 3), col(1, 3), coeff(-2, 2), deg(1, 2);
  EchelonBasis<WedgeMonomial> basis;
  std::vector<SparseElement> inserted;
  for (int t = 0; t < 40; ++t) {
    SparseElement x;
    for (int k = 0; k < 3; ++k) {
      std::vector<WedgeFactor> fs;
      for (int j = 0, d = deg(rng); j < d; ++j) fs.push_back({row(rng), col(rng)});
      if (const auto norm = WedgeMonomial::from_unordered(std::move(fs)))
        x.add_term(norm->first, coeff(rng) * norm->second);
    }
    basis.insert(x);
    inserted.push_back(x);
  }
  for (const auto& original : inserted) CHECK(basis.contains(original));
  for (std::size_t a = 0; a < basis.rows().size(); ++a) {
    const auto& row_a = basis.rows()[a];
    CHECK(row_a.leading_coefficient() == 1);
    for (std::size_t b = 0; b < basis.rows().size(); ++b)
      if (a != b) CHECK(basis.rows()[b].coefficient(row_a.leading()) == 0);
  }
}

#include <doctest.h>

#include <random>

#include "t237/bipoly.hpp"
#include "t237/rational.hpp"
#include "t237/series.hpp"
#include "t237/upoly.hpp"
#include "t237/weierstrass.hpp"
#include "test_util.hpp"

using namespace t237;

namespace {

UniPoly upoly(std::vector<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly(std::move(v));
}

// Independent oracle: number of solutions of sum e_i x_i = n in nonnegative
// integers, by direct enumeration.
long count_solutions(const std::vector<int>& exps, size_t idx, int n) {
  if (idx == exps.size()) return n == 0 ? 1 : 0;
  long total = 0;
  for (int k = 0; k * exps[idx] <= n; ++k)
    total += count_solutions(exps, idx + 1, n - k * exps[idx]);
  return total;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).den() > 0);
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational::parse("-35/14") == Rational(-5, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).frac() == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = testing::random_rational(rng, 50, 20);
    Rational b = testing::random_rational(rng, 50, 20);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("polynomial gcd") {
  // gcd(u^2 - 1, u^2 - 2u + 1) = u - 1
  CHECK(upoly_gcd(upoly({-1, 0, 1}), upoly({1, -2, 1})) == upoly({-1, 1}));
  // gcd(u^3 - u, u^2) = u
  CHECK(upoly_gcd(upoly({0, -1, 0, 1}), upoly({0, 0, 1})) == upoly({0, 1}));
  // gcd(p, 0) = monic(p)
  CHECK(upoly_gcd(upoly({0, 0, 3}), UniPoly()) == upoly({0, 0, 1}));
  // Delta = 27(u+6)^2 = 27u^2 + 324u + 972; gcd(Delta, dDelta/du) = u + 6
  UniPoly delta = upoly({972, 324, 27});
  CHECK(delta == Rational(27) * upoly({6, 1}).pow(2));
  CHECK(upoly_gcd(delta, delta.derivative()) == upoly({6, 1}));
}

TEST_CASE("squarefree decomposition") {
  auto d1 = squarefree_decomposition(upoly({1, -2, 1}));
  REQUIRE(d1.factors.size() == 1);
  CHECK(d1.factors[0].first == upoly({-1, 1}));
  CHECK(d1.factors[0].second == 2);

  auto d2 = squarefree_decomposition(upoly({0, -1, 0, 1}));
  REQUIRE(d2.factors.size() == 1);
  CHECK(d2.factors[0].first == upoly({0, -1, 0, 1}));
  CHECK(d2.factors[0].second == 1);

  // Special-locus discriminant residue at a = 0, b = 7: 27(u+6)^2.
  auto d3 = squarefree_decomposition(Rational(27) * upoly({6, 1}).pow(2));
  REQUIRE(d3.factors.size() == 1);
  CHECK(d3.lc == Rational(27));
  CHECK(d3.factors[0].first == upoly({6, 1}));
  CHECK(d3.factors[0].second == 2);

  CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), std::invalid_argument);

  // Reconstruction property over random products of small factors.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<long> root(-3, 3);
  std::uniform_int_distribution<int> nfactors(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    UniPoly p = UniPoly::constant(testing::random_rational(rng, 5, 3));
    if (p.is_zero()) p = UniPoly::constant(Rational(2));
    int k = nfactors(rng);
    for (int i = 0; i < k; ++i) p = p * upoly({root(rng), 1}).pow(mult(rng));
    auto dec = squarefree_decomposition(p);
    CHECK(dec.reconstruct() == p);
    int last = 0;
    for (const auto& [s, m] : dec.factors) {
      CHECK(m > last);
      last = m;
      CHECK(s.lc() == Rational(1));
      CHECK(upoly_gcd(s, s.derivative()).is_constant());
    }
  }
}

TEST_CASE("coprime refinement") {
  // {u(u-1), u} -> {u, u-1}
  auto basis = coprime_refinement({upoly({0, -1, 1}), upoly({0, 1})});
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == upoly({-1, 1}));
  CHECK(basis[1] == upoly({0, 1}));
  // {u^2, u^3} -> {u}
  basis = coprime_refinement({upoly({0, 0, 1}), upoly({0, 0, 0, 1})});
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == upoly({0, 1}));
  // {u^2 - 1, u - 1} -> {u - 1, u + 1}
  basis = coprime_refinement({upoly({-1, 0, 1}), upoly({-1, 1})});
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == upoly({-1, 1}));
  CHECK(basis[1] == upoly({1, 1}));

  CHECK_THROWS_AS(coprime_refinement({UniPoly()}), std::invalid_argument);

  // Property: outputs pairwise coprime, and every input is a constant times a
  // product of powers of outputs (checked by repeated exact division).
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> root(-3, 3);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> nf(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<UniPoly> inputs;
    for (int i = 0; i < 3; ++i) {
      UniPoly p = UniPoly::constant(Rational(1));
      int k = nf(rng);
      for (int j = 0; j < k; ++j) p = p * upoly({root(rng), 1}).pow(mult(rng));
      inputs.push_back(p);
    }
    auto out = coprime_refinement(inputs);
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j)
        CHECK(upoly_gcd(out[i], out[j]).is_constant());
    for (const auto& f : inputs) {
      UniPoly rest = f;
      for (const auto& b : out) {
        while (true) {
          auto [quo, rem] = UniPoly::divmod(rest, b);
          if (!rem.is_zero()) break;
          rest = quo;
        }
      }
      CHECK(rest.is_constant());
    }
  }
}

TEST_CASE("series expansion") {
  // 1/(1-t) to order 5.
  PowerSeries geo = series_expand(UniPoly::constant(Rational(1)), {1}, 5);
  for (int i = 0; i <= 5; ++i) CHECK(geo.coeff(i) == Rational(1));

  // (1-t^42)/((1-t)(1-t^6)(1-t^14)(1-t^21)): coefficient 2 at t^6.
  UniPoly num = UniPoly::constant(Rational(1)) - UniPoly::monomial(42);
  PowerSeries s = series_expand(num, {1, 6, 14, 21}, 10);
  CHECK(s.coeff(6) == Rational(2));

  // 1/((1-t)(1-t^2)): partitions of 4 into parts 1 and 2 -> 3.
  PowerSeries p = series_expand(UniPoly::constant(Rational(1)), {1, 2}, 6);
  CHECK(p.coeff(4) == Rational(3));

  // Brute-force enumeration oracle for several exponent sets, n <= 60.
  for (const std::vector<int>& exps :
       {std::vector<int>{1, 2}, {2, 3, 7}, {1, 6, 14, 21}, {1, 11, 26, 39}}) {
    PowerSeries q = series_expand(UniPoly::constant(Rational(1)), exps, 60);
    for (int n = 0; n <= 60; ++n)
      CHECK(q.coeff(n) == Rational(count_solutions(exps, 0, n)));
  }
}

TEST_CASE("power series arithmetic truncates to the smaller order") {
  PowerSeries a = series_expand(UniPoly::constant(Rational(1)), {1}, 8);
  PowerSeries b = PowerSeries::from_poly(upoly({1, 1}), 4);
  CHECK((a * b).order() == 4);
  CHECK((a + b).order() == 4);
  CHECK((a * b).coeff(3) == Rational(2));
}

TEST_CASE("weighted bihomogeneous polynomials and charts") {
  // A_28 with every coefficient 1: chart u^4+u^3+u^2+u+1 with ord_infinity 8-4 = 4.
  BrieskornParams ones;
  for (Rational* t : {&ones.t4, &ones.t10, &ones.t12, &ones.t16, &ones.t18, &ones.t22, &ones.t24,
                      &ones.t28, &ones.t30, &ones.t36, &ones.t42})
    *t = Rational(1);
  Chart a = chart_and_budget(ones.a_form(), 8);
  CHECK(a.finite_chart == upoly({1, 1, 1, 1, 1}));
  CHECK(a.ord_at_infinity == Order(4));

  // B_42 generic: degree-7 chart, ord_infinity 12-7 = 5.
  Chart b = chart_and_budget(ones.b_form(), 12);
  CHECK(b.finite_chart.degree() == 7);
  CHECK(b.ord_at_infinity == Order(5));

  // Zero polynomial: (0, +infinity).
  Chart z = chart_and_budget(WeightedBiPoly(1, 6), 8);
  CHECK(z.finite_chart.is_zero());
  CHECK(z.ord_at_infinity.is_infinite());

  // Homogeneity is enforced term by term.
  WeightedBiPoly x = WeightedBiPoly::monomial(1, 6, 0, 1);
  WeightedBiPoly w = WeightedBiPoly::monomial(1, 6, 1, 0);
  CHECK_THROWS_AS(x + w, std::invalid_argument);
  CHECK((x * x).weighted_degree() == 12);
}

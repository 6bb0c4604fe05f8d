#include <doctest.h>

#include <random>

#include "t237/config.hpp"
#include "t237/hj.hpp"
#include "t237/lattice.hpp"
#include "t237/presets.hpp"
#include "test_util.hpp"

using namespace t237;

namespace {

const LatticeVector kH = {6, 12, 18, 24, 30, 36, 42, 28, 14, 21};
const LatticeVector kS = {1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
const LatticeVector kF = {0, 1, 2, 3, 4, 5, 6, 4, 2, 3};

LatticeVector basis_vector(int rank, int i) {
  LatticeVector v(rank, Integer(0));
  v[i] = 1;
  return v;
}

QMatrix hyperbolic_plane() {
  QMatrix u(2, 2);
  u.at(0, 1) = u.at(1, 0) = Rational(1);
  return u;
}

// Random unimodular integer matrix as a short product of elementary operations.
QMatrix random_unimodular(std::mt19937_64& rng, int n) {
  QMatrix m = QMatrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<long> c(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Rational f(c(rng));
    for (int k = 0; k < n; ++k) m.at(i, k) += f * m.at(j, k);
  }
  return m;
}

}  // namespace

TEST_CASE("gram matrices") {
  CurveConfig single({"C"}, {-2}, {});
  CHECK(single.gram().at(0, 0) == Rational(-2));

  CurveConfig a2({"A", "B"}, {-2, -2}, {{0, 1}});
  QMatrix g = a2.gram();
  CHECK(g.at(0, 0) == Rational(-2));
  CHECK(g.at(0, 1) == Rational(1));
  CHECK(g.at(1, 0) == Rational(1));

  QMatrix t = t237_config().gram();
  CHECK(t.determinant() == Rational(-1));
  CHECK(signature(t) == std::tuple<int, int, int>{1, 9, 0});
}

TEST_CASE("signature") {
  CHECK(signature(hyperbolic_plane()) == std::tuple<int, int, int>{1, 1, 0});
  CHECK(signature(QMatrix(2, 2)) == std::tuple<int, int, int>{0, 0, 2});

  // Congruence invariance under random unimodular base changes.
  std::mt19937_64 rng(5);
  QMatrix t = t237_config().gram();
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix u = random_unimodular(rng, 10);
    QMatrix conj = u * t * u.transpose();
    CHECK(signature(conj) == std::tuple<int, int, int>{1, 9, 0});
    CHECK(conj.determinant() == Rational(-1));
  }
}

TEST_CASE("pullback of the boundary curve through Theta6") {
  CurveConfig config = t237_config();
  std::vector<std::string> contracted;
  for (const auto& name : config.names())
    if (name != "Theta6") contracted.push_back(name);

  QDivisor result = pullback(config, contracted, QDivisor::single("Theta6"));
  CHECK(result.coeff("Theta6") == Rational(1));
  for (int j = 0; j <= 5; ++j)
    CHECK(result.coeff("Theta" + std::to_string(j)) == Rational(j + 1, 7));
  CHECK(result.coeff("Theta7") == Rational(2, 3));
  CHECK(result.coeff("Theta8") == Rational(1, 3));
  CHECK(result.coeff("Theta9") == Rational(1, 2));
  CHECK(self_intersection(config, result) == Rational(1, 42));

  // Orthogonal to every contracted curve.
  for (const auto& name : contracted)
    CHECK(intersect(config, result, QDivisor::single(name)) == Rational(0));

  // Linearity: the c-scaled boundary pulls back to c times the coefficients.
  Rational c(7, 13);
  QDivisor scaled = pullback(config, contracted, QDivisor::single("Theta6", c));
  CHECK(scaled == c * result);

  // Contracting one (-2)-curve disjoint from the strict part changes nothing.
  QDivisor lone = pullback(config, {"Theta0"}, QDivisor::single("Theta9"));
  CHECK(lone == QDivisor::single("Theta9"));
}

TEST_CASE("canonical pullback on the blown-up configuration") {
  CurveConfig config = type1_config();
  std::vector<std::string> contracted;
  for (const auto& name : config.names())
    if (name != "E") contracted.push_back(name);

  QDivisor result = pullback_canonical(config, contracted, QDivisor::single("E"));
  CHECK(result.coeff("E") == Rational(1));
  for (int i = 0; i <= 5; ++i)
    CHECK(result.coeff("Theta" + std::to_string(i)) == Rational(i + 1, 13));
  CHECK(result.coeff("Theta6") == Rational(6, 11));
  CHECK(result.coeff("Theta7") == Rational(4, 11));
  CHECK(result.coeff("Theta8") == Rational(2, 11));
  CHECK(result.coeff("Theta9") == Rational(3, 11));
  CHECK(self_intersection(config, result) == Rational(1, 143));

  // ADE-only contraction gives a vanishing exceptional part.
  CurveConfig a3({"A", "B", "C"}, {-2, -2, -2}, {{0, 1}, {1, 2}});
  CHECK(pullback_canonical(a3, {"A", "B", "C"}, QDivisor()).is_zero());

  // A Hirzebruch-Jung chain embedded as a configuration reproduces discrepancies.
  HJChain chain = hj_expand(13, 6);
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::vector<long> selfint;
  for (int i = 0; i < chain.length(); ++i) {
    names.push_back("E" + std::to_string(i));
    selfint.push_back(-chain.selfints()[i]);
    if (i) edges.emplace_back(i - 1, i);
  }
  CurveConfig embedded(names, selfint, edges);
  QDivisor b = pullback_canonical(embedded, names, QDivisor());
  std::vector<Rational> disc = discrepancies(chain);
  for (int i = 0; i < chain.length(); ++i) CHECK(b.coeff(names[i]) == disc[i]);
}

TEST_CASE("pullback rejects bad contractions") {
  CurveConfig config = t237_config();
  // The whole T_{2,3,7} lattice is hyperbolic, not negative definite.
  std::vector<std::string> all(config.names());
  CHECK_THROWS_AS(pullback(config, all, QDivisor()), std::domain_error);
  // Strict part must avoid the contracted curves.
  CHECK_THROWS_AS(pullback(config, {"Theta6"}, QDivisor::single("Theta6")),
                  std::invalid_argument);
}

TEST_CASE("pullback orthogonality on random configurations") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> rank_dist(2, 12);
  int done = 0;
  while (done < 20) {
    CurveConfig config = testing::random_config(rng, rank_dist(rng));
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<std::string> contracted, rest;
    for (const auto& name : config.names())
      (coin(rng) ? contracted : rest).push_back(name);
    if (contracted.empty() || rest.empty()) continue;
    std::vector<int> idx;
    for (const auto& name : contracted) idx.push_back(config.index_of(name));
    if (!config.gram().submatrix(idx, idx).is_negative_definite()) continue;

    QDivisor strict;
    for (const auto& name : rest) strict.set(name, testing::random_rational(rng, 3, 3));
    QDivisor pulled = pullback(config, contracted, strict);
    for (const auto& name : contracted)
      CHECK(intersect(config, pulled, QDivisor::single(name)) == Rational(0));
    // Projection formula: (pi* D)^2 = D . pi* D.
    CHECK(self_intersection(config, pulled) == intersect(config, strict, pulled));
    // Linearity.
    Rational c(3, 5);
    CHECK(pullback(config, contracted, c * strict) == c * pulled);
    ++done;
  }
}

TEST_CASE("lattice vectors of the ten-curve basis") {
  QMatrix gram = t237_config().gram();
  CHECK(pairing(gram, kH, kH) == 42);
  CHECK(pairing(gram, kF, kF) == 0);
  CHECK(pairing(gram, kF, kS) == 1);
  CHECK(pairing(gram, kH, basis_vector(10, 6)) == 1);
  for (int i = 0; i < 10; ++i) {
    if (i != 6) CHECK(pairing(gram, kH, basis_vector(10, i)) == 0);
    if (i != 0) CHECK(pairing(gram, kF, basis_vector(10, i)) == 0);
  }
  CHECK(self_intersection(t237_config(), QDivisor::single("Theta3")) == Rational(-2));
}

TEST_CASE("the chamber admits a Weyl vector") {
  // Solve h' . alpha_i = 1 for all simple roots; by unimodularity h' is integral.
  QMatrix gram = t237_config().gram();
  std::vector<Rational> ones(10, Rational(1));
  std::vector<Rational> h_prime = gram.solve(ones);
  LatticeVector hp;
  for (const auto& x : h_prime) {
    CHECK(x.is_integer());
    hp.push_back(x.num());
  }
  for (int i = 0; i < 10; ++i) CHECK(pairing(gram, hp, basis_vector(10, i)) == 1);
}

TEST_CASE("weyl reflections") {
  QMatrix gram = t237_config().gram();
  LatticeVector alpha0 = basis_vector(10, 0);
  CHECK(weyl_reflect(gram, kH, alpha0) == kH);  // h . alpha0 = 0

  LatticeVector f_ref = weyl_reflect(gram, kF, alpha0);
  LatticeVector expected = kF;
  expected[0] += 1;
  CHECK(f_ref == expected);
  CHECK(pairing(gram, f_ref, f_ref) == 0);

  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    LatticeVector v(10);
    for (auto& x : v) x = c(rng);
    LatticeVector root = basis_vector(10, trial % 10);
    CHECK(weyl_reflect(gram, weyl_reflect(gram, v, root), root) == v);
  }

  CHECK_THROWS_AS(weyl_reflect(gram, kH, kF), std::invalid_argument);  // f^2 = 0, not a root
}

TEST_CASE("fundamental chamber membership") {
  QMatrix gram = t237_config().gram();
  std::vector<LatticeVector> simple;
  for (int i = 0; i < 10; ++i) simple.push_back(basis_vector(10, i));
  CHECK(in_fundamental_chamber(gram, kH, simple));
  CHECK(in_fundamental_chamber(gram, kF, simple));
  LatticeVector mh = kH;
  for (auto& x : mh) x = -x;
  CHECK(!in_fundamental_chamber(gram, mh, simple));
}

TEST_CASE("hyperbolic splitting") {
  // U with e = (1,0): empty complement.
  QMatrix u = hyperbolic_plane();
  HyperbolicSplitting su = split_hyperbolic(u, {1, 0});
  CHECK(su.complement_gram.rows() == 0);
  CHECK(pairing(u, su.e, su.e_prime) == 1);

  // U + U with e in the first summand: complement is U again.
  QMatrix uu(4, 4);
  uu.at(0, 1) = uu.at(1, 0) = Rational(1);
  uu.at(2, 3) = uu.at(3, 2) = Rational(1);
  HyperbolicSplitting suu = split_hyperbolic(uu, {1, 0, 0, 0});
  CHECK(suu.complement_gram.rows() == 2);
  CHECK(suu.complement_gram.determinant() == Rational(-1));
  CHECK(signature(suu.complement_gram) == std::tuple<int, int, int>{1, 1, 0});

  // E10 at the fiber class: the complement has the defining properties of E8.
  QMatrix e10 = t237_config().gram();
  HyperbolicSplitting s = split_hyperbolic(e10, kF);
  CHECK(s.complement_gram.rows() == 8);
  CHECK(abs(s.complement_gram.determinant()) == Rational(1));
  CHECK(signature(s.complement_gram) == std::tuple<int, int, int>{0, 8, 0});
  for (int i = 0; i < 8; ++i) {
    CHECK(s.complement_gram.at(i, i).num() % 2 == 0);
    CHECK(pairing(e10, s.complement_basis[i], s.e) == 0);
    CHECK(pairing(e10, s.complement_basis[i], s.e_prime) == 0);
  }

  // Precondition violations.
  CHECK_THROWS_AS(split_hyperbolic(e10, kH), std::invalid_argument);  // h^2 = 42 != 0
  LatticeVector twice = kF;
  for (auto& x : twice) x *= 2;
  CHECK_THROWS_AS(split_hyperbolic(e10, twice), std::invalid_argument);  // imprimitive
  QMatrix odd(1, 1);
  odd.at(0, 0) = Rational(-1);
  CHECK_THROWS_AS(split_hyperbolic(odd, {1}), std::invalid_argument);  // odd diagonal
}

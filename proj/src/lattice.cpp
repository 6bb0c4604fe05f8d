#include "t237/lattice.hpp"

#include <stdexcept>

namespace t237 {

namespace {

void check_integral_gram(const QMatrix& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("lattice: Gram matrix not symmetric");
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.cols(); ++j)
      if (!gram.at(i, j).is_integer())
        throw std::invalid_argument("lattice: Gram matrix not integral");
}

void require_dim(const QMatrix& gram, const LatticeVector& v) {
  if (static_cast<int>(v.size()) != gram.rows())
    throw std::invalid_argument("lattice: vector length does not match Gram rank");
}

LatticeVector gram_times(const QMatrix& gram, const LatticeVector& v) {
  LatticeVector out(gram.rows(), Integer(0));
  for (int i = 0; i < gram.rows(); ++i) {
    Rational acc(0);
    for (int j = 0; j < gram.cols(); ++j) acc += gram.at(i, j) * Rational(v[j]);
    out[i] = acc.num();  // integral by check_integral_gram
  }
  return out;
}

Integer content(const LatticeVector& v) {
  Integer g(0);
  for (const auto& x : v) g = integer_gcd(g, x);
  return g;
}

}  // namespace

Integer pairing(const QMatrix& gram, const LatticeVector& v, const LatticeVector& w) {
  check_integral_gram(gram);
  require_dim(gram, v);
  require_dim(gram, w);
  LatticeVector gw = gram_times(gram, w);
  Integer acc(0);
  for (size_t i = 0; i < v.size(); ++i) acc += v[i] * gw[i];
  return acc;
}

LatticeVector weyl_reflect(const QMatrix& gram, const LatticeVector& v,
                           const LatticeVector& root) {
  if (pairing(gram, root, root) != -2)
    throw std::invalid_argument("weyl_reflect: root must have square -2");
  Integer c = pairing(gram, v, root);
  LatticeVector out = v;
  for (size_t i = 0; i < out.size(); ++i) out[i] += c * root[i];
  return out;
}

bool in_fundamental_chamber(const QMatrix& gram, const LatticeVector& v,
                            const std::vector<LatticeVector>& simple_roots) {
  for (const auto& alpha : simple_roots)
    if (pairing(gram, v, alpha) < 0) return false;
  return true;
}

std::tuple<int, int, int> signature(const QMatrix& gram) { return gram.inertia(); }

HyperbolicSplitting split_hyperbolic(const QMatrix& gram, const LatticeVector& e) {
  check_integral_gram(gram);
  require_dim(gram, e);
  int n = gram.rows();
  for (int i = 0; i < n; ++i)
    if (gram.at(i, i).num() % 2 != 0) throw std::invalid_argument("split_hyperbolic: lattice not even");
  Rational det = gram.determinant();
  if (det != Rational(1) && det != Rational(-1))
    throw std::invalid_argument("split_hyperbolic: lattice not unimodular");
  if (pairing(gram, e, e) != 0) throw std::invalid_argument("split_hyperbolic: e not isotropic");
  if (content(e) != 1) throw std::invalid_argument("split_hyperbolic: e not primitive");

  // The functional x -> x.e is surjective onto Z by unimodularity; extended gcd on
  // its coordinates produces v with e.v = 1.
  LatticeVector phi = gram_times(gram, e);
  LatticeVector v(n, Integer(0));
  Integer g(0);
  for (int i = 0; i < n; ++i) {
    if (phi[i] == 0) continue;
    if (g == 0) {
      g = phi[i] > 0 ? phi[i] : Integer(-phi[i]);
      v[i] = phi[i] > 0 ? 1 : -1;
      continue;
    }
    Integer gg, s, t;
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), phi[i].get_mpz_t());
    for (auto& x : v) x *= s;
    v[i] += t;
    g = gg;
  }
  if (g != 1) throw std::domain_error("split_hyperbolic: no dual vector found");

  Integer v2 = pairing(gram, v, v);
  // v^2 is even, so e' = v - (v^2/2) e is integral, isotropic, and pairs 1 with e.
  LatticeVector e_prime = v;
  Integer half = v2 / 2;
  for (int i = 0; i < n; ++i) e_prime[i] -= half * e[i];

  std::vector<LatticeVector> projections;
  for (int i = 0; i < n; ++i) {
    LatticeVector x(n, Integer(0));
    x[i] = 1;
    Integer a = pairing(gram, x, e_prime);
    Integer b = pairing(gram, x, e);
    for (int j = 0; j < n; ++j) x[j] -= a * e[j] + b * e_prime[j];
    projections.push_back(std::move(x));
  }
  std::vector<LatticeVector> basis = lattice_row_basis(std::move(projections));
  if (static_cast<int>(basis.size()) != n - 2)
    throw std::domain_error("split_hyperbolic: complement rank mismatch");

  QMatrix comp(n - 2, n - 2);
  for (int i = 0; i < n - 2; ++i)
    for (int j = 0; j < n - 2; ++j) comp.at(i, j) = Rational(pairing(gram, basis[i], basis[j]));

  HyperbolicSplitting out{e, std::move(e_prime), std::move(basis), std::move(comp)};
  if (pairing(gram, out.e_prime, out.e_prime) != 0 || pairing(gram, out.e, out.e_prime) != 1)
    throw std::domain_error("split_hyperbolic: hyperbolic pair postcondition failed");
  return out;
}

}  // namespace t237

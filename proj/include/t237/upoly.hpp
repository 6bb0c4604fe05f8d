// Dense univariate polynomials over the rationals.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "t237/rational.hpp"

namespace t237 {

class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(int degree, const Rational& c = Rational(1));

  // Degree of the zero polynomial is the sentinel -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const Rational& lc() const;
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly pow(int e) const;

  // Long division; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& q);
  // Throws if the division leaves a remainder.
  static UniPoly div_exact(const UniPoly& p, const UniPoly& q);

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // index = degree
};

// Total order used for deterministic listings: degree, then coefficients from the top.
bool upoly_less(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
UniPoly upoly_gcd(const UniPoly& p, const UniPoly& q);

// p = lc * prod factors[k].first ^ factors[k].second, monic squarefree pairwise
// coprime factors, multiplicities strictly increasing (Yun).
struct SquarefreeDecomposition {
  Rational lc;
  std::vector<std::pair<UniPoly, int>> factors;
  UniPoly reconstruct() const;
};
SquarefreeDecomposition squarefree_decomposition(const UniPoly& p);

// Gcd-free basis: pairwise-coprime monic polynomials such that every input is a
// constant times a product of powers of outputs. Inputs must be nonzero.
std::vector<UniPoly> coprime_refinement(const std::vector<UniPoly>& fs);

// Order of vanishing of p along a nonconstant place polynomial; p must be nonzero.
int order_at(const UniPoly& p, const UniPoly& place);

}  // namespace t237

// Weighted-bihomogeneous polynomials in (w, x) and their affine charts.
#pragma once

#include <map>
#include <utility>

#include "t237/order.hpp"
#include "t237/rational.hpp"
#include "t237/upoly.hpp"

namespace t237 {

// All stored terms (i, j) -> c satisfy i*wt_w + j*wt_x = weighted_degree; zero
// coefficients are never stored. The zero polynomial carries degree sentinel -1.
class WeightedBiPoly {
 public:
  WeightedBiPoly(int wt_w, int wt_x);
  static WeightedBiPoly monomial(int wt_w, int wt_x, int deg_w, int deg_x,
                                 const Rational& c = Rational(1));

  int wt_w() const { return wt_w_; }
  int wt_x() const { return wt_x_; }
  // Weighted degree; -1 for the zero polynomial.
  int weighted_degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int deg_w, int deg_x) const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

  // Addition requires equal weights and (unless a summand is zero) equal degrees.
  friend WeightedBiPoly operator+(const WeightedBiPoly& a, const WeightedBiPoly& b);
  friend WeightedBiPoly operator*(const WeightedBiPoly& a, const WeightedBiPoly& b);
  friend WeightedBiPoly operator*(const Rational& c, const WeightedBiPoly& p);
  friend bool operator==(const WeightedBiPoly& a, const WeightedBiPoly& b);
  WeightedBiPoly pow(int e) const;

 private:
  int wt_w_, wt_x_;
  int degree_ = -1;
  std::map<std::pair<int, int>, Rational> terms_;
};

struct Chart {
  UniPoly finite_chart;   // P(1, u), u = x / w^{wt_x}
  Order ord_at_infinity;  // budget - deg(chart); infinite for the zero polynomial
};

// Dehomogenize along w = 1. `budget` is the degree of the line bundle on the coarse
// line; the order at the place w = 0 is budget minus the chart degree. Requires
// wt_w = 1 and budget >= chart degree.
Chart chart_and_budget(const WeightedBiPoly& p, int budget);

}  // namespace t237

// Truncated power series over the rationals.
#pragma once

#include <vector>

#include "t237/rational.hpp"
#include "t237/upoly.hpp"

namespace t237 {

class PowerSeries {
 public:
  // coeffs beyond order are dropped, missing ones are zero.
  PowerSeries(int order, std::vector<Rational> coeffs);
  static PowerSeries zero(int order) { return PowerSeries(order, {}); }
  static PowerSeries from_poly(const UniPoly& p, int order);

  int order() const { return order_; }
  const Rational& coeff(int n) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Arithmetic truncates to the smaller order of the two operands.
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int order_;
  std::vector<Rational> coeffs_;  // length order_ + 1
};

// Taylor coefficients of numerator / prod_i (1 - t^{e_i}) up to the given order.
PowerSeries series_expand(const UniPoly& numerator, const std::vector<int>& denom_exponents,
                          int order);

}  // namespace t237

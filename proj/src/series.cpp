#include "t237/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace t237 {

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ < 0) throw std::invalid_argument("PowerSeries: negative truncation order");
  coeffs_.resize(order_ + 1);
}

PowerSeries PowerSeries::from_poly(const UniPoly& p, int order) {
  return PowerSeries(order, p.coeffs());
}

const Rational& PowerSeries::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("PowerSeries: coefficient beyond truncation");
  return coeffs_[n];
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  int order = std::min(a.order_, b.order_);
  std::vector<Rational> v(order + 1);
  for (int i = 0; i <= order; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  return PowerSeries(order, std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  int order = std::min(a.order_, b.order_);
  std::vector<Rational> v(order + 1);
  for (int i = 0; i <= order; ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
  return PowerSeries(order, std::move(v));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  int order = std::min(a.order_, b.order_);
  std::vector<Rational> v(order + 1);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PowerSeries(order, std::move(v));
}

PowerSeries series_expand(const UniPoly& numerator, const std::vector<int>& denom_exponents,
                          int order) {
  if (order < 0) throw std::invalid_argument("series_expand: negative order");
  std::vector<Rational> c(order + 1);
  for (int i = 0; i <= std::min(order, numerator.degree()); ++i) c[i] = numerator.coeff(i);
  // Multiplying by 1/(1 - t^e) is a running sum with stride e.
  for (int e : denom_exponents) {
    if (e < 1) throw std::invalid_argument("series_expand: denominator exponent must be >= 1");
    for (int n = e; n <= order; ++n) c[n] += c[n - e];
  }
  return PowerSeries(order, std::move(c));
}

}  // namespace t237

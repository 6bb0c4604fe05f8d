#include "t237/bipoly.hpp"

#include <stdexcept>
#include <vector>

namespace t237 {

WeightedBiPoly::WeightedBiPoly(int wt_w, int wt_x) : wt_w_(wt_w), wt_x_(wt_x) {
  if (wt_w < 1 || wt_x < 1) throw std::invalid_argument("WeightedBiPoly: weights must be positive");
}

WeightedBiPoly WeightedBiPoly::monomial(int wt_w, int wt_x, int deg_w, int deg_x,
                                        const Rational& c) {
  WeightedBiPoly p(wt_w, wt_x);
  if (deg_w < 0 || deg_x < 0) throw std::invalid_argument("WeightedBiPoly: negative exponent");
  if (!c.is_zero()) {
    p.terms_[{deg_w, deg_x}] = c;
    p.degree_ = deg_w * wt_w + deg_x * wt_x;
  }
  return p;
}

Rational WeightedBiPoly::coeff(int deg_w, int deg_x) const {
  auto it = terms_.find({deg_w, deg_x});
  return it == terms_.end() ? Rational(0) : it->second;
}

static void check_weights(const WeightedBiPoly& a, const WeightedBiPoly& b) {
  if (a.wt_w() != b.wt_w() || a.wt_x() != b.wt_x())
    throw std::invalid_argument("WeightedBiPoly: mismatched weights");
}

WeightedBiPoly operator+(const WeightedBiPoly& a, const WeightedBiPoly& b) {
  check_weights(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree_ != b.degree_)
    throw std::invalid_argument("WeightedBiPoly: sum of different weighted degrees");
  WeightedBiPoly out = a;
  for (const auto& [key, c] : b.terms_) {
    Rational sum = out.coeff(key.first, key.second) + c;
    if (sum.is_zero())
      out.terms_.erase(key);
    else
      out.terms_[key] = sum;
  }
  if (out.terms_.empty()) out.degree_ = -1;
  return out;
}

WeightedBiPoly operator*(const WeightedBiPoly& a, const WeightedBiPoly& b) {
  check_weights(a, b);
  WeightedBiPoly out(a.wt_w_, a.wt_x_);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      std::pair<int, int> key{ka.first + kb.first, ka.second + kb.second};
      Rational sum = out.coeff(key.first, key.second) + ca * cb;
      if (sum.is_zero())
        out.terms_.erase(key);
      else
        out.terms_[key] = sum;
    }
  out.degree_ = out.terms_.empty() ? -1 : a.degree_ + b.degree_;
  return out;
}

WeightedBiPoly operator*(const Rational& c, const WeightedBiPoly& p) {
  WeightedBiPoly out(p.wt_w_, p.wt_x_);
  if (c.is_zero() || p.is_zero()) return out;
  out.degree_ = p.degree_;
  for (const auto& [key, v] : p.terms_) out.terms_[key] = c * v;
  return out;
}

bool operator==(const WeightedBiPoly& a, const WeightedBiPoly& b) {
  return a.wt_w_ == b.wt_w_ && a.wt_x_ == b.wt_x_ && a.terms_ == b.terms_;
}

WeightedBiPoly WeightedBiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("WeightedBiPoly: negative power");
  WeightedBiPoly acc = monomial(wt_w_, wt_x_, 0, 0, Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

Chart chart_and_budget(const WeightedBiPoly& p, int budget) {
  if (p.wt_w() != 1)
    throw std::invalid_argument("chart_and_budget: the w-weight must be 1 for the coarse chart");
  if (p.is_zero()) return {UniPoly(), Order::infinity()};
  std::vector<Rational> c;
  for (const auto& [key, v] : p.terms()) {
    int j = key.second;
    if (j >= static_cast<int>(c.size())) c.resize(j + 1);
    c[j] = v;
  }
  UniPoly chart{std::move(c)};
  if (budget < chart.degree())
    throw std::invalid_argument("chart_and_budget: budget below chart degree");
  return {chart, Order(budget - chart.degree())};
}

}  // namespace t237

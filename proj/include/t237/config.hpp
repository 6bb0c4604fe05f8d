// Labeled curve configurations and rational divisors on them.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "t237/qmatrix.hpp"
#include "t237/rational.hpp"

namespace t237 {

// Configuration of curves with integer self-intersections and a symmetric
// nonnegative adjacency (zero diagonal). Gram = diag(selfint) + adjacency.
class CurveConfig {
 public:
  CurveConfig(std::vector<std::string> names, std::vector<long> selfint,
              const std::vector<std::pair<int, int>>& edges);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  long selfint(int i) const { return selfint_[i]; }
  long adjacency(int i, int j) const { return adjacency_[i][j]; }
  int index_of(const std::string& name) const;  // throws on unknown label

  QMatrix gram() const;

 private:
  std::vector<std::string> names_;
  std::vector<long> selfint_;
  std::vector<std::vector<long>> adjacency_;
};

// Rational divisor as a label -> coefficient map; zero coefficients are not stored.
class QDivisor {
 public:
  QDivisor() = default;
  explicit QDivisor(std::map<std::string, Rational> coeffs);
  static QDivisor single(const std::string& name, const Rational& c = Rational(1));

  Rational coeff(const std::string& name) const;
  void set(const std::string& name, const Rational& c);
  const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  friend QDivisor operator+(const QDivisor& a, const QDivisor& b);
  friend QDivisor operator*(const Rational& c, const QDivisor& d);
  friend bool operator==(const QDivisor& a, const QDivisor& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::map<std::string, Rational> coeffs_;
};

// Numerical pullback: strict + sum v_i E_i with v solving orthogonality against every
// contracted curve. The contracted Gram block must be negative definite and the strict
// part must be supported away from it.
QDivisor pullback(const CurveConfig& config, const std::vector<std::string>& contracted,
                  const QDivisor& strict);

// Pullback of the canonical class: solves (K + B) . E_i = 0 with K . E_i = -2 - E_i^2
// for every contracted curve; returns k_rep + B where k_rep represents K off the
// contracted locus (it must pair like K against the contracted curves).
QDivisor pullback_canonical(const CurveConfig& config, const std::vector<std::string>& contracted,
                            const QDivisor& k_rep);

Rational intersect(const CurveConfig& config, const QDivisor& a, const QDivisor& b);
Rational self_intersection(const CurveConfig& config, const QDivisor& d);

}  // namespace t237

// Cyclic quotient singularities: Hirzebruch-Jung chains, discrepancies, and the
// Riemann-Roch correction term at a singular point.
#pragma once

#include <vector>

#include "t237/qmatrix.hpp"
#include "t237/rational.hpp"

namespace t237 {

// 1/n(1, q) up to the equivalence (n, q) ~ (n, q^{-1} mod n); canonical form keeps
// the smaller of q and its inverse.
struct CyclicQuotient {
  long n;
  long q;
  friend bool operator==(const CyclicQuotient& a, const CyclicQuotient& b) {
    return a.n == b.n && a.q == b.q;
  }
};
CyclicQuotient canonical_type(long n, long q);

// Exceptional chain of the minimal resolution; entry i is b_i with E_i^2 = -b_i.
class HJChain {
 public:
  explicit HJChain(std::vector<long> selfints);
  const std::vector<long>& selfints() const { return selfints_; }
  int length() const { return static_cast<int>(selfints_.size()); }
  HJChain reversed() const;
  // Chain Gram matrix: diagonal -b_i, adjacent entries 1.
  QMatrix gram() const;
  friend bool operator==(const HJChain& a, const HJChain& b) {
    return a.selfints_ == b.selfints_;
  }

 private:
  std::vector<long> selfints_;
};

// Local data of a Weil divisor through the singularity: intersection multiplicities
// of the strict transform with each chain curve.
struct SingularityIncidence {
  SingularityIncidence(HJChain chain, std::vector<long> strict_mult);
  HJChain chain;
  std::vector<long> strict_mult;
};

// Negative-regular continued fraction expansion of n/q; all entries >= 2.
HJChain hj_expand(long n, long q);

// Value of the continued fraction, canonicalized (chain reversal gives the
// inverse-weight type, which normalizes to the same class).
CyclicQuotient hj_evaluate(const HJChain& chain);

// Coefficients of the discrepancy divisor: M v = -(b_i - 2), all in [0, 1).
std::vector<Rational> discrepancies(const HJChain& chain);

// Blache correction term for n_mult copies of the incident divisor.
Rational delta(const SingularityIncidence& inc, long n_mult);

// Correction term for the n-th canonical multiple computed from the discrepancies.
Rational delta_canonical(const HJChain& chain, long n_mult);

// Smallest r such that r times the pullback solution is integral (= Cartier index
// of the incident divisor, resp. of K, at the point).
long local_index(const SingularityIncidence& inc);
long canonical_index(const HJChain& chain);

}  // namespace t237

// Plurigenera via Riemann-Roch on normal surfaces with quotient singularities,
// Hilbert-series identities, and the minimal-volume function.
#pragma once

#include <optional>
#include <vector>

#include "t237/hj.hpp"
#include "t237/rational.hpp"
#include "t237/series.hpp"
#include "t237/upoly.hpp"

namespace t237 {

// Canonical: the polarizing class is K itself. Pair: K ~ 0 and the class is an
// incident boundary divisor D.
enum class RRMode { Canonical, Pair };

// A singular point with its correction-term provider: canonical multiples use the
// discrepancy formula, boundary multiples use the incidence vector.
struct RRSingularity {
  HJChain chain;
  std::optional<std::vector<long>> incidence;

  static RRSingularity canonical(HJChain chain) { return {std::move(chain), std::nullopt}; }
  static RRSingularity with_incidence(HJChain chain, std::vector<long> mult);

  Rational correction(long n) const;
};

struct SurfaceRRData {
  SurfaceRRData(Rational chi_O, Rational vol, long p_g, RRMode mode,
                std::vector<RRSingularity> singularities);
  Rational chi_O;
  Rational vol;  // (K or K+D)^2 of the polarizing class, > 0
  long p_g;
  RRMode mode;
  std::vector<RRSingularity> singularities;
};

struct PlurigeneraTable {
  std::vector<long long> values;  // P_0 .. P_N
  long long at(int n) const { return values.at(n); }
  int max_index() const { return static_cast<int>(values.size()) - 1; }
};

// Euler characteristic of the n-th multiple of the polarizing class; the correction
// terms must cancel the fractional volume contribution exactly, so the result is an
// integer (non-integrality signals inconsistent input data).
Rational chi_of_multiple(const SurfaceRRData& data, long n);

// P_0 = 1; canonical mode takes P_1 = p_g and chi from n = 2 on, pair mode takes chi
// from n = 1 on.
PlurigeneraTable plurigenera(const SurfaceRRData& data, int max_n);

// Coefficients of (sum P_n t^n) * prod (1 - t^{w_i}) through degree max_n.
UniPoly hilbert_numerator(const PlurigeneraTable& table, const std::vector<int>& weights,
                          int max_n);

// Expansion of (1 - t^degree) / prod (1 - t^{w_i}).
PowerSeries hypersurface_hilbert(const std::vector<int>& weights, int degree, int max_n);

// Minimal volume of a stable surface pair of geometric genus one with boundary
// coefficient c in (0, 1]; piecewise rational with breakpoints 7/13 and 6/11.
Rational min_volume(const Rational& c);

}  // namespace t237

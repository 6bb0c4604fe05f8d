#include "t237/riemann_roch.hpp"

#include <stdexcept>

namespace t237 {

RRSingularity RRSingularity::with_incidence(HJChain chain, std::vector<long> mult) {
  SingularityIncidence check(chain, mult);  // validates lengths
  (void)check;
  return {std::move(chain), std::move(mult)};
}

Rational RRSingularity::correction(long n) const {
  if (incidence) return delta(SingularityIncidence(chain, *incidence), n);
  return delta_canonical(chain, n);
}

SurfaceRRData::SurfaceRRData(Rational chi_O_in, Rational vol_in, long p_g_in, RRMode mode_in,
                             std::vector<RRSingularity> singularities_in)
    : chi_O(std::move(chi_O_in)),
      vol(std::move(vol_in)),
      p_g(p_g_in),
      mode(mode_in),
      singularities(std::move(singularities_in)) {
  if (!(vol > Rational(0))) throw std::invalid_argument("SurfaceRRData: volume must be positive");
  if (chi_O != Rational(1 + p_g))
    throw std::invalid_argument("SurfaceRRData: chi(O) must equal 1 + p_g (irregularity zero)");
}

Rational chi_of_multiple(const SurfaceRRData& data, long n) {
  if (n < 0) throw std::invalid_argument("chi_of_multiple: negative multiple");
  // Canonical: chi(O) + n(n-1)/2 vol; pair with K ~ 0: chi(O) + n^2/2 vol.
  Rational quadratic = data.mode == RRMode::Canonical ? Rational(n * (n - 1), 2)
                                                      : Rational(n * n, 2);
  Rational chi = data.chi_O + quadratic * data.vol;
  for (const auto& sing : data.singularities) chi += sing.correction(n);
  if (!chi.is_integer())
    throw std::domain_error("chi_of_multiple: non-integral result at n = " + std::to_string(n) +
                            " (inconsistent surface data)");
  return chi;
}

PlurigeneraTable plurigenera(const SurfaceRRData& data, int max_n) {
  if (max_n < 0) throw std::invalid_argument("plurigenera: negative bound");
  PlurigeneraTable table;
  table.values.reserve(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    long long p;
    if (n == 0) {
      p = 1;
    } else if (n == 1 && data.mode == RRMode::Canonical) {
      // chi(K) misses h^2(K) = h^0(O); the first plurigenus is p_g itself.
      p = data.p_g;
    } else {
      p = chi_of_multiple(data, n).num().get_si();
    }
    if (p < 0) throw std::domain_error("plurigenera: negative value at n = " + std::to_string(n));
    table.values.push_back(p);
  }
  return table;
}

UniPoly hilbert_numerator(const PlurigeneraTable& table, const std::vector<int>& weights,
                          int max_n) {
  if (table.max_index() < max_n)
    throw std::invalid_argument("hilbert_numerator: table shorter than requested order");
  std::vector<Rational> acc(max_n + 1);
  for (int n = 0; n <= max_n; ++n) acc[n] = Rational(table.values[n]);
  for (int w : weights) {
    if (w < 1) throw std::invalid_argument("hilbert_numerator: weights must be >= 1");
    // Multiply by (1 - t^w) in place, from the top down.
    for (int n = max_n; n >= w; --n) acc[n] -= acc[n - w];
  }
  return UniPoly(std::move(acc));
}

PowerSeries hypersurface_hilbert(const std::vector<int>& weights, int degree, int max_n) {
  if (degree < 1) throw std::invalid_argument("hypersurface_hilbert: degree must be >= 1");
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("hypersurface_hilbert: weights must be >= 1");
  UniPoly numerator = UniPoly::constant(Rational(1)) - UniPoly::monomial(degree);
  return series_expand(numerator, weights, max_n);
}

Rational min_volume(const Rational& c) {
  if (!(c > Rational(0)) || c > Rational(1))
    throw std::invalid_argument("min_volume: coefficient must lie in (0, 1]");
  const Rational lo(7, 13), hi(6, 11);
  if (c <= lo) return c * c / Rational(42);
  if (c < hi) return Rational(-11, 6) * c * c + Rational(2) * c - Rational(7, 13);
  return Rational(1, 143);
}

}  // namespace t237

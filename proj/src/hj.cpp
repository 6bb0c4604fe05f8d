#include "t237/hj.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace t237 {

namespace {

long mod_inverse(long q, long n) {
  long t = 0, new_t = 1;
  long r = n, new_r = q % n;
  while (new_r != 0) {
    long quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return ((t % n) + n) % n;
}

}  // namespace

CyclicQuotient canonical_type(long n, long q) {
  if (n <= 0 || q <= 0 || q >= n) throw std::invalid_argument("CyclicQuotient: need 0 < q < n");
  if (std::gcd(n, q) != 1) throw std::invalid_argument("CyclicQuotient: gcd(n, q) != 1");
  long qi = mod_inverse(q, n);
  return {n, std::min(q, qi)};
}

HJChain::HJChain(std::vector<long> selfints) : selfints_(std::move(selfints)) {
  if (selfints_.empty()) throw std::invalid_argument("HJChain: empty chain");
  for (long b : selfints_)
    if (b < 2) throw std::invalid_argument("HJChain: entries must be >= 2");
}

HJChain HJChain::reversed() const {
  return HJChain(std::vector<long>(selfints_.rbegin(), selfints_.rend()));
}

QMatrix HJChain::gram() const {
  int k = length();
  QMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    m.at(i, i) = Rational(-selfints_[i]);
    if (i + 1 < k) m.at(i, i + 1) = m.at(i + 1, i) = Rational(1);
  }
  return m;
}

SingularityIncidence::SingularityIncidence(HJChain chain_in, std::vector<long> strict_mult_in)
    : chain(std::move(chain_in)), strict_mult(std::move(strict_mult_in)) {
  if (static_cast<int>(strict_mult.size()) != chain.length())
    throw std::invalid_argument("SingularityIncidence: multiplicity vector length mismatch");
  for (long m : strict_mult)
    if (m < 0) throw std::invalid_argument("SingularityIncidence: negative multiplicity");
}

HJChain hj_expand(long n, long q) {
  if (n <= 0 || q <= 0 || q >= n) throw std::invalid_argument("hj_expand: need 0 < q < n");
  if (std::gcd(n, q) != 1) throw std::invalid_argument("hj_expand: gcd(n, q) != 1");
  std::vector<long> bs;
  while (q > 0) {
    long b = (n + q - 1) / q;  // ceil(n/q)
    bs.push_back(b);
    long next_n = q;
    long next_q = b * q - n;
    n = next_n;
    q = next_q;
  }
  return HJChain(std::move(bs));
}

CyclicQuotient hj_evaluate(const HJChain& chain) {
  // [b_1, ..., b_k] from the back: value b_i - 1/(value of tail).
  Rational val(chain.selfints().back());
  for (auto it = chain.selfints().rbegin() + 1; it != chain.selfints().rend(); ++it)
    val = Rational(*it) - Rational(1) / val;
  Integer n = val.num(), q = val.den();
  return canonical_type(n.get_si(), q.get_si());
}

std::vector<Rational> discrepancies(const HJChain& chain) {
  std::vector<Rational> rhs(chain.length());
  for (int i = 0; i < chain.length(); ++i) rhs[i] = Rational(-(chain.selfints()[i] - 2));
  return chain.gram().solve(rhs);
}

Rational delta(const SingularityIncidence& inc, long n_mult) {
  if (n_mult < 0) throw std::invalid_argument("delta: negative multiple");
  int k = inc.chain.length();
  QMatrix gram = inc.chain.gram();
  std::vector<Rational> rhs(k);
  for (int i = 0; i < k; ++i) rhs[i] = Rational(-n_mult * inc.strict_mult[i]);
  std::vector<Rational> v = gram.solve(rhs);

  // -1/2 {pullback} . (floor(pullback) - K), with K.E_i = b_i - 2 by adjunction.
  Rational acc(0);
  for (int i = 0; i < k; ++i) {
    Rational frac = v[i].frac();
    if (frac.is_zero()) continue;
    Rational pairing = Rational(n_mult * inc.strict_mult[i]);
    for (int j = 0; j < k; ++j) pairing += Rational(v[j].floor()) * gram.at(i, j);
    pairing -= Rational(inc.chain.selfints()[i] - 2);
    acc += frac * pairing;
  }
  return Rational(-1, 2) * acc;
}

Rational delta_canonical(const HJChain& chain, long n_mult) {
  if (n_mult < 0) throw std::invalid_argument("delta_canonical: negative multiple");
  int k = chain.length();
  QMatrix gram = chain.gram();
  std::vector<Rational> disc = discrepancies(chain);
  std::vector<Rational> w(k);
  for (int i = 0; i < k; ++i) w[i] = (Rational(n_mult) * disc[i]).frac();

  // 1/2 {nB} . ({nB} + K).
  Rational acc(0);
  for (int i = 0; i < k; ++i) {
    if (w[i].is_zero()) continue;
    Rational pairing = Rational(chain.selfints()[i] - 2);
    for (int j = 0; j < k; ++j) pairing += w[j] * gram.at(i, j);
    acc += w[i] * pairing;
  }
  return Rational(1, 2) * acc;
}

namespace {

long lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l(1);
  for (const auto& r : v) l = integer_lcm(l, r.den());
  return l.get_si();
}

}  // namespace

long local_index(const SingularityIncidence& inc) {
  int k = inc.chain.length();
  std::vector<Rational> rhs(k);
  for (int i = 0; i < k; ++i) rhs[i] = Rational(-inc.strict_mult[i]);
  return lcm_of_denominators(inc.chain.gram().solve(rhs));
}

long canonical_index(const HJChain& chain) { return lcm_of_denominators(discrepancies(chain)); }

}  // namespace t237

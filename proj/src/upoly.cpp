#include "t237/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace t237 {

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
  return c.is_zero() ? UniPoly() : UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("UniPoly: negative monomial degree");
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

const Rational& UniPoly::lc() const {
  if (is_zero()) throw std::invalid_argument("UniPoly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return UniPoly();
  return (Rational(1) / lc()) * (*this);
}

UniPoly UniPoly::operator-() const { return Rational(-1) * (*this); }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  if (c.is_zero()) return UniPoly();
  std::vector<Rational> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("UniPoly: negative power");
  UniPoly acc = UniPoly::constant(Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& p, const UniPoly& q) {
  if (q.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  std::vector<Rational> rem = p.coeffs_;
  int dq = q.degree();
  if (p.degree() < dq) return {UniPoly(), p};
  std::vector<Rational> quo(p.degree() - dq + 1);
  for (int i = p.degree(); i >= dq; --i) {
    if (rem[i].is_zero()) continue;
    Rational f = rem[i] / q.lc();
    quo[i - dq] = f;
    for (int j = 0; j <= dq; ++j) rem[i - dq + j] -= f * q.coeffs_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::div_exact(const UniPoly& p, const UniPoly& q) {
  auto [quo, rem] = divmod(p, q);
  if (!rem.is_zero()) throw std::domain_error("UniPoly: inexact division");
  return quo;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool show_coeff = (i == 0) || a != Rational(1);
    if (show_coeff) os << a.str();
    if (i > 0) {
      if (show_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool upoly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

UniPoly upoly_gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    auto [quo, rem] = UniPoly::divmod(a, b);
    (void)quo;
    a = b;
    b = rem;
  }
  return a.monic();
}

UniPoly SquarefreeDecomposition::reconstruct() const {
  UniPoly acc = UniPoly::constant(lc);
  for (const auto& [s, m] : factors) acc = acc * s.pow(m);
  return acc;
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  SquarefreeDecomposition out;
  out.lc = p.lc();
  if (p.is_constant()) return out;

  // Yun's algorithm on the monic normalization; every quotient below stays monic.
  UniPoly g = p.monic();
  UniPoly d = upoly_gcd(g, g.derivative());
  UniPoly b = UniPoly::div_exact(g, d);
  UniPoly z = UniPoly::div_exact(g.derivative(), d) - b.derivative();
  int mult = 1;
  while (!b.is_constant()) {
    UniPoly s = upoly_gcd(b, z);
    if (!s.is_constant()) out.factors.emplace_back(s, mult);
    b = UniPoly::div_exact(b, s);
    z = UniPoly::div_exact(z, s) - b.derivative();
    ++mult;
  }
  return out;
}

std::vector<UniPoly> coprime_refinement(const std::vector<UniPoly>& fs) {
  std::vector<UniPoly> work;
  for (const auto& f : fs) {
    if (f.is_zero()) throw std::invalid_argument("coprime_refinement: zero input");
    if (!f.is_constant()) work.push_back(f.monic());
  }
  // Split any sharing pair by its gcd until the multiset is pairwise coprime.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(work.begin(), work.end(), upoly_less);
    work.erase(std::unique(work.begin(), work.end()), work.end());
    for (size_t i = 0; i < work.size() && !changed; ++i) {
      for (size_t j = i + 1; j < work.size() && !changed; ++j) {
        UniPoly d = upoly_gcd(work[i], work[j]);
        if (d.is_constant()) continue;
        UniPoly a = UniPoly::div_exact(work[i], d).monic();
        UniPoly b = UniPoly::div_exact(work[j], d).monic();
        work.erase(work.begin() + j);
        work.erase(work.begin() + i);
        if (!a.is_constant()) work.push_back(a);
        if (!b.is_constant()) work.push_back(b);
        work.push_back(d);
        changed = true;
      }
    }
  }
  std::sort(work.begin(), work.end(), upoly_less);
  return work;
}

int order_at(const UniPoly& p, const UniPoly& place) {
  if (p.is_zero()) throw std::invalid_argument("order_at: zero polynomial");
  if (place.is_constant()) throw std::invalid_argument("order_at: constant place");
  int ord = 0;
  UniPoly rest = p;
  while (true) {
    auto [quo, rem] = UniPoly::divmod(rest, place);
    if (!rem.is_zero()) return ord;
    rest = quo;
    ++ord;
  }
}

}  // namespace t237

#include "t237/weierstrass.hpp"

#include <algorithm>
#include <stdexcept>

namespace t237 {

WeierstrassModel::WeierstrassModel(UniPoly a_in, UniPoly b_in, int budget_in)
    : a(std::move(a_in)), b(std::move(b_in)), budget(budget_in) {
  if (budget < 1) throw std::invalid_argument("WeierstrassModel: budget must be >= 1");
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("WeierstrassModel: A and B cannot both vanish");
  if (a.degree() > 4 * budget)
    throw std::invalid_argument("WeierstrassModel: deg A exceeds budget 4N");
  if (b.degree() > 6 * budget)
    throw std::invalid_argument("WeierstrassModel: deg B exceeds budget 6N");
}

Place Place::at_infinity() {
  Place p;
  p.infinity_ = true;
  return p;
}

Place Place::finite(UniPoly monic_poly) {
  if (monic_poly.is_constant())
    throw std::invalid_argument("Place: finite place must be nonconstant");
  if (monic_poly.lc() != Rational(1)) throw std::invalid_argument("Place: place must be monic");
  Place p;
  p.poly_ = std::move(monic_poly);
  return p;
}

const UniPoly& Place::poly() const {
  if (infinity_) throw std::domain_error("Place: infinity has no polynomial");
  return poly_;
}

std::string Place::str() const { return infinity_ ? "infinity" : poly_.str(); }

KodairaType KodairaType::I(int n) {
  if (n < 0) throw std::invalid_argument("KodairaType: negative index");
  return {n == 0 ? KodairaTag::I0 : KodairaTag::In, n};
}

KodairaType KodairaType::IStar(int n) {
  if (n < 0) throw std::invalid_argument("KodairaType: negative index");
  return {n == 0 ? KodairaTag::I0Star : KodairaTag::InStar, n};
}

long KodairaType::euler() const {
  switch (tag) {
    case KodairaTag::I0: return 0;
    case KodairaTag::In: return n;
    case KodairaTag::II: return 2;
    case KodairaTag::III: return 3;
    case KodairaTag::IV: return 4;
    case KodairaTag::I0Star: return 6;
    case KodairaTag::InStar: return n + 6;
    case KodairaTag::IVStar: return 8;
    case KodairaTag::IIIStar: return 9;
    case KodairaTag::IIStar: return 10;
    case KodairaTag::NonMinimal: break;
  }
  throw std::domain_error("KodairaType: no Euler number for a non-minimal place");
}

std::string KodairaType::name() const {
  switch (tag) {
    case KodairaTag::I0: return "I0";
    case KodairaTag::In: return "I" + std::to_string(n);
    case KodairaTag::II: return "II";
    case KodairaTag::III: return "III";
    case KodairaTag::IV: return "IV";
    case KodairaTag::I0Star: return "I0*";
    case KodairaTag::InStar: return "I" + std::to_string(n) + "*";
    case KodairaTag::IVStar: return "IV*";
    case KodairaTag::IIIStar: return "III*";
    case KodairaTag::IIStar: return "II*";
    case KodairaTag::NonMinimal: return "NonMinimal";
  }
  return "?";
}

std::string JValue::str() const {
  switch (kind) {
    case Kind::Finite: return value.str();
    case Kind::Infinite: return "infinity";
    case Kind::Undefined: return "undefined";
  }
  return "?";
}

UniPoly discriminant(const WeierstrassModel& m) {
  UniPoly delta = Rational(4) * m.a.pow(3) + Rational(27) * m.b.pow(2);
  if (delta.is_zero())
    throw std::domain_error("discriminant: 4A^3 + 27B^2 vanishes identically");
  return delta;
}

namespace {

Order order_of(const UniPoly& p, const UniPoly& place) {
  if (p.is_zero()) return Order::infinity();
  return Order(order_at(p, place));
}

Order order_at_infinity(const UniPoly& p, int budget) {
  if (p.is_zero()) return Order::infinity();
  return Order(budget - p.degree());
}

}  // namespace

std::vector<PlaceOrders> analyze_places(const WeierstrassModel& m) {
  UniPoly delta = discriminant(m);
  std::vector<UniPoly> parts;
  for (const auto& [s, mult] : squarefree_decomposition(delta).factors) {
    (void)mult;
    parts.push_back(s);
  }
  for (const UniPoly* section : {&m.a, &m.b}) {
    if (section->is_zero() || section->is_constant()) continue;
    for (const auto& [s, mult] : squarefree_decomposition(*section).factors) {
      (void)mult;
      parts.push_back(s);
    }
  }
  std::vector<PlaceOrders> out;
  for (const UniPoly& p : coprime_refinement(parts)) {
    Order d = order_of(delta, p);
    if (d == Order(0)) continue;  // smooth fiber along this place
    out.push_back({Place::finite(p), order_of(m.a, p), order_of(m.b, p), d, p.degree()});
  }
  out.push_back({Place::at_infinity(), order_at_infinity(m.a, 4 * m.budget),
                 order_at_infinity(m.b, 6 * m.budget), order_at_infinity(delta, 12 * m.budget),
                 1});
  return out;
}

PlaceOrders orders_at(const WeierstrassModel& m, const Place& place) {
  UniPoly delta = discriminant(m);
  if (place.is_infinity())
    return {place, order_at_infinity(m.a, 4 * m.budget), order_at_infinity(m.b, 6 * m.budget),
            order_at_infinity(delta, 12 * m.budget), 1};
  return {place, order_of(m.a, place.poly()), order_of(m.b, place.poly()),
          order_of(delta, place.poly()), place.degree()};
}

KodairaType classify(const Order& a, const Order& b, const Order& d) {
  if (d == Order(0)) return KodairaType::I(0);
  if (a == Order(0)) return KodairaType::I(static_cast<int>(d.value()));
  if (a >= Order(1) && b == Order(1) && d == Order(2)) return {KodairaTag::II};
  if (a == Order(1) && b >= Order(2) && d == Order(3)) return {KodairaTag::III};
  if (a >= Order(2) && b == Order(2) && d == Order(4)) return {KodairaTag::IV};
  if (a >= Order(2) && b >= Order(3) && d == Order(6)) return KodairaType::IStar(0);
  if (a == Order(2) && b == Order(3) && d > Order(6) && !d.is_infinite())
    return KodairaType::IStar(static_cast<int>(d.value() - 6));
  if (a >= Order(3) && b == Order(4) && d == Order(8)) return {KodairaTag::IVStar};
  if (a == Order(3) && b >= Order(5) && d == Order(9)) return {KodairaTag::IIIStar};
  if (a >= Order(4) && b == Order(5) && d == Order(10)) return {KodairaTag::IIStar};
  if (a >= Order(4) && b >= Order(6) && d >= Order(12)) return {KodairaTag::NonMinimal};
  throw std::domain_error("classify: order triple (" + a.str() + ", " + b.str() + ", " + d.str() +
                          ") does not arise from a Weierstrass model");
}

namespace {

// Remainder arithmetic in Q[u]/(place) for j-evaluation at a finite place.
UniPoly mod_place(const UniPoly& p, const UniPoly& place) {
  return UniPoly::divmod(p, place).second;
}

UniPoly invert_mod(const UniPoly& p, const UniPoly& place) {
  // Extended Euclid: s p + t place = gcd; gcd must be a unit.
  UniPoly r0 = place, r1 = mod_place(p, place);
  UniPoly s0, s1 = UniPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r2] = UniPoly::divmod(r0, r1);
    UniPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0.is_constant() && !r0.is_zero())
    return mod_place((Rational(1) / r0.coeff(0)) * s0, place);
  throw std::domain_error("j_invariant: residue not invertible modulo the place");
}

}  // namespace

JValue j_invariant(const WeierstrassModel& m, const Place& place) {
  UniPoly delta = discriminant(m);
  PlaceOrders ord = orders_at(m, place);
  Order num_ord = 3 * ord.ord_a;  // order of 4A^3
  const Order& den_ord = ord.ord_delta;
  if (den_ord > Order(0) || den_ord.is_infinite()) {
    if (num_ord > den_ord) return JValue::finite(UniPoly());
    if (num_ord < den_ord) return JValue::infinite();
    return JValue::undefined();  // equal positive orders: minimalize first
  }
  Rational scale(12 * 12 * 12 * 4);
  if (place.is_infinity()) {
    // Value at u = infinity of 12^3 4 a^3 / delta; num_ord > 0 already handled the
    // vanishing case, so here 3 deg a = deg delta.
    if (num_ord > Order(0)) return JValue::finite(UniPoly());
    Rational lead = scale * m.a.lc() * m.a.lc() * m.a.lc() / delta.lc();
    return JValue::finite(UniPoly::constant(lead));
  }
  UniPoly num = mod_place(scale * m.a.pow(3), place.poly());
  if (num.is_zero()) return JValue::finite(UniPoly());
  UniPoly den_inv = invert_mod(delta, place.poly());
  return JValue::finite(mod_place(num * den_inv, place.poly()));
}

std::vector<FiberReport> fiber_reports(const WeierstrassModel& m) {
  std::vector<FiberReport> out;
  for (const auto& po : analyze_places(m)) {
    KodairaType type = classify(po.ord_a, po.ord_b, po.ord_delta);
    out.push_back({po.place, po.ord_a, po.ord_b, po.ord_delta, po.residual_degree, type,
                   j_invariant(m, po.place)});
  }
  return out;
}

long euler_sum(const std::vector<FiberReport>& reports) {
  long acc = 0;
  for (const auto& r : reports) acc += r.residual_degree * r.type.euler();
  return acc;
}

long ord_delta_degree_sum(const std::vector<FiberReport>& reports) {
  long acc = 0;
  for (const auto& r : reports) acc += r.residual_degree * r.ord_delta.value();
  return acc;
}

WeierstrassModel minimalize(const WeierstrassModel& m, const Place& place) {
  PlaceOrders ord = orders_at(m, place);
  if (classify(ord.ord_a, ord.ord_b, ord.ord_delta).is_minimal())
    throw std::invalid_argument("minimalize: place is not non-minimal");
  int new_budget = m.budget - place.degree();
  if (new_budget < 1)
    throw std::domain_error("minimalize: budget would drop below 1 (non-log-canonical input)");
  if (place.is_infinity()) return WeierstrassModel(m.a, m.b, new_budget);
  UniPoly a = m.a.is_zero() ? UniPoly() : UniPoly::div_exact(m.a, place.poly().pow(4));
  UniPoly b = m.b.is_zero() ? UniPoly() : UniPoly::div_exact(m.b, place.poly().pow(6));
  return WeierstrassModel(std::move(a), std::move(b), new_budget);
}

bool BrieskornParams::all_zero() const {
  for (const Rational* t : {&t4, &t10, &t12, &t16, &t18, &t22, &t24, &t28, &t30, &t36, &t42})
    if (!t->is_zero()) return false;
  return true;
}

WeightedBiPoly BrieskornParams::a_form() const {
  WeightedBiPoly acc(1, 6);
  const std::pair<const Rational*, int> terms[] = {
      {&t4, 4}, {&t10, 3}, {&t16, 2}, {&t22, 1}, {&t28, 0}};
  for (const auto& [c, xdeg] : terms)
    acc = acc + WeightedBiPoly::monomial(1, 6, 28 - 6 * xdeg, xdeg, *c);
  return acc;
}

WeightedBiPoly BrieskornParams::b_form() const {
  WeightedBiPoly acc = WeightedBiPoly::monomial(1, 6, 0, 7, Rational(1));
  const std::pair<const Rational*, int> terms[] = {
      {&t12, 5}, {&t18, 4}, {&t24, 3}, {&t30, 2}, {&t36, 1}, {&t42, 0}};
  for (const auto& [c, xdeg] : terms)
    acc = acc + WeightedBiPoly::monomial(1, 6, 42 - 6 * xdeg, xdeg, *c);
  return acc;
}

WeierstrassModel brieskorn_model(const BrieskornParams& t) {
  if (t.all_zero())
    throw std::domain_error(
        "brieskorn_model: the zero parameter point is a triangle singularity, not log canonical");
  Chart a = chart_and_budget(t.a_form(), 8);
  Chart b = chart_and_budget(t.b_form(), 12);
  return WeierstrassModel(a.finite_chart, b.finite_chart, 2);
}

BrieskornParams special_locus_params(const Rational& a, const Rational& b) {
  WeightedBiPoly w6 = WeightedBiPoly::monomial(1, 6, 6, 0);
  WeightedBiPoly x = WeightedBiPoly::monomial(1, 6, 0, 1);
  WeightedBiPoly ell = x + (Rational(-1, 7) * b) * w6;
  WeightedBiPoly a_form = a * (ell.pow(4) * WeightedBiPoly::monomial(1, 6, 4, 0));
  WeightedBiPoly b_form = ell.pow(6) * (ell + b * w6);

  BrieskornParams out;
  out.t4 = a_form.coeff(4, 4);
  out.t10 = a_form.coeff(10, 3);
  out.t16 = a_form.coeff(16, 2);
  out.t22 = a_form.coeff(22, 1);
  out.t28 = a_form.coeff(28, 0);
  out.t12 = b_form.coeff(12, 5);
  out.t18 = b_form.coeff(18, 4);
  out.t24 = b_form.coeff(24, 3);
  out.t30 = b_form.coeff(30, 2);
  out.t36 = b_form.coeff(36, 1);
  out.t42 = b_form.coeff(42, 0);
  // The normal form has no x^6 w^6 term and is monic in x^7; both hold identically.
  if (!b_form.coeff(6, 6).is_zero() || b_form.coeff(0, 7) != Rational(1))
    throw std::domain_error("special_locus_params: expansion left the normal form");
  if (!(out.a_form() == a_form) || !(out.b_form() == b_form))
    throw std::domain_error("special_locus_params: stray terms outside the family support");
  return out;
}

SurfaceReport classify_surface(const BrieskornParams& t) {
  WeierstrassModel model = brieskorn_model(t);
  SurfaceReport report;
  report.fibers = fiber_reports(model);

  std::vector<Place> nonminimal;
  for (const auto& f : report.fibers)
    if (!f.type.is_minimal()) nonminimal.push_back(f.place);

  if (nonminimal.empty()) {
    report.type = SurfaceType::I;
    report.euler = euler_sum(report.fibers);
    return report;
  }
  if (nonminimal.size() > 1)
    throw std::domain_error("classify_surface: multiple non-minimal places");
  report.euler = 0;
  for (const auto& f : report.fibers)
    if (f.type.is_minimal()) report.euler += f.residual_degree * f.type.euler();

  const Place& place = nonminimal.front();
  report.nonminimal_place = place;
  WeierstrassModel minimal = minimalize(model, place);
  report.minimal_fibers = fiber_reports(minimal);
  report.minimal_euler = euler_sum(report.minimal_fibers);

  PlaceOrders at_place = orders_at(minimal, place);
  KodairaType fiber = classify(at_place.ord_a, at_place.ord_b, at_place.ord_delta);
  report.j = j_invariant(minimal, place);
  if (at_place.ord_delta == Order(0)) {
    report.type = SurfaceType::II;
  } else if (fiber == KodairaType::I(1)) {
    report.type = SurfaceType::III;
  } else {
    throw std::domain_error("classify_surface: contracted fiber is neither smooth nor I1");
  }
  return report;
}

std::string surface_type_name(SurfaceType t) {
  switch (t) {
    case SurfaceType::I: return "I";
    case SurfaceType::II: return "II";
    case SurfaceType::III: return "III";
  }
  return "?";
}

}  // namespace t237

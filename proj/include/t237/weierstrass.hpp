// Weierstrass models over the line: per-place vanishing orders, Kodaira fiber
// types, j-invariants, minimalization, and the eleven-parameter family of degree-42
// double covers with its special locus and surface-type detector.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "t237/bipoly.hpp"
#include "t237/order.hpp"
#include "t237/rational.hpp"
#include "t237/upoly.hpp"

namespace t237 {

// y^2 = x^3 + A x + B with A, B given by their finite charts a(u), b(u) and a degree
// budget N: deg a <= 4N, deg b <= 6N, discriminant budget 12N. N = 2 is a K3, N = 1 a
// rational elliptic surface.
struct WeierstrassModel {
  WeierstrassModel(UniPoly a, UniPoly b, int budget);
  UniPoly a;
  UniPoly b;
  int budget;
};

// A closed point of the base line: a monic finite place polynomial (coprime-refined,
// so all section orders are constant along it) or the distinguished place w = 0.
class Place {
 public:
  static Place at_infinity();
  static Place finite(UniPoly monic_poly);

  bool is_infinity() const { return infinity_; }
  const UniPoly& poly() const;
  // Number of geometric points: deg(poly), or 1 at infinity.
  int degree() const { return infinity_ ? 1 : poly_.degree(); }
  std::string str() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.infinity_ == b.infinity_ && (a.infinity_ || a.poly_ == b.poly_);
  }

 private:
  Place() = default;
  bool infinity_ = false;
  UniPoly poly_;
};

enum class KodairaTag { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar, NonMinimal };

struct KodairaType {
  KodairaTag tag = KodairaTag::I0;
  int n = 0;  // index for In / In*

  static KodairaType I(int n);
  static KodairaType IStar(int n);

  bool is_minimal() const { return tag != KodairaTag::NonMinimal; }
  // I_n -> n, II -> 2, III -> 3, IV -> 4, I_n* -> n+6, IV* -> 8, III* -> 9, II* -> 10.
  long euler() const;
  std::string name() const;

  friend bool operator==(const KodairaType& a, const KodairaType& b) {
    return a.tag == b.tag && a.n == b.n;
  }
};

// Value of 12^3 4A^3 / Delta at a place: a residue in Q[u]/(place) (a constant for
// rational places), a pole at I_n fibers, or undefined when numerator and
// denominator vanish to the same positive order (minimalize first).
struct JValue {
  enum class Kind { Finite, Infinite, Undefined };
  Kind kind = Kind::Undefined;
  UniPoly value;  // remainder mod the place when finite

  static JValue finite(UniPoly v) { return {Kind::Finite, std::move(v)}; }
  static JValue infinite() { return {Kind::Infinite, {}}; }
  static JValue undefined() { return {Kind::Undefined, {}}; }
  std::string str() const;

  friend bool operator==(const JValue& a, const JValue& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
};

struct PlaceOrders {
  Place place;
  Order ord_a, ord_b, ord_delta;
  int residual_degree;
};

struct FiberReport {
  Place place;
  Order ord_a, ord_b, ord_delta;
  int residual_degree;
  KodairaType type;
  JValue j;
};

// 4A^3 + 27B^2; identically zero is a hard error (non-reduced total space).
UniPoly discriminant(const WeierstrassModel& m);

// Vanishing orders at every singular place: the coprime refinement of the squarefree
// factors of Delta, a, b (so orders are constant on each place), followed by the
// place at infinity with orders budget - chart degree.
std::vector<PlaceOrders> analyze_places(const WeierstrassModel& m);

// Kodaira type from the order triple; throws on a triple no Weierstrass model
// produces.
KodairaType classify(const Order& ord_a, const Order& ord_b, const Order& ord_delta);

JValue j_invariant(const WeierstrassModel& m, const Place& place);

// analyze_places + classify + j for every singular place.
std::vector<FiberReport> fiber_reports(const WeierstrassModel& m);

// Orders of A, B, Delta at one given place of the model.
PlaceOrders orders_at(const WeierstrassModel& m, const Place& place);

// Sum of residual_degree * euler over the reports; equals 12N for minimal models.
long euler_sum(const std::vector<FiberReport>& reports);

// Sum of residual_degree * ord_delta; equals 12N whether or not a non-minimal
// place is present (deg Delta plus its order at infinity).
long ord_delta_degree_sum(const std::vector<FiberReport>& reports);

// Divides A by place^4 and B by place^6 (degree bookkeeping at infinity); the budget
// drops by the place degree and must stay >= 1.
WeierstrassModel minimalize(const WeierstrassModel& m, const Place& place);

// Coefficients of the family A = t4 x^4 w^4 + ... + t28 w^28,
// B = x^7 + t12 x^5 w^12 + ... + t42 w^42 over the weighted line (weights 1, 6).
struct BrieskornParams {
  Rational t4, t10, t12, t16, t18, t22, t24, t28, t30, t36, t42;

  bool all_zero() const;
  WeightedBiPoly a_form() const;  // weighted degree 28
  WeightedBiPoly b_form() const;  // weighted degree 42, monic in x
};

// Budget-2 model with charts a(u), b(u) of the family sections; the all-zero
// parameter point (a triangle singularity, not log canonical) is rejected.
WeierstrassModel brieskorn_model(const BrieskornParams& t);

// Parameters of the locus A = a l^4 w^4, B = l^6 (l + b w^6), l = x - (b/7) w^6;
// the x^6 w^6 coefficient of B cancels and t4 = a.
BrieskornParams special_locus_params(const Rational& a, const Rational& b);

enum class SurfaceType { I, II, III };

struct SurfaceReport {
  SurfaceType type = SurfaceType::I;
  std::vector<FiberReport> fibers;  // of the budget-2 model
  long euler;                       // 24 when no non-minimal place exists
  std::optional<Place> nonminimal_place;
  std::vector<FiberReport> minimal_fibers;  // after minimalization (types II/III)
  long minimal_euler = 0;                   // 12
  std::optional<JValue> j;                  // of the contracted fiber (types II/III)
};

// Type I: no non-minimal place (ADE degeneration only). Otherwise minimalize at the
// unique non-minimal place; a smooth fiber there gives Type II with its j-value, an
// I1 fiber gives Type III.
SurfaceReport classify_surface(const BrieskornParams& t);

std::string surface_type_name(SurfaceType t);

}  // namespace t237

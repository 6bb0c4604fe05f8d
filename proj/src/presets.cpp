#include "t237/presets.hpp"

namespace t237 {

SurfaceRRData theorem43_data() {
  return SurfaceRRData(Rational(2), Rational(1, 143), 1, RRMode::Canonical,
                       {RRSingularity::canonical(hj_expand(13, 6)),
                        RRSingularity::canonical(hj_expand(11, 7))});
}

SurfaceRRData theorem44_data() {
  return SurfaceRRData(Rational(2), Rational(1, 42), 1, RRMode::Pair,
                       {RRSingularity::with_incidence(hj_expand(2, 1), {1}),
                        RRSingularity::with_incidence(hj_expand(3, 2), {1, 0}),
                        RRSingularity::with_incidence(hj_expand(7, 6), {0, 0, 0, 0, 0, 1})});
}

CurveConfig t237_config() {
  std::vector<std::string> names;
  for (int i = 0; i <= 9; ++i) names.push_back("Theta" + std::to_string(i));
  std::vector<long> selfint(10, -2);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 8; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(6, 9);
  return CurveConfig(std::move(names), std::move(selfint), edges);
}

CurveConfig type1_config() {
  // Chain Theta0-...-Theta5-E-Theta6-Theta7-Theta8 with Theta9 attached to Theta6.
  std::vector<std::string> names = {"Theta0", "Theta1", "Theta2", "Theta3", "Theta4", "Theta5",
                                    "E",      "Theta6", "Theta7", "Theta8", "Theta9"};
  std::vector<long> selfint = {-2, -2, -2, -2, -2, -3, -1, -3, -2, -2, -2};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 9; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(7, 10);  // Theta6 - Theta9
  return CurveConfig(std::move(names), std::move(selfint), edges);
}

}  // namespace t237

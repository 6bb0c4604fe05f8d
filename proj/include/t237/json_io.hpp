// JSON schema for domain objects: rationals as "p/q" strings or integers,
// polynomials as coefficient arrays (index = degree), configurations as curve/edge
// lists. Never floating point.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "t237/config.hpp"
#include "t237/riemann_roch.hpp"
#include "t237/weierstrass.hpp"

namespace t237 {

using Json = nlohmann::json;

// Schema violations; `issues` lists every offending field.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

Json rational_to_json(const Rational& r);
Json upoly_to_json(const UniPoly& p);
Json divisor_to_json(const QDivisor& d);
Json config_to_json(const CurveConfig& c);
Json brieskorn_to_json(const BrieskornParams& t);
Json rr_data_to_json(const SurfaceRRData& d);

Rational rational_from_json(const Json& j);
UniPoly upoly_from_json(const Json& j);
QDivisor divisor_from_json(const Json& j);
CurveConfig config_from_json(const Json& j);
BrieskornParams brieskorn_from_json(const Json& j);
SurfaceRRData rr_data_from_json(const Json& j);

// Resolve a preset name or load and parse a JSON file.
CurveConfig load_config(const std::string& path_or_preset);
SurfaceRRData load_rr_data(const std::string& path_or_preset);
BrieskornParams load_brieskorn(const std::string& path);

// Reads a file and parses it, reporting line/column on malformed JSON.
Json parse_json_file(const std::string& path);

}  // namespace t237

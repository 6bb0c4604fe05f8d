#include "t237/json_io.hpp"

#include <fstream>
#include <sstream>

#include "t237/presets.hpp"

namespace t237 {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::ostringstream os;
  os << "invalid input:";
  for (const auto& s : issues) os << "\n  - " << s;
  return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

Json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.num().fits_slong_p()) return Json(r.num().get_si());
  return Json(r.str());
}

Json upoly_to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_to_json(c));
  return arr;
}

Json divisor_to_json(const QDivisor& d) {
  Json obj = Json::object();
  for (const auto& [name, c] : d.coeffs()) obj[name] = rational_to_json(c);
  return obj;
}

Json config_to_json(const CurveConfig& c) {
  Json curves = Json::array();
  for (int i = 0; i < c.rank(); ++i)
    curves.push_back(Json{{"name", c.names()[i]}, {"selfint", c.selfint(i)}});
  Json edges = Json::array();
  for (int i = 0; i < c.rank(); ++i)
    for (int j = i + 1; j < c.rank(); ++j)
      for (long m = 0; m < c.adjacency(i, j); ++m) edges.push_back(Json::array({i, j}));
  return Json{{"curves", curves}, {"edges", edges}};
}

Json brieskorn_to_json(const BrieskornParams& t) {
  return Json{{"t4", rational_to_json(t.t4)},   {"t10", rational_to_json(t.t10)},
              {"t12", rational_to_json(t.t12)}, {"t16", rational_to_json(t.t16)},
              {"t18", rational_to_json(t.t18)}, {"t22", rational_to_json(t.t22)},
              {"t24", rational_to_json(t.t24)}, {"t28", rational_to_json(t.t28)},
              {"t30", rational_to_json(t.t30)}, {"t36", rational_to_json(t.t36)},
              {"t42", rational_to_json(t.t42)}};
}

Json rr_data_to_json(const SurfaceRRData& d) {
  Json sings = Json::array();
  for (const auto& s : d.singularities) {
    Json entry{{"chain", s.chain.selfints()}};
    if (s.incidence)
      entry["incidence"] = *s.incidence;
    else
      entry["canonical"] = true;
    sings.push_back(entry);
  }
  return Json{{"chi_O", rational_to_json(d.chi_O)},
              {"vol", rational_to_json(d.vol)},
              {"p_g", d.p_g},
              {"mode", d.mode == RRMode::Canonical ? "canonical" : "pair"},
              {"singularities", sings}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

UniPoly upoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return UniPoly(std::move(coeffs));
}

QDivisor divisor_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a label -> coefficient object");
  QDivisor d;
  for (auto it = j.begin(); it != j.end(); ++it) d.set(it.key(), rational_from_json(it.value()));
  return d;
}

namespace {

// Field access helpers that accumulate schema issues instead of failing fast.
const Json* expect(const Json& j, const std::string& key, std::vector<std::string>& issues) {
  if (!j.is_object() || !j.contains(key)) {
    issues.push_back("missing field \"" + key + "\"");
    return nullptr;
  }
  return &j.at(key);
}

Rational get_rational(const Json& j, const std::string& key, std::vector<std::string>& issues) {
  const Json* field = expect(j, key, issues);
  if (!field) return Rational(0);
  try {
    return rational_from_json(*field);
  } catch (const std::exception& e) {
    issues.push_back("field \"" + key + "\": " + e.what());
    return Rational(0);
  }
}

}  // namespace

CurveConfig config_from_json(const Json& j) {
  std::vector<std::string> issues;
  std::vector<std::string> names;
  std::vector<long> selfint;
  std::vector<std::pair<int, int>> edges;
  const Json* curves = expect(j, "curves", issues);
  if (curves) {
    if (!curves->is_array()) {
      issues.push_back("field \"curves\": expected an array");
    } else {
      int idx = 0;
      for (const auto& c : *curves) {
        if (!c.is_object() || !c.contains("name") || !c.contains("selfint") ||
            !c.at("name").is_string() || !c.at("selfint").is_number_integer()) {
          issues.push_back("curve #" + std::to_string(idx) +
                           ": expected {\"name\": string, \"selfint\": integer}");
        } else {
          names.push_back(c.at("name").get<std::string>());
          selfint.push_back(c.at("selfint").get<long>());
        }
        ++idx;
      }
    }
  }
  const Json* ej = expect(j, "edges", issues);
  if (ej) {
    if (!ej->is_array()) {
      issues.push_back("field \"edges\": expected an array of index pairs");
    } else {
      int idx = 0;
      for (const auto& e : *ej) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
          issues.push_back("edge #" + std::to_string(idx) + ": expected [i, j]");
        else
          edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        ++idx;
      }
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  try {
    return CurveConfig(std::move(names), std::move(selfint), edges);
  } catch (const std::exception& e) {
    throw ValidationError({e.what()});
  }
}

BrieskornParams brieskorn_from_json(const Json& j) {
  std::vector<std::string> issues;
  if (!j.is_object()) throw ValidationError({"expected an object with keys t4 .. t42"});
  BrieskornParams t;
  auto opt = [&](const char* key, Rational& slot) {
    if (!j.contains(key)) return;  // missing parameters default to zero
    try {
      slot = rational_from_json(j.at(key));
    } catch (const std::exception& e) {
      issues.push_back("field \"" + std::string(key) + "\": " + e.what());
    }
  };
  opt("t4", t.t4);
  opt("t10", t.t10);
  opt("t12", t.t12);
  opt("t16", t.t16);
  opt("t18", t.t18);
  opt("t22", t.t22);
  opt("t24", t.t24);
  opt("t28", t.t28);
  opt("t30", t.t30);
  opt("t36", t.t36);
  opt("t42", t.t42);
  static const char* known[] = {"t4",  "t10", "t12", "t16", "t18", "t22",
                                "t24", "t28", "t30", "t36", "t42"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) issues.push_back("unknown field \"" + it.key() + "\"");
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return t;
}

SurfaceRRData rr_data_from_json(const Json& j) {
  std::vector<std::string> issues;
  Rational chi = get_rational(j, "chi_O", issues);
  Rational vol = get_rational(j, "vol", issues);
  long p_g = 0;
  if (const Json* f = expect(j, "p_g", issues)) {
    if (f->is_number_integer())
      p_g = f->get<long>();
    else
      issues.push_back("field \"p_g\": expected an integer");
  }
  RRMode mode = RRMode::Canonical;
  if (const Json* f = expect(j, "mode", issues)) {
    if (f->is_string() && f->get<std::string>() == "canonical")
      mode = RRMode::Canonical;
    else if (f->is_string() && f->get<std::string>() == "pair")
      mode = RRMode::Pair;
    else
      issues.push_back("field \"mode\": expected \"canonical\" or \"pair\"");
  }
  std::vector<RRSingularity> sings;
  if (const Json* f = expect(j, "singularities", issues)) {
    if (!f->is_array()) {
      issues.push_back("field \"singularities\": expected an array");
    } else {
      int idx = 0;
      for (const auto& s : *f) {
        std::string at = "singularity #" + std::to_string(idx);
        if (!s.is_object() || !s.contains("chain") || !s.at("chain").is_array()) {
          issues.push_back(at + ": expected {\"chain\": [...]}");
          ++idx;
          continue;
        }
        try {
          std::vector<long> bs;
          for (const auto& b : s.at("chain")) bs.push_back(b.get<long>());
          HJChain chain(std::move(bs));
          if (s.contains("incidence")) {
            std::vector<long> mult;
            for (const auto& m : s.at("incidence")) mult.push_back(m.get<long>());
            sings.push_back(RRSingularity::with_incidence(std::move(chain), std::move(mult)));
          } else if (s.contains("canonical") && s.at("canonical").is_boolean() &&
                     s.at("canonical").get<bool>()) {
            sings.push_back(RRSingularity::canonical(std::move(chain)));
          } else {
            issues.push_back(at + ": need \"incidence\" or \"canonical\": true");
          }
        } catch (const std::exception& e) {
          issues.push_back(at + ": " + e.what());
        }
        ++idx;
      }
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  try {
    return SurfaceRRData(std::move(chi), std::move(vol), p_g, mode, std::move(sings));
  } catch (const std::exception& e) {
    throw ValidationError({e.what()});
  }
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot open file \"" + path + "\""});
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line/column.
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError({"malformed JSON in \"" + path + "\" at line " + std::to_string(line) +
                           ", column " + std::to_string(col) + ": " + e.what()});
  }
}

CurveConfig load_config(const std::string& path_or_preset) {
  if (path_or_preset == "t237") return t237_config();
  if (path_or_preset == "type-I-config") return type1_config();
  return config_from_json(parse_json_file(path_or_preset));
}

SurfaceRRData load_rr_data(const std::string& path_or_preset) {
  if (path_or_preset == "theorem-4.3") return theorem43_data();
  if (path_or_preset == "theorem-4.4") return theorem44_data();
  return rr_data_from_json(parse_json_file(path_or_preset));
}

BrieskornParams load_brieskorn(const std::string& path) {
  return brieskorn_from_json(parse_json_file(path));
}

}  // namespace t237

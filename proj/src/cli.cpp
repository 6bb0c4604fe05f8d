#include "t237/cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "t237/json_io.hpp"
#include "t237/lattice.hpp"
#include "t237/presets.hpp"
#include "t237/series.hpp"

namespace t237::cli {

namespace {

int default_truncation() {
  if (const char* env = std::getenv("T237_TRUNCATION")) {
    try {
      int n = std::stoi(env);
      if (n >= 0) return n;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 150;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (long v : parse_longs(s)) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

QDivisor parse_divisor(const std::string& s) {
  QDivisor d;
  if (s.empty()) return d;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      d.set(item, d.coeff(item) + Rational(1));
    else
      d.set(item.substr(0, eq), Rational::parse(item.substr(eq + 1)));
  }
  return d;
}

LatticeVector parse_lattice_vector(const std::string& s, int rank) {
  if (rank == 10) {
    // Named vectors in the standard ten-curve basis.
    if (s == "h") return {6, 12, 18, 24, 30, 36, 42, 28, 14, 21};
    if (s == "s") return {1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    if (s == "f") return {0, 1, 2, 3, 4, 5, 6, 4, 2, 3};
  }
  LatticeVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Integer(item));
  if (static_cast<int>(v.size()) != rank)
    throw std::invalid_argument("lattice vector \"" + s + "\" does not match rank " +
                                std::to_string(rank));
  return v;
}

Json order_to_json(const Order& o) {
  if (o.is_infinite()) return Json("inf");
  return Json(o.value());
}

Json fiber_to_json(const FiberReport& f) {
  Json out{{"place", f.place.is_infinity() ? Json("infinity") : upoly_to_json(f.place.poly())},
           {"place_str", f.place.str()},
           {"degree", f.residual_degree},
           {"ord_a", order_to_json(f.ord_a)},
           {"ord_b", order_to_json(f.ord_b)},
           {"ord_delta", order_to_json(f.ord_delta)},
           {"type", f.type.name()}};
  out["j"] = f.j.kind == JValue::Kind::Finite ? Json(f.j.value.is_zero() ? "0" : f.j.value.str())
                                              : Json(f.j.str());
  return out;
}

Json surface_to_json(const SurfaceReport& r) {
  Json fibers = Json::array();
  for (const auto& f : r.fibers) fibers.push_back(fiber_to_json(f));
  Json out{{"surface_type", surface_type_name(r.type)},
           {"fibers", fibers},
           {"euler", r.euler},
           {"ord_delta_sum", ord_delta_degree_sum(r.fibers)}};
  if (r.nonminimal_place) {
    out["nonminimal_place"] = r.nonminimal_place->str();
    Json mins = Json::array();
    for (const auto& f : r.minimal_fibers) mins.push_back(fiber_to_json(f));
    out["minimal_fibers"] = mins;
    out["minimal_euler"] = r.minimal_euler;
  }
  if (r.j) out["j"] = r.j->str();
  return out;
}

// Compact run-length rendering for plurigenera tables, e.g. "1-10: 1".
std::string runs_of(const std::vector<long long>& values, int from) {
  std::ostringstream os;
  int n = static_cast<int>(values.size());
  int i = from;
  while (i < n) {
    int j = i;
    while (j + 1 < n && values[j + 1] == values[i]) ++j;
    if (i == j)
      os << "  P_" << i << " = " << values[i] << "\n";
    else
      os << "  P_" << i << "..P_" << j << " = " << values[i] << "\n";
    i = j + 1;
  }
  return os.str();
}

void render_human(std::ostream& os, const Json& j, int indent);

void render_scalar(std::ostream& os, const Json& j) {
  if (j.is_string())
    os << j.get<std::string>();
  else
    os << j.dump();
}

bool is_scalar_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

void render_human(std::ostream& os, const Json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !is_scalar_array(it.value()))) {
        os << pad << it.key() << ":\n";
        render_human(os, it.value(), indent + 2);
      } else if (it.value().is_array()) {
        os << pad << it.key() << ": ";
        render_human(os, it.value(), 0);
        os << "\n";
      } else {
        os << pad << it.key() << ": ";
        render_scalar(os, it.value());
        os << "\n";
      }
    }
  } else if (j.is_array()) {
    if (is_scalar_array(j)) {
      os << "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << ",";
        render_scalar(os, e);
        first = false;
      }
      os << "]";
    } else {
      int idx = 0;
      for (const auto& e : j) {
        os << pad << "- #" << idx++ << "\n";
        render_human(os, e, indent + 2);
      }
    }
  } else {
    os << pad;
    render_scalar(os, j);
    os << "\n";
  }
}

struct Outcome {
  Json results = Json::object();
  std::string summary;        // leading line of the human report
  std::string human_details;  // optional preformatted block; otherwise results tree
  bool render_tree = true;
};

BrieskornParams params_from_assignments(const std::string& s) {
  Json obj = Json::object();
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ValidationError({"--set expects key=value assignments, got \"" + item + "\""});
    obj[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return brieskorn_from_json(obj);
}

Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

BrieskornParams random_params(std::mt19937_64& rng) {
  BrieskornParams t;
  for (Rational* slot : {&t.t4, &t.t10, &t.t12, &t.t16, &t.t18, &t.t22, &t.t24, &t.t28, &t.t30,
                         &t.t36, &t.t42})
    *slot = random_small_rational(rng);
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants of minimal-volume genus-one stable surfaces"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit the raw JSON report");

  std::string command;
  std::function<Outcome()> action;

  // ---- delta ------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("delta", "Riemann-Roch correction term at a quotient singularity");
    sub->fallthrough();
    auto chain_opt = std::make_shared<std::string>();
    auto incidence_opt = std::make_shared<std::string>();
    auto canonical = std::make_shared<bool>(false);
    auto n = std::make_shared<long>(1);
    sub->add_option("--chain", *chain_opt, "chain self-intersections b1,b2,...")->required();
    sub->add_flag("--canonical", *canonical, "correction for multiples of K");
    sub->add_option("--incidence", *incidence_opt, "strict-transform multiplicities m1,m2,...");
    sub->add_option("--n", *n, "multiple of the divisor (default 1)");
    sub->callback([=, &command, &action] {
      command = "delta";
      action = [=]() {
        HJChain chain(parse_longs(*chain_opt));
        Outcome o;
        o.results["chain"] = chain.selfints();
        o.results["n"] = *n;
        Rational d;
        if (*canonical) {
          if (!incidence_opt->empty())
            throw ValidationError({"--canonical and --incidence are mutually exclusive"});
          d = delta_canonical(chain, *n);
          o.results["mode"] = "canonical";
          o.results["local_index"] = canonical_index(chain);
        } else {
          if (incidence_opt->empty())
            throw ValidationError({"need --canonical or --incidence m1,m2,..."});
          SingularityIncidence inc(chain, parse_longs(*incidence_opt));
          d = delta(inc, *n);
          o.results["mode"] = "incidence";
          o.results["incidence"] = inc.strict_mult;
          o.results["local_index"] = local_index(inc);
        }
        o.results["delta"] = rational_to_json(d);
        o.summary = d.str();
        return o;
      };
    });
  }

  // ---- hj ---------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("hj", "Hirzebruch-Jung continued fractions");
    sub->fallthrough();
    auto n = std::make_shared<long>(0);
    auto q = std::make_shared<long>(0);
    auto chain_opt = std::make_shared<std::string>();
    sub->add_option("--n", *n, "order of the cyclic quotient");
    sub->add_option("--q", *q, "weight of the cyclic quotient");
    sub->add_option("--chain", *chain_opt, "evaluate a chain b1,b2,... instead");
    sub->callback([=, &command, &action] {
      command = "hj";
      action = [=]() {
        Outcome o;
        if (!chain_opt->empty()) {
          HJChain chain(parse_longs(*chain_opt));
          CyclicQuotient type = hj_evaluate(chain);
          o.results["chain"] = chain.selfints();
          o.results["n"] = type.n;
          o.results["q"] = type.q;
          o.summary = "1/" + std::to_string(type.n) + "(1," + std::to_string(type.q) + ")";
          return o;
        }
        if (*n == 0) throw ValidationError({"need --n and --q, or --chain"});
        HJChain chain = hj_expand(*n, *q);
        o.results["chain"] = chain.selfints();
        o.results["n"] = *n;
        o.results["q"] = *q;
        std::ostringstream s;
        s << "[";
        for (int i = 0; i < chain.length(); ++i)
          s << (i ? "," : "") << chain.selfints()[i];
        s << "]";
        o.summary = s.str();
        return o;
      };
    });
  }

  // ---- volume -----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("volume", "minimal volume v(c) at boundary coefficient c");
    sub->fallthrough();
    auto c = std::make_shared<std::string>();
    sub->add_option("--c", *c, "coefficient in (0, 1], e.g. 7/13")->required();
    sub->callback([=, &command, &action] {
      command = "volume";
      action = [=]() {
        Rational v = min_volume(Rational::parse(*c));
        Outcome o;
        o.results["c"] = rational_to_json(Rational::parse(*c));
        o.results["v"] = rational_to_json(v);
        o.summary = v.str();
        return o;
      };
    });
  }

  // ---- plurigenera --------------------------------------------------------
  {
    auto* sub = app.add_subcommand("plurigenera", "plurigenera stream of a surface dataset");
    sub->fallthrough();
    auto preset = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    auto max_n = std::make_shared<int>(-1);
    sub->add_option("--preset", *preset, "theorem-4.3 or theorem-4.4");
    sub->add_option("--input", *input, "SurfaceRRData JSON file");
    sub->add_option("--max", *max_n, "largest multiple (default T237_TRUNCATION or 150)");
    sub->callback([=, &command, &action] {
      command = "plurigenera";
      action = [=]() {
        if (preset->empty() == input->empty())
          throw ValidationError({"need exactly one of --preset or --input"});
        SurfaceRRData data = load_rr_data(preset->empty() ? *input : *preset);
        int top = *max_n >= 0 ? *max_n : default_truncation();
        PlurigeneraTable table = plurigenera(data, top);
        Outcome o;
        o.results["data"] = rr_data_to_json(data);
        o.results["max"] = top;
        o.results["P"] = table.values;
        o.summary = "P_0..P_" + std::to_string(top);
        o.human_details = runs_of(table.values, 0);
        o.render_tree = false;
        return o;
      };
    });
  }

  // ---- hilbert ------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("hilbert", "Hilbert series of a weighted hypersurface ring");
    sub->fallthrough();
    auto weights = std::make_shared<std::string>();
    auto degree = std::make_shared<int>(0);
    auto numerator = std::make_shared<bool>(false);
    auto preset = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    auto max_n = std::make_shared<int>(-1);
    sub->add_option("--weights", *weights, "generator weights w1,w2,...")->required();
    sub->add_option("--degree", *degree, "relation degree d for (1-t^d)/prod(1-t^w)");
    sub->add_flag("--numerator", *numerator,
                  "multiply a plurigenera stream by prod(1-t^w) instead");
    sub->add_option("--preset", *preset, "dataset for --numerator");
    sub->add_option("--input", *input, "SurfaceRRData JSON file for --numerator");
    sub->add_option("--max", *max_n, "truncation order (default T237_TRUNCATION or 150)");
    sub->callback([=, &command, &action] {
      command = "hilbert";
      action = [=]() {
        int top = *max_n >= 0 ? *max_n : default_truncation();
        std::vector<int> ws = parse_ints(*weights);
        Outcome o;
        o.results["weights"] = ws;
        o.results["max"] = top;
        if (*numerator) {
          if (preset->empty() == input->empty())
            throw ValidationError({"--numerator needs exactly one of --preset or --input"});
          SurfaceRRData data = load_rr_data(preset->empty() ? *input : *preset);
          UniPoly num = hilbert_numerator(plurigenera(data, top), ws, top);
          Json terms = Json::array();
          for (int i = 0; i <= num.degree(); ++i)
            if (!num.coeff(i).is_zero())
              terms.push_back(Json::array({i, rational_to_json(num.coeff(i))}));
          o.results["numerator_terms"] = terms;
          o.summary = num.str("t");
          return o;
        }
        if (*degree < 1) throw ValidationError({"need --degree d >= 1 (or --numerator)"});
        PowerSeries series = hypersurface_hilbert(ws, *degree, top);
        o.results["degree"] = *degree;
        Json coeffs = Json::array();
        for (int i = 0; i <= top; ++i) coeffs.push_back(rational_to_json(series.coeff(i)));
        o.results["coefficients"] = coeffs;
        o.summary = "coefficients 0.." + std::to_string(top);
        return o;
      };
    });
  }

  // ---- pullback -----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("pullback", "divisor pullback under contraction");
    sub->fallthrough();
    auto config_name = std::make_shared<std::string>();
    auto contract = std::make_shared<std::string>();
    auto all_but = std::make_shared<std::string>();
    auto strict = std::make_shared<std::string>();
    auto canonical = std::make_shared<bool>(false);
    sub->add_option("--config", *config_name, "preset (t237, type-I-config) or JSON file")
        ->required();
    sub->add_option("--contract", *contract, "labels to contract, comma separated");
    sub->add_option("--all-but", *all_but, "contract every curve except these labels");
    sub->add_option("--strict", *strict,
                    "strict part name=coeff,... (the K representative with --canonical)");
    sub->add_flag("--canonical", *canonical, "pull back the canonical class by adjunction");
    sub->callback([=, &command, &action] {
      command = "pullback";
      action = [=]() {
        CurveConfig config = load_config(*config_name);
        std::vector<std::string> contracted;
        if (!contract->empty() && !all_but->empty())
          throw ValidationError({"--contract and --all-but are mutually exclusive"});
        if (!contract->empty()) {
          std::stringstream ss(*contract);
          std::string item;
          while (std::getline(ss, item, ',')) contracted.push_back(item);
        } else if (!all_but->empty()) {
          std::set<std::string> keep;
          std::stringstream ss(*all_but);
          std::string item;
          while (std::getline(ss, item, ',')) keep.insert(item);
          for (const auto& name : config.names())
            if (!keep.count(name)) contracted.push_back(name);
        } else {
          throw ValidationError({"need --contract or --all-but"});
        }
        QDivisor given = parse_divisor(*strict);
        QDivisor result = *canonical ? pullback_canonical(config, contracted, given)
                                     : pullback(config, contracted, given);
        Outcome o;
        o.results["contracted"] = contracted;
        o.results["divisor"] = divisor_to_json(result);
        Rational sq = self_intersection(config, result);
        o.results["self_intersection"] = rational_to_json(sq);
        o.summary = "self-intersection " + sq.str();
        return o;
      };
    });
  }

  // ---- lattice ------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("lattice", "Gram-matrix invariants and vector operations");
    sub->fallthrough();
    auto config_name = std::make_shared<std::string>();
    auto pair_args = std::make_shared<std::vector<std::string>>();
    auto reflect_vec = std::make_shared<std::string>();
    auto root_vec = std::make_shared<std::string>();
    auto chamber_vec = std::make_shared<std::string>();
    auto split_vec = std::make_shared<std::string>();
    sub->add_option("--config", *config_name, "preset (t237) or JSON file")->required();
    sub->add_option("--pair", *pair_args, "two vectors (h, s, f, or comma lists)")
        ->expected(2);
    sub->add_option("--reflect", *reflect_vec, "vector to reflect (requires --root)");
    sub->add_option("--root", *root_vec, "root of square -2");
    sub->add_option("--chamber", *chamber_vec, "test v.alpha_i >= 0 against all curves");
    sub->add_option("--split", *split_vec, "split a hyperbolic plane off at this isotropic vector");
    sub->callback([=, &command, &action] {
      command = "lattice";
      action = [=]() {
        CurveConfig config = load_config(*config_name);
        QMatrix gram = config.gram();
        int rank = config.rank();
        Outcome o;
        o.results["rank"] = rank;
        Rational det = gram.determinant();
        o.results["det"] = rational_to_json(det);
        auto [pos, neg, zero] = signature(gram);
        o.results["signature"] = Json::array({pos, neg, zero});
        o.summary = "det " + det.str() + ", signature (" + std::to_string(pos) + "," +
                    std::to_string(neg) + "," + std::to_string(zero) + ")";
        if (!pair_args->empty()) {
          LatticeVector v = parse_lattice_vector((*pair_args)[0], rank);
          LatticeVector w = parse_lattice_vector((*pair_args)[1], rank);
          o.results["pair"] = pairing(gram, v, w).get_str();
        }
        if (!reflect_vec->empty()) {
          if (root_vec->empty()) throw ValidationError({"--reflect requires --root"});
          LatticeVector v = parse_lattice_vector(*reflect_vec, rank);
          LatticeVector r = parse_lattice_vector(*root_vec, rank);
          Json arr = Json::array();
          for (const auto& x : weyl_reflect(gram, v, r)) arr.push_back(x.get_str());
          o.results["reflect"] = arr;
        }
        if (!chamber_vec->empty()) {
          LatticeVector v = parse_lattice_vector(*chamber_vec, rank);
          std::vector<LatticeVector> roots;
          for (int i = 0; i < rank; ++i) {
            LatticeVector alpha(rank, Integer(0));
            alpha[i] = 1;
            roots.push_back(alpha);
          }
          o.results["in_chamber"] = in_fundamental_chamber(gram, v, roots);
        }
        if (!split_vec->empty()) {
          LatticeVector e = parse_lattice_vector(*split_vec, rank);
          HyperbolicSplitting split = split_hyperbolic(gram, e);
          Json sj = Json::object();
          Json ep = Json::array();
          for (const auto& x : split.e_prime) ep.push_back(x.get_str());
          sj["e_prime"] = ep;
          sj["complement_rank"] = split.complement_gram.rows();
          sj["complement_det"] = rational_to_json(split.complement_gram.determinant());
          auto [cp, cn, cz] = signature(split.complement_gram);
          sj["complement_signature"] = Json::array({cp, cn, cz});
          Json rows = Json::array();
          for (int i = 0; i < split.complement_gram.rows(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < split.complement_gram.cols(); ++j)
              row.push_back(rational_to_json(split.complement_gram.at(i, j)));
            rows.push_back(row);
          }
          sj["complement_gram"] = rows;
          o.results["split"] = sj;
        }
        return o;
      };
    });
  }

  // ---- weierstrass ----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("weierstrass", "Kodaira fibers of y^2 = x^3 + Ax + B");
    sub->fallthrough();
    auto a_opt = std::make_shared<std::string>();
    auto b_opt = std::make_shared<std::string>();
    auto budget = std::make_shared<int>(2);
    sub->add_option("--a", *a_opt, "chart of A: coefficients c0,c1,... (index = degree)");
    sub->add_option("--b", *b_opt, "chart of B: coefficients c0,c1,...");
    sub->add_option("--budget", *budget, "line-bundle degree N (default 2)");
    sub->callback([=, &command, &action] {
      command = "weierstrass";
      action = [=]() {
        UniPoly a = a_opt->empty() ? UniPoly() : UniPoly(parse_rationals(*a_opt));
        UniPoly b = b_opt->empty() ? UniPoly() : UniPoly(parse_rationals(*b_opt));
        WeierstrassModel model(std::move(a), std::move(b), *budget);
        std::vector<FiberReport> reports = fiber_reports(model);
        Outcome o;
        o.results["budget"] = *budget;
        Json fibers = Json::array();
        bool minimal = true;
        for (const auto& f : reports) {
          fibers.push_back(fiber_to_json(f));
          minimal = minimal && f.type.is_minimal();
        }
        o.results["fibers"] = fibers;
        if (minimal) o.results["euler"] = euler_sum(reports);
        std::ostringstream s;
        for (size_t i = 0; i < reports.size(); ++i)
          s << (i ? " + " : "") << reports[i].type.name();
        o.summary = s.str();
        return o;
      };
    });
  }

  // ---- brieskorn ------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("brieskorn", "surface type of a family member");
    sub->fallthrough();
    auto params_file = std::make_shared<std::string>();
    auto assignments = std::make_shared<std::string>();
    auto special = std::make_shared<std::string>();
    auto ones = std::make_shared<bool>(false);
    auto sweep_file = std::make_shared<std::string>();
    auto random_count = std::make_shared<int>(0);
    auto seed = std::make_shared<unsigned long long>(0);
    sub->add_option("--params", *params_file, "BrieskornParams JSON file");
    sub->add_option("--set", *assignments, "inline parameters, e.g. t4=1,t42=1/2");
    sub->add_option("--special", *special, "special-locus point a,b");
    sub->add_flag("--ones", *ones, "all parameters equal to 1");
    sub->add_option("--sweep", *sweep_file, "JSON array of parameter objects");
    sub->add_option("--random", *random_count, "sweep over this many random parameter vectors");
    sub->add_option("--seed", *seed, "random sweep seed (default 0)");
    sub->callback([=, &command, &action] {
      command = "brieskorn";
      action = [=]() {
        std::vector<BrieskornParams> batch;
        int sources = (!params_file->empty()) + (!assignments->empty()) + (!special->empty()) +
                      (*ones ? 1 : 0) + (!sweep_file->empty()) + (*random_count > 0 ? 1 : 0);
        if (sources != 1)
          throw ValidationError(
              {"need exactly one of --params, --set, --special, --ones, --sweep, --random"});
        if (!params_file->empty()) {
          batch.push_back(load_brieskorn(*params_file));
        } else if (!assignments->empty()) {
          batch.push_back(params_from_assignments(*assignments));
        } else if (!special->empty()) {
          std::vector<Rational> ab = parse_rationals(*special);
          if (ab.size() != 2) throw ValidationError({"--special expects a,b"});
          batch.push_back(special_locus_params(ab[0], ab[1]));
        } else if (*ones) {
          Json obj = Json::object();
          for (const char* k : {"t4", "t10", "t12", "t16", "t18", "t22", "t24", "t28", "t30",
                                "t36", "t42"})
            obj[k] = 1;
          batch.push_back(brieskorn_from_json(obj));
        } else if (!sweep_file->empty()) {
          Json arr = parse_json_file(*sweep_file);
          if (!arr.is_array()) throw ValidationError({"--sweep expects a JSON array"});
          for (const auto& e : arr) batch.push_back(brieskorn_from_json(e));
        } else {
          std::mt19937_64 rng(*seed);
          for (int i = 0; i < *random_count; ++i) batch.push_back(random_params(rng));
        }

        Outcome o;
        if (batch.size() == 1) {
          SurfaceReport r = classify_surface(batch[0]);
          o.results = surface_to_json(r);
          o.results["params"] = brieskorn_to_json(batch[0]);
          o.summary = "Type " + surface_type_name(r.type);
          return o;
        }
        Json reports = Json::array();
        std::map<std::string, int> counts;
        for (const auto& t : batch) {
          SurfaceReport r = classify_surface(t);
          Json entry = surface_to_json(r);
          entry["params"] = brieskorn_to_json(t);
          reports.push_back(entry);
          counts[surface_type_name(r.type)] += 1;
        }
        o.results["count"] = batch.size();
        o.results["reports"] = reports;
        o.results["types"] = counts;
        std::ostringstream s;
        s << batch.size() << " surfaces:";
        for (const auto& [k, v] : counts) s << " " << v << " of Type " << k;
        o.summary = s.str();
        return o;
      };
    });
  }

  // ---- dispatch ---------------------------------------------------------
  std::vector<const char*> argv;
  argv.push_back("t237");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Json report{{"command", command}, {"status", "ok"}};
  int code = 0;
  try {
    Outcome o = action();
    report["results"] = o.results;
    if (json_mode) {
      out << report.dump(2) << "\n";
    } else {
      out << o.summary << "\n";
      if (!o.human_details.empty()) out << o.human_details;
      if (o.render_tree && !o.results.empty()) render_human(out, o.results, 2);
    }
    return 0;
  } catch (const ValidationError& e) {
    report["status"] = "error";
    report["message"] = e.what();
    code = 2;
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["message"] = e.what();
    code = 1;
    err << "error: " << e.what() << "\n";
  }
  if (json_mode)
    out << report.dump(2) << "\n";
  else
    out << "error: " << report["message"].get<std::string>() << "\n";
  return code;
}

}  // namespace t237::cli

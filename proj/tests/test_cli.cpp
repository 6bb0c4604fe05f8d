#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "t237/cli.hpp"
#include "t237/json_io.hpp"
#include "t237/presets.hpp"

using namespace t237;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string write_temp(const std::string& name, const std::string& contents) {
  std::string path = std::string("cli_test_") + name;
  std::ofstream f(path);
  f << contents;
  return path;
}

}  // namespace

TEST_CASE("delta subcommand") {
  RunResult r = run_cli({"delta", "--chain", "3,2,2,2,2,2", "--canonical", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "-6/13");

  r = run_cli({"delta", "--chain", "2,2", "--incidence", "1,0", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "-1/3");

  // --canonical and --incidence clash.
  r = run_cli({"delta", "--chain", "2", "--canonical", "--incidence", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("hj subcommand") {
  RunResult r = run_cli({"hj", "--n", "7", "--q", "6"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "[2,2,2,2,2,2]");

  r = run_cli({"hj", "--chain", "2,3,2,2"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "1/11(1,7)");

  // Non-coprime input is a domain error.
  r = run_cli({"hj", "--n", "6", "--q", "4"});
  CHECK(r.code == 1);
}

TEST_CASE("volume subcommand") {
  RunResult r = run_cli({"volume", "--c", "1"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "1/143");

  r = run_cli({"volume", "--c", "7/13"});
  CHECK(first_line(r.out) == "7/1014");

  r = run_cli({"volume", "--c", "2"});
  CHECK(r.code == 1);
}

TEST_CASE("json reports are deterministic and never floating point") {
  std::vector<std::string> args = {"--json", "plurigenera", "--preset", "theorem-4.4", "--max",
                                   "45"};
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  Json report = Json::parse(a.out);
  CHECK(report.at("status") == "ok");
  CHECK(report.at("command") == "plurigenera");
  CHECK(report.at("results").at("P").size() == 46);
  CHECK(report.at("results").at("P")[42] == 23);
  CHECK(report.at("results").at("data").at("vol") == "1/42");
  CHECK(a.out.find("0.") == std::string::npos);
}

TEST_CASE("pullback subcommand against the boundary preset") {
  RunResult r = run_cli({"--json", "pullback", "--config", "t237", "--all-but", "Theta6",
                         "--strict", "Theta6=1"});
  CHECK(r.code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("results").at("self_intersection") == "1/42");
  CHECK(report.at("results").at("divisor").at("Theta0") == "1/7");
  CHECK(report.at("results").at("divisor").at("Theta9") == "1/2");

  r = run_cli({"--json", "pullback", "--config", "type-I-config", "--all-but", "E", "--strict",
               "E=1", "--canonical"});
  CHECK(r.code == 0);
  report = Json::parse(r.out);
  CHECK(report.at("results").at("self_intersection") == "1/143");
  CHECK(report.at("results").at("divisor").at("Theta6") == "6/11");
}

TEST_CASE("lattice subcommand") {
  RunResult r = run_cli({"--json", "lattice", "--config", "t237", "--pair", "h", "h", "--split",
                         "f"});
  CHECK(r.code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("results").at("det") == -1);
  CHECK(report.at("results").at("signature") == Json::array({1, 9, 0}));
  CHECK(report.at("results").at("pair") == "42");
  CHECK(report.at("results").at("split").at("complement_rank") == 8);
  CHECK(report.at("results").at("split").at("complement_signature") == Json::array({0, 8, 0}));
}

TEST_CASE("weierstrass subcommand and domain errors") {
  RunResult r = run_cli({"--json", "weierstrass", "--a", "1,1,1,1,1", "--b",
                         "1,1,1,1,1,1,1,1", "--budget", "2"});
  CHECK(r.code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("results").at("euler") == 24);

  // Zero discriminant: domain error, report embedded, exit 1.
  r = run_cli({"--json", "weierstrass", "--a", "-3", "--b", "2", "--budget", "1"});
  CHECK(r.code == 1);
  report = Json::parse(r.out);
  CHECK(report.at("status") == "error");
  CHECK(!r.err.empty());
}

TEST_CASE("brieskorn subcommand") {
  RunResult r = run_cli({"brieskorn", "--special", "-3,2"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "Type III");

  r = run_cli({"--json", "brieskorn", "--special", "0,1"});
  Json report = Json::parse(r.out);
  CHECK(report.at("results").at("surface_type") == "II");
  CHECK(report.at("results").at("j") == "0");
  CHECK(report.at("results").at("minimal_euler") == 12);

  r = run_cli({"--json", "brieskorn", "--random", "3", "--seed", "7"});
  CHECK(r.code == 0);
  report = Json::parse(r.out);
  CHECK(report.at("results").at("count") == 3);
  CHECK(report.at("results").at("types").at("I") == 3);
}

TEST_CASE("input files round trip and malformed input is reported with position") {
  std::string good = write_temp("good.json", rr_data_to_json(theorem44_data()).dump());
  RunResult r = run_cli({"--json", "plurigenera", "--input", good, "--max", "6"});
  CHECK(r.code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("results").at("P")[6] == 2);
  std::remove(good.c_str());

  std::string bad = write_temp("bad.json", "{\n  \"chi_O\": 2,\n  oops\n}");
  r = run_cli({"plurigenera", "--input", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  std::remove(bad.c_str());

  // Validation failures list every offending field.
  std::string invalid = write_temp("invalid.json",
                                   R"({"vol": "x/y", "p_g": 1, "mode": "nope",
                                       "singularities": []})");
  r = run_cli({"plurigenera", "--input", invalid});
  CHECK(r.code == 2);
  CHECK(r.err.find("chi_O") != std::string::npos);
  CHECK(r.err.find("vol") != std::string::npos);
  CHECK(r.err.find("mode") != std::string::npos);
  std::remove(invalid.c_str());
}

TEST_CASE("domain objects serialize and reload to equal values") {
  SurfaceRRData d = theorem43_data();
  Json j = rr_data_to_json(d);
  SurfaceRRData back = rr_data_from_json(j);
  CHECK(rr_data_to_json(back) == j);

  CurveConfig c = type1_config();
  CHECK(config_to_json(config_from_json(config_to_json(c))) == config_to_json(c));

  BrieskornParams t = special_locus_params(Rational(2, 3), Rational(-5, 7));
  CHECK(brieskorn_to_json(brieskorn_from_json(brieskorn_to_json(t))) == brieskorn_to_json(t));

  QDivisor div;
  div.set("Theta6", Rational(7, 13));
  div.set("E", Rational(-2));
  CHECK(divisor_from_json(divisor_to_json(div)) == div);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"delta"}).code == 2);  // missing required --chain
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("truncation environment variable") {
  setenv("T237_TRUNCATION", "12", 1);
  RunResult r = run_cli({"--json", "plurigenera", "--preset", "theorem-4.4"});
  unsetenv("T237_TRUNCATION");
  CHECK(r.code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("results").at("P").size() == 13);
}

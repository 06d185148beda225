// Exercises the installed command-line surface: subcommands, exit codes,
// report replayability. The binary path arrives via the MTC_CLI env var.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("MTC_CLI");
  REQUIRE_MESSAGE(p != nullptr, "MTC_CLI must point at the mtc binary");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = fs::temp_directory_path() /
                       ("mtc_cli_out_" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      cli_path() + " " + args + " > " + out.string() + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  fs::remove(out);
  return r;
}

fs::path write_config(const json& j) {
  static int counter = 0;
  const fs::path p = fs::temp_directory_path() /
                     ("mtc_cli_cfg_" + std::to_string(counter++) + ".json");
  std::ofstream(p) << j.dump(2);
  return p;
}

json pure_config(int n, const std::string& pattern, double p, double phi) {
  return json{{"scenario",
               {{"kind", "pure"}, {"n", n}, {"pattern", pattern}, {"p", p}, {"phi", phi}}},
              {"shots_per_run", 20000},
              {"seed", 4242}};
}

}  // namespace

TEST_CASE("extract-phase produces a report and exit 0") {
  const auto cfg = write_config(pure_config(3, "000", 0.5, 0.0));
  const auto r = run_cli("extract-phase --config " + cfg.string());
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["command"] == "extract-phase");
  const double phi_hat = rep["estimate"]["phi_hat"].get<double>();
  CHECK((phi_hat < 0.1 || phi_hat > 6.18));
  fs::remove(cfg);
}

TEST_CASE("invalid weight exits 2 with a message citing the constraint") {
  auto cfg_json = pure_config(2, "00", 1.0, 0.0);
  const auto cfg = write_config(cfg_json);
  const auto r = run_cli("extract-phase --config " + cfg.string());
  CHECK(r.exit_code == 2);
  fs::remove(cfg);
}

TEST_CASE("dense method over the cap exits 4") {
  auto cfg_json = pure_config(30, std::string(30, '0'), 0.5, 0.0);
  cfg_json["method"] = "dense";
  const auto cfg = write_config(cfg_json);
  const auto r = run_cli("extract-phase --config " + cfg.string());
  CHECK(r.exit_code == 4);
  fs::remove(cfg);
}

TEST_CASE("missing config exits 2") {
  const auto r = run_cli("extract-phase --config /nonexistent/path.json");
  CHECK(r.exit_code == 2);
}

TEST_CASE("discriminate on a mixture") {
  json cfg_json{{"scenario",
                 {{"kind", "mixture"}, {"n", 3}, {"pattern", "000"}, {"p", 0.3}}},
                {"shots_per_run", 100000},
                {"seed", 60601}};
  const auto cfg = write_config(cfg_json);
  const auto r = run_cli("discriminate --config " + cfg.string());
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["decision"]["verdict"] == "ConsistentWithMixture");
  fs::remove(cfg);
}

TEST_CASE("discriminate pure phi = pi/2 via the shifted run") {
  const auto cfg = write_config(pure_config(3, "000", 0.5, 1.5707963267948966));
  const auto r = run_cli("discriminate --config " + cfg.string() + " --shots 100000");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["decision"]["verdict"] == "Entangled");
  CHECK(rep["decision"]["shifted_run_executed"] == true);
  fs::remove(cfg);
}

TEST_CASE("sweep emits analytic and sampled columns") {
  auto cfg_json = pure_config(2, "00", 0.5, 0.0);
  cfg_json["sweep"] = {{"parameter", "phi"},
                       {"values", {0.0, 1.5707963267948966, 3.141592653589793}}};
  const auto cfg = write_config(cfg_json);
  const auto r = run_cli("sweep --config " + cfg.string());
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "parameter,value,p_even_analytic,p_even_hat,ci_low,ci_high");
  std::vector<double> analytic;
  std::string row;
  while (std::getline(lines, row)) {
    std::istringstream rs(row);
    std::string field;
    for (int i = 0; i < 3 && std::getline(rs, field, ','); ++i) {
    }
    analytic.push_back(std::stod(field));
  }
  REQUIRE(analytic.size() == 3);
  CHECK(analytic[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(analytic[1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(analytic[2] == doctest::Approx(0.0).epsilon(1e-9));
  fs::remove(cfg);
}

TEST_CASE("empty sweep grid exits 2") {
  auto cfg_json = pure_config(2, "00", 0.5, 0.0);
  cfg_json["sweep"] = {{"parameter", "phi"}, {"values", json::array()}};
  const auto cfg = write_config(cfg_json);
  const auto r = run_cli("sweep --config " + cfg.string());
  CHECK(r.exit_code == 2);
  fs::remove(cfg);
}

TEST_CASE("replay re-analyzes an exported record") {
  const fs::path rec = fs::temp_directory_path() / "mtc_cli_replay.rec";
  std::ofstream(rec) << "mtc-record v1 n=2 seed=7 source=unit\n00\n11\n00\n01\n";
  const auto r = run_cli("replay " + rec.string() + " --pattern 00");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["parity"]["even_count"] == 3);
  CHECK(rep["pattern"]["stray_count"] == 1);
  fs::remove(rec);
}

TEST_CASE("reports replay byte-identically modulo timing") {
  const auto cfg = write_config(pure_config(4, "0000", 0.5, 2.4));
  auto strip = [](const std::string& text) {
    json j = json::parse(text);
    j.erase("timing");
    return j.dump();
  };
  const auto a = run_cli("extract-phase --config " + cfg.string());
  const auto b = run_cli("extract-phase --config " + cfg.string());
  REQUIRE(a.exit_code == 0);
  CHECK(strip(a.out) == strip(b.out));
  fs::remove(cfg);
}

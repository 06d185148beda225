// mtc: simulate two-component entangled states and their classical
// mixtures, extract the relative phase, and discriminate the two
// preparations from single-basis measurement statistics.
//
// Exit codes: 0 success (including NearDegenerate, flagged in the report),
// 1 selftest failure, 2 invalid config, 3 outcomes outside the
// two-component family, 4 capacity exceeded.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mtc/rng.hpp"

#include "mtc/measurement.hpp"
#include "mtc/oracle.hpp"
#include "mtc/protocol.hpp"
#include "mtc/report.hpp"
#include "mtc/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitOutsideFamily = 3;
constexpr int kExitCapacity = 4;

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::string format = "structured";
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> shots;
  std::optional<double> alpha;
  std::optional<int> workers;
  std::optional<std::string> method;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool config_required = true) {
  auto* c = cmd->add_option("--config", f.config_path, "Scenario config file (JSON)");
  if (config_required) c->required();
  cmd->add_option("--out", f.out_path, "Write the report here instead of stdout");
  cmd->add_option("--seed", f.seed, "Override the config seed");
  cmd->add_option("--shots", f.shots, "Override shots per run");
  cmd->add_option("--alpha", f.alpha, "Override the significance level");
  cmd->add_option("--format", f.format, "Report format: structured | csv")
      ->check(CLI::IsMember({"structured", "csv"}));
  cmd->add_option("--workers", f.workers, "Sampler worker threads");
  cmd->add_option("--method", f.method, "Sampling path: analytic | dense")
      ->check(CLI::IsMember({"analytic", "dense"}));
}

mtc::Scenario load_with_overrides(const CommonFlags& f) {
  mtc::Scenario s = mtc::load_scenario(f.config_path);
  if (f.seed) s.options.seed = *f.seed;
  if (f.shots) {
    if (*f.shots <= 0) throw mtc::config_error("--shots must be positive");
    s.options.shots_per_run = *f.shots;
  }
  if (f.alpha) {
    if (!(*f.alpha > 0.0 && *f.alpha < 1.0)) {
      throw mtc::config_error("--alpha must be in (0, 1)");
    }
    s.options.alpha = *f.alpha;
  }
  if (f.workers) {
    if (*f.workers < 1) throw mtc::config_error("--workers must be at least 1");
    s.options.workers = *f.workers;
  }
  if (f.method) {
    s.options.method = *f.method == "dense" ? mtc::SamplingMethod::kDense
                                            : mtc::SamplingMethod::kAnalytic;
    if (s.options.method == mtc::SamplingMethod::kDense && s.n > mtc::kDenseCap) {
      throw mtc::capacity_error("dense method limited to n <= " +
                                std::to_string(mtc::kDenseCap));
    }
  }
  return s;
}

void emit_report(const CommonFlags& f, mtc::json report, double elapsed_ms) {
  report["timing"]["elapsed_ms"] = elapsed_ms;
  const std::string text = report.dump(2) + "\n";
  if (f.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.out_path);
    if (!out) throw mtc::config_error("cannot open --out path '" + f.out_path + "'");
    out << text;
  }
  std::cerr << mtc::summarize(report);
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

int cmd_extract_phase(const CommonFlags& f) {
  Timer timer;
  const mtc::Scenario scenario = load_with_overrides(f);
  if (scenario.kind != mtc::StateKind::kPure) {
    throw mtc::config_error("extract-phase needs a pure scenario (kind=\"pure\")");
  }
  const auto result = mtc::run_phase_extraction(scenario.pure_state(), scenario.options);
  emit_report(f, mtc::phase_report(scenario, result), timer.elapsed_ms());
  return kExitOk;
}

int cmd_discriminate(const CommonFlags& f) {
  Timer timer;
  const mtc::Scenario scenario = load_with_overrides(f);
  const mtc::Decision d =
      mtc::run_discrimination(scenario.preparation(), scenario.options);
  emit_report(f, mtc::decision_report(scenario, d), timer.elapsed_ms());
  return d.verdict == mtc::Verdict::kOutsideFamily ? kExitOutsideFamily : kExitOk;
}

int cmd_sweep(const CommonFlags& f) {
  const mtc::Scenario scenario = load_with_overrides(f);

  std::ifstream in(f.config_path);
  mtc::json cfg;
  in >> cfg;
  if (!cfg.contains("sweep")) {
    throw mtc::config_error("sweep: config needs a \"sweep\" object");
  }
  const mtc::json& sw = cfg["sweep"];
  const std::string parameter = sw.value("parameter", "");
  if (parameter != "phi" && parameter != "p") {
    throw mtc::config_error("sweep: parameter must be \"phi\" or \"p\"");
  }
  std::vector<double> values;
  if (sw.contains("values")) {
    values = sw["values"].get<std::vector<double>>();
  } else if (sw.contains("start") && sw.contains("stop") && sw.contains("count")) {
    const double start = sw["start"].get<double>();
    const double stop = sw["stop"].get<double>();
    const int count = sw["count"].get<int>();
    for (int i = 0; i < count; ++i) {
      values.push_back(count == 1 ? start
                                  : start + (stop - start) * i / (count - 1));
    }
  }
  if (values.empty()) {
    throw mtc::config_error("sweep: empty grid");
  }

  std::ostringstream os;
  os << "parameter,value,p_even_analytic,p_even_hat,ci_low,ci_high\n";
  const mtc::BasisString pattern = mtc::BasisString::from_string(scenario.pattern);
  for (size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    const double p = parameter == "p" ? v : scenario.p;
    const double phi = parameter == "phi" ? v : scenario.phi.value_or(0.0);
    if (!(p > 0.0 && p < 1.0)) {
      throw mtc::config_error("sweep: grid leaves 0 < p < 1");
    }
    const mtc::TwoComponentState state(pattern, p, phi);
    const double analytic = mtc::analytic_p_even(p, state.phi);
    const auto dist = mtc::analytic_post_hadamard(state);
    const auto rec = mtc::sample_shots(
        dist, scenario.options.shots_per_run,
        mtc::rng::derive(scenario.options.seed, 1000 + i), scenario.options.workers);
    const auto stats = mtc::tally_parity(rec, scenario.options.alpha);
    os << parameter << "," << v << "," << analytic << "," << stats.p_even_hat << ","
       << stats.ci_low << "," << stats.ci_high << "\n";
  }
  if (f.out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(f.out_path);
    if (!out) throw mtc::config_error("cannot open --out path '" + f.out_path + "'");
    out << os.str();
  }
  return kExitOk;
}

int cmd_selftest(bool inject_fault) {
  mtc::selftest::Options opts;
  if (inject_fault) opts.inject_p_even_fault = 1e-6;
  const auto results = mtc::selftest::run(opts);
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail
              << ")\n";
  }
  return mtc::selftest::all_passed(results) ? kExitOk : kExitFail;
}

int cmd_replay(const std::string& record_path, const std::string& pattern_str,
               double alpha, const std::string& out_path) {
  std::ifstream in(record_path);
  if (!in) throw mtc::config_error("replay: cannot open '" + record_path + "'");
  const mtc::MeasurementRecord rec = mtc::read_record(in);
  mtc::json j;
  j["tool"] = "mtc";
  j["version"] = MTC_VERSION;
  j["command"] = "replay";
  j["record"]["n"] = rec.n;
  j["record"]["seed"] = rec.seed;
  j["record"]["source"] = rec.source;
  j["record"]["shots"] = rec.shots.size();
  const auto parity = mtc::tally_parity(rec, alpha);
  j["parity"]["even_count"] = parity.even_count;
  j["parity"]["p_even_hat"] = parity.p_even_hat;
  j["parity"]["ci"] = {parity.ci_low, parity.ci_high};
  j["parity"]["p_value_vs_half"] =
      mtc::stats::binomial_two_sided_p_half(parity.even_count, parity.total);
  if (!pattern_str.empty()) {
    const auto pattern = mtc::BasisString::from_string(pattern_str);
    if (pattern.n() != rec.n) {
      throw mtc::config_error("replay: --pattern length must match the record's n");
    }
    const auto ps = mtc::tally_pattern(rec, pattern, alpha);
    j["pattern"]["pattern_count"] = ps.pattern_count;
    j["pattern"]["complement_count"] = ps.complement_count;
    j["pattern"]["stray_count"] = ps.stray_count;
    if (ps.p_hat_defined) {
      j["pattern"]["p_hat"] = ps.p_hat;
      j["pattern"]["ci"] = {ps.ci_low, ps.ci_high};
    }
  }
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw mtc::config_error("cannot open --out path '" + out_path + "'");
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-component entangled state simulator and single-basis "
               "phase/entanglement protocol runner"};
  app.require_subcommand(1);

  CommonFlags extract_flags;
  auto* extract = app.add_subcommand(
      "extract-phase", "Estimate the relative phase from three measurement runs");
  add_common(extract, extract_flags);

  CommonFlags disc_flags;
  auto* disc = app.add_subcommand(
      "discriminate", "Decide entangled vs classical mixture from parity tests");
  add_common(disc, disc_flags);

  CommonFlags sweep_flags;
  auto* sweep = app.add_subcommand(
      "sweep", "Tabulate analytic and sampled p_even over a phi or p grid");
  add_common(sweep, sweep_flags);

  bool inject_fault = false;
  auto* selftest = app.add_subcommand(
      "selftest", "Run the oracle cross-check and golden statistical suite");
  selftest->add_flag("--inject-fault", inject_fault,
                     "Perturb the analytic parity formula to verify the comparator");

  std::string replay_path, replay_pattern, replay_out;
  double replay_alpha = 0.01;
  auto* replay = app.add_subcommand(
      "replay", "Re-analyze an exported measurement record file");
  replay->add_option("record", replay_path, "Record file")->required();
  replay->add_option("--pattern", replay_pattern, "Reference pattern for tallying p");
  replay->add_option("--alpha", replay_alpha, "Significance level");
  replay->add_option("--out", replay_out, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (extract->parsed()) return cmd_extract_phase(extract_flags);
    if (disc->parsed()) return cmd_discriminate(disc_flags);
    if (sweep->parsed()) return cmd_sweep(sweep_flags);
    if (selftest->parsed()) return cmd_selftest(inject_fault);
    if (replay->parsed())
      return cmd_replay(replay_path, replay_pattern, replay_alpha, replay_out);
  } catch (const mtc::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const mtc::outside_family_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOutsideFamily;
  } catch (const mtc::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitConfig;
}

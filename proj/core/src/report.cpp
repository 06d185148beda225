#include "mtc/report.hpp"

#include <fstream>
#include <sstream>

namespace mtc {

namespace {

template <typename T>
T require(const json& j, const std::string& key) {
  if (!j.contains(key)) {
    throw config_error("config: missing required field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw config_error("config: field '" + key + "' has the wrong type");
  }
}

template <typename T>
T optional_or(const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw config_error("config: field '" + key + "' has the wrong type");
  }
}

}  // namespace

Scenario Scenario::from_json(const json& j) {
  Scenario s;
  const json& sc = j.contains("scenario") ? j.at("scenario") : j;
  const auto kind = require<std::string>(sc, "kind");
  if (kind == "pure") {
    s.kind = StateKind::kPure;
  } else if (kind == "mixture") {
    s.kind = StateKind::kMixture;
  } else {
    throw config_error("config: kind must be \"pure\" or \"mixture\"");
  }
  s.n = require<int>(sc, "n");
  if (s.n < 1 || s.n > 64) {
    throw config_error("config: n must be in [1, 64]");
  }
  s.pattern = require<std::string>(sc, "pattern");
  if (static_cast<int>(s.pattern.size()) != s.n) {
    throw config_error("config: pattern length must equal n");
  }
  try {
    (void)BasisString::from_string(s.pattern);
  } catch (const std::exception& e) {
    throw config_error(std::string("config: bad pattern: ") + e.what());
  }
  s.p = require<double>(sc, "p");
  if (!(s.p > 0.0 && s.p < 1.0)) {
    throw config_error("config: p must satisfy 0 < p < 1");
  }
  if (sc.contains("phi")) {
    s.phi = require<double>(sc, "phi");
  }
  if (s.kind == StateKind::kPure && !s.phi.has_value()) {
    throw config_error("config: pure scenarios need phi");
  }

  ProtocolOptions& o = s.options;
  o.shots_per_run = optional_or<std::int64_t>(j, "shots_per_run", o.shots_per_run);
  if (o.shots_per_run <= 0) throw config_error("config: shots_per_run must be positive");
  o.seed = optional_or<std::uint64_t>(j, "seed", o.seed);
  o.alpha = optional_or<double>(j, "alpha", o.alpha);
  if (!(o.alpha > 0.0 && o.alpha < 1.0)) {
    throw config_error("config: alpha must be in (0, 1)");
  }
  o.degeneracy_threshold =
      optional_or<double>(j, "degeneracy_threshold", o.degeneracy_threshold);
  o.bootstrap_replicates =
      optional_or<int>(j, "bootstrap_replicates", o.bootstrap_replicates);
  if (o.bootstrap_replicates < 2) {
    throw config_error("config: bootstrap_replicates must be at least 2");
  }
  o.max_stray_fraction =
      optional_or<double>(j, "max_stray_fraction", o.max_stray_fraction);
  o.workers = optional_or<int>(j, "workers", o.workers);
  if (o.workers < 1) throw config_error("config: workers must be at least 1");
  const auto method = optional_or<std::string>(j, "method", "analytic");
  if (method == "analytic") {
    o.method = SamplingMethod::kAnalytic;
  } else if (method == "dense") {
    o.method = SamplingMethod::kDense;
  } else {
    throw config_error("config: method must be \"analytic\" or \"dense\"");
  }
  if (o.method == SamplingMethod::kDense && s.n > kDenseCap) {
    throw capacity_error("config: dense method limited to n <= " +
                         std::to_string(kDenseCap));
  }
  return s;
}

json Scenario::to_json() const {
  json sc;
  sc["kind"] = kind == StateKind::kPure ? "pure" : "mixture";
  sc["n"] = n;
  sc["pattern"] = pattern;
  sc["p"] = p;
  if (phi.has_value()) sc["phi"] = *phi;
  json j;
  j["scenario"] = sc;
  j["shots_per_run"] = options.shots_per_run;
  j["seed"] = options.seed;
  j["alpha"] = options.alpha;
  j["degeneracy_threshold"] = options.degeneracy_threshold;
  j["bootstrap_replicates"] = options.bootstrap_replicates;
  j["max_stray_fraction"] = options.max_stray_fraction;
  // workers deliberately omitted: it cannot affect any sampled value
  j["method"] = options.method == SamplingMethod::kAnalytic ? "analytic" : "dense";
  return j;
}

Preparation Scenario::preparation() const {
  const BasisString pat = BasisString::from_string(pattern);
  if (kind == StateKind::kPure) {
    return TwoComponentState(pat, p, phi.value());
  }
  return ClassicalTwoMixture(pat, p);
}

TwoComponentState Scenario::pure_state() const {
  if (kind != StateKind::kPure) {
    throw config_error("scenario: a pure state is required here");
  }
  return TwoComponentState(BasisString::from_string(pattern), p, phi.value());
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("config: cannot open '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw config_error("config: parse failure in '" + path + "': " + e.what());
  }
  return Scenario::from_json(j);
}

json report_header(const Scenario& scenario) {
  json j;
  j["tool"] = "mtc";
  j["version"] = MTC_VERSION;
  j["config"] = scenario.to_json();
  return j;
}

json run_counts_json(const RunCounts& c, bool z_basis) {
  json j;
  j["seed"] = c.seed;
  j["total"] = c.total;
  if (z_basis) {
    j["pattern_count"] = c.pattern_count;
    j["complement_count"] = c.complement_count;
    j["stray_count"] = c.stray_count;
  } else {
    j["even_count"] = c.even_count;
  }
  return j;
}

json phase_report(const Scenario& scenario, const PhaseExtractionResult& r) {
  json j = report_header(scenario);
  j["command"] = "extract-phase";
  j["runs"]["z_basis"] = run_counts_json(r.z_run, true);
  j["runs"]["hadamard"] = run_counts_json(r.hadamard_run, false);
  j["runs"]["shifted_hadamard"] = run_counts_json(r.shifted_run, false);
  json est;
  est["phi_hat"] = r.estimate.phi_hat;
  est["p_hat"] = r.estimate.p_hat;
  est["ci_low"] = r.estimate.ci_low;
  est["ci_high"] = r.estimate.ci_high;
  est["quality"] = to_string(r.estimate.quality);
  j["estimate"] = est;
  json st;
  st["p_even_hat"] = r.parity_stats.p_even_hat;
  st["p_even_ci"] = {r.parity_stats.ci_low, r.parity_stats.ci_high};
  st["p_even_shift_hat"] = r.shifted_parity_stats.p_even_hat;
  st["p_even_shift_ci"] = {r.shifted_parity_stats.ci_low,
                           r.shifted_parity_stats.ci_high};
  st["p_hat_ci"] = {r.pattern_stats.ci_low, r.pattern_stats.ci_high};
  j["statistics"] = st;
  return j;
}

json decision_report(const Scenario& scenario, const Decision& d) {
  json j = report_header(scenario);
  j["command"] = "discriminate";
  j["runs"]["z_basis"] = run_counts_json(d.z_run, true);
  if (d.hadamard_run.total > 0) {
    j["runs"]["hadamard"] = run_counts_json(d.hadamard_run, false);
  }
  if (d.shifted_run_executed) {
    j["runs"]["shifted_hadamard"] = run_counts_json(d.shifted_run, false);
  }
  json dd;
  dd["verdict"] = to_string(d.verdict);
  dd["p_hat"] = d.p_hat;
  dd["p_even_hat"] = d.p_even_hat;
  dd["p_value"] = d.p_value;
  dd["shifted_run_executed"] = d.shifted_run_executed;
  if (d.shifted_run_executed) {
    dd["p_even_shift_hat"] = d.p_even_shift_hat;
    dd["p_value_shifted"] = d.p_value_shifted;
  }
  dd["alpha"] = d.alpha;
  j["decision"] = dd;
  return j;
}

std::string summarize(const json& report) {
  std::ostringstream os;
  const std::string cmd = report.value("command", "?");
  os << "mtc " << cmd << " report (v" << report.value("version", "?") << ")\n";
  if (report.contains("config")) {
    const json& sc = report["config"]["scenario"];
    os << "  scenario: kind=" << sc.value("kind", "?") << " n=" << sc.value("n", 0)
       << " pattern=" << sc.value("pattern", "?") << " p=" << sc.value("p", 0.0);
    if (sc.contains("phi")) os << " phi=" << sc["phi"].get<double>();
    os << "\n  shots/run=" << report["config"].value("shots_per_run", std::int64_t{0})
       << " seed=" << report["config"].value("seed", std::uint64_t{0}) << "\n";
  }
  if (report.contains("estimate")) {
    const json& e = report["estimate"];
    os << "  phi_hat=" << e["phi_hat"].get<double>() << " rad, 1-alpha arc=["
       << e["ci_low"].get<double>() << ", " << e["ci_high"].get<double>()
       << "], p_hat=" << e["p_hat"].get<double>()
       << ", quality=" << e.value("quality", "?") << "\n";
  }
  if (report.contains("decision")) {
    const json& d = report["decision"];
    os << "  verdict=" << d.value("verdict", "?")
       << " p_even_hat=" << d.value("p_even_hat", 0.0)
       << " p_value=" << d.value("p_value", 1.0);
    if (d.value("shifted_run_executed", false)) {
      os << " p_even_shift_hat=" << d.value("p_even_shift_hat", 0.0)
         << " p_value_shifted=" << d.value("p_value_shifted", 1.0);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace mtc

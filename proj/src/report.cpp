#include "tempcert/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "tempcert/certification.hpp"
#include "tempcert/inequality.hpp"
#include "tempcert/io.hpp"
#include "tempcert/randomness.hpp"
#include "tempcert/sos.hpp"

namespace tempcert {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

Quartet acquire_quartet(const RunConfig& config, const ToleranceConfig& tol) {
  if (config.observables_path.empty()) {
    return canonical_quartet(config.d, tol);
  }
  Quartet q = load_quartet(config.observables_path, tol);
  if (q.d > 16) {
    throw validation_error("observable file has d = " + std::to_string(q.d) +
                           ", beyond the supported range 2..16");
  }
  return q;
}

std::string csv_pair_name(int first, int second) {
  return std::to_string(first) + "-" + std::to_string(second);
}

ordered_json residuals_json(const AlgebraicResiduals& r) {
  ordered_json j;
  j["ab_identity"] = r.ab_identity;
  j["b_unitarity"] = r.b_unitarity;
  j["commutation"] = r.commutation;
  j["b_power_consistency"] = r.b_power_consistency;
  return j;
}

void finish(ReportEnvelope& env, bool pass) {
  env.verdict = pass ? "pass" : "fail";
  env.exit_code = pass ? 0 : 1;
  env.timestamp = utc_timestamp();
}

std::filesystem::path ensure_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw validation_error("cannot create output directory " + dir);
  return p;
}

Quartet random_root_quartet(int d, Rng& rng, const ToleranceConfig& tol) {
  const RootOfUnityObservable z = build_z(d);
  Quartet q;
  q.d = d;
  q.D = d;
  for (int i = 0; i < 4; ++i) {
    const Matrix u = haar_unitary(d, rng);
    q.obs[static_cast<std::size_t>(i)] = RootOfUnityObservable::from_unitary(
        u * z.unitary * u.adjoint(), d, tol);
  }
  return q;
}

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

ordered_json criteria_json(const std::vector<CriterionResult>& results) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : results) {
    ordered_json j;
    j["criterion"] = c.index;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  static const std::set<std::string> known = {
      "tau",        "classical-bound", "sos",    "certify",
      "robustness", "randomness",      "lemma2", "suite"};
  if (known.find(subcommand) == known.end()) {
    throw validation_error("unknown subcommand: " + subcommand);
  }
  if (d < 2 || d > 16) {
    throw validation_error("d = " + std::to_string(d) +
                           " outside the supported range 2..16");
  }
  if (dmin < 2 || dmax < dmin || dmax > 16) {
    throw validation_error("need 2 <= dmin <= dmax <= 16");
  }
  if (!(delta >= 0.0 && delta <= 0.5)) {
    throw validation_error("delta must lie in [0, 0.5]");
  }
  if (trials < 1 || trials > 1000000) {
    throw validation_error("trials must lie in 1..1000000");
  }
  if (tol_override && (!(*tol_override > 0.0) || *tol_override >= 1.0)) {
    throw validation_error("tol must lie in (0, 1)");
  }
  if (format != "json" && format != "csv") {
    throw validation_error("format must be json or csv");
  }
  if (format == "csv" && subcommand != "randomness" &&
      subcommand != "robustness") {
    throw validation_error("csv output applies to randomness and robustness");
  }
  if (state_spec.empty()) {
    throw validation_error("state must be 'mixed' or a file path");
  }
}

ToleranceConfig RunConfig::tolerances() const {
  ToleranceConfig t;
  if (tol_override) t.value_tol = *tol_override;
  t.validate();
  return t;
}

nlohmann::ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["subcommand"] = subcommand;
  j["d"] = d;
  j["dmin"] = dmin;
  j["dmax"] = dmax;
  j["observables"] =
      observables_path.empty() ? ordered_json() : ordered_json(observables_path);
  j["state"] = state_spec;
  j["delta"] = delta;
  j["trials"] = trials;
  j["seed"] = seed;
  j["tol"] = tol_override ? ordered_json(*tol_override) : ordered_json();
  j["out"] = out_dir.empty() ? ordered_json() : ordered_json(out_dir);
  j["format"] = format;
  return j;
}

nlohmann::ordered_json ReportEnvelope::to_json(bool include_timestamp) const {
  ordered_json j;
  j["version"] = version;
  j["config"] = config.to_json();
  if (include_timestamp) j["timestamp"] = timestamp;
  j["payload"] = payload;
  j["verdict"] = verdict;
  j["exit_code"] = exit_code;
  return j;
}

std::string ReportEnvelope::serialize(bool include_timestamp) const {
  return to_json(include_timestamp).dump(2) + "\n";
}

ReportEnvelope run_tau(const RunConfig& config) {
  config.validate();
  const ToleranceConfig tol = config.tolerances();
  ReportEnvelope env;
  env.config = config;

  const Quartet q = acquire_quartet(config, tol);
  const PreparedState state = load_state(config.state_spec, q.D, tol);
  const TauTables tables = tables_from_quartet(q, state, tol);
  const double tau_stats = tau_from_stats(tables, tol);
  const InequalityReport rep = evaluate_inequality(tables, tol);
  const double tau_op =
      std::real((state.density * tau_operator(q)).trace());

  const bool mixed = state.is_maximally_mixed(tol);
  const bool paths_agree = std::abs(tau_stats - tau_op) <= tol.value_tol;

  ordered_json p;
  p["d"] = q.d;
  p["D"] = q.D;
  p["observables"] =
      config.observables_path.empty() ? "canonical" : config.observables_path;
  p["state"] = config.state_spec;
  p["tau"] = tau_stats;
  p["tau_imag"] = std::imag(rep.tau);
  p["tau_operator"] = tau_op;
  p["paths_compared"] = mixed;
  p["paths_agree"] = mixed ? ordered_json(paths_agree) : ordered_json();
  p["classical_bound"] = rep.classical_bound;
  p["quantum_max"] = rep.quantum_max;
  p["violated"] = rep.violated;
  p["gap"] = rep.gap;
  env.payload = p;

  finish(env, !mixed || paths_agree);
  return env;
}

ReportEnvelope run_classical_bound(const RunConfig& config) {
  config.validate();
  ReportEnvelope env;
  env.config = config;

  const double closed = classical_bound_closed(config.d);
  const double chained = classical_bound_bruteforce(config.d);
  const AssignmentEnumeration enumeration =
      classical_bound_assignments(config.d);
  const ClassicalDecomposition dec = classical_decomposition(config.d);
  const bool agree = std::abs(chained - closed) <= 1e-12 &&
                     std::abs(enumeration.bound - closed) <= 1e-12;

  ordered_json p;
  p["d"] = config.d;
  p["closed_form"] = closed;
  p["chained_maximization"] = chained;
  p["assignment_enumeration"] = enumeration.bound;
  p["argmax"] = enumeration.argmax;
  p["alphas"] = dec.alphas;
  p["s_value"] = dec.s_value;
  p["all_agree"] = agree;
  p["quantum_max"] = 4.0 * (config.d - 1);
  p["gap"] = 4.0 * (config.d - 1) - closed;
  env.payload = p;

  finish(env, agree);
  return env;
}

ReportEnvelope run_sos(const RunConfig& config) {
  config.validate();
  const ToleranceConfig tol = config.tolerances();
  ReportEnvelope env;
  env.config = config;

  const Quartet q = acquire_quartet(config, tol);
  const SosReport rep = sos_residuals(q, tol);
  const double threshold = config.tol_override.value_or(1e-9);
  double max_term = 0.0;
  for (double n : rep.per_term_norms) max_term = std::max(max_term, n);

  ordered_json p;
  p["d"] = q.d;
  p["D"] = q.D;
  p["observables"] =
      config.observables_path.empty() ? "canonical" : config.observables_path;
  p["primary_residual"] = rep.primary_residual;
  p["alt_residual"] = rep.alt_residual;
  p["max_per_term_norm"] = max_term;
  p["per_term_norms"] = rep.per_term_norms;
  p["threshold"] = threshold;
  env.payload = p;

  finish(env, rep.primary_residual < threshold);
  return env;
}

ReportEnvelope run_certify(const RunConfig& config) {
  config.validate();
  const ToleranceConfig tol = config.tolerances();
  ReportEnvelope env;
  env.config = config;

  const Quartet q = acquire_quartet(config, tol);
  const CertificationReport rep = certify(q, tol);

  ordered_json p;
  p["d"] = rep.d;
  p["D"] = rep.D;
  p["observables"] =
      config.observables_path.empty() ? "canonical" : config.observables_path;
  p["repeatable"] = rep.repeatable;
  p["tau"] = rep.tau;
  p["epsilon"] = rep.epsilon;
  p["residuals"] = residuals_json(rep.residuals);
  p["fingerprint_distance"] = rep.fingerprint_distance;
  p["spectral_multiplicities"] = rep.spectral_multiplicities;
  p["certification"] = to_string(rep.verdict);
  env.payload = p;

  finish(env, rep.verdict == Verdict::certified);
  return env;
}

namespace {

std::vector<RobustnessSample> robustness_trials(
    const std::vector<int>& dims, const std::vector<double>& deltas,
    int per_combo, std::uint64_t seed, const ToleranceConfig& tol) {
  std::vector<RobustnessSample> samples;
  std::uint64_t trial_index = 0;
  for (int d : dims) {
    const Quartet ideal = canonical_quartet(d, tol);
    const PreparedState rho = PreparedState::maximally_mixed(d);
    for (double delta : deltas) {
      for (int t = 0; t < per_combo; ++t, ++trial_index) {
        const Quartet actual =
            perturb_quartet(d, delta, seed + trial_index, tol);
        RobustnessSample s;
        s.d = d;
        s.delta = delta;
        s.trial = t;
        s.report = robustness_check(ideal, actual, rho, tol);
        samples.push_back(std::move(s));
      }
    }
  }
  return samples;
}

ordered_json robustness_summary(const std::vector<RobustnessSample>& samples) {
  int hold = 0, sharp = 0;
  double max_row_ratio = 0.0, max_pair_ratio = 0.0, max_eps = 0.0;
  for (const auto& s : samples) {
    const RobustnessReport& r = s.report;
    hold += r.all_bounds_hold ? 1 : 0;
    sharp += r.sharp_bounds_hold ? 1 : 0;
    max_eps = std::max(max_eps, r.epsilon);
    if (r.bound_tight > 0.0) {
      max_row_ratio = std::max(
          max_row_ratio,
          std::max(r.defect_a1, r.defect_a2) / r.bound_tight);
    }
    if (r.bound_loose > 0.0) {
      max_pair_ratio = std::max(
          max_pair_ratio,
          std::max(r.defect_pair34, r.defect_pair12) / r.bound_loose);
    }
  }
  const double n = samples.empty() ? 1.0 : static_cast<double>(samples.size());
  ordered_json p;
  p["trials"] = samples.size();
  p["bounds_hold_fraction"] = hold / n;
  p["sharp_hold_fraction"] = sharp / n;
  p["max_row_defect_ratio"] = max_row_ratio;
  p["max_pair_defect_ratio"] = max_pair_ratio;
  p["max_epsilon"] = max_eps;
  p["all_hold"] = hold == static_cast<int>(samples.size());
  p["sharp_all_hold"] = sharp == static_cast<int>(samples.size());
  return p;
}

}  // namespace

ReportEnvelope run_robustness(const RunConfig& config) {
  config.validate();
  const ToleranceConfig tol = config.tolerances();
  ReportEnvelope env;
  env.config = config;

  const std::vector<RobustnessSample> samples = robustness_trials(
      {config.d}, {config.delta}, config.trials, config.seed, tol);
  ordered_json p = robustness_summary(samples);
  p["d"] = config.d;
  p["delta"] = config.delta;
  env.payload = p;
  env.csv = robustness_csv(samples);

  if (!config.out_dir.empty()) {
    const auto dir = ensure_out_dir(config.out_dir);
    write_text_file((dir / "robustness.csv").string(), env.csv);
    write_robustness_svg((dir / "robustness.svg").string(), samples);
  }

  finish(env, p["all_hold"].get<bool>() && p["sharp_all_hold"].get<bool>());
  return env;
}

ReportEnvelope run_randomness(const RunConfig& config) {
  config.validate();
  const ToleranceConfig tol = config.tolerances();
  ReportEnvelope env;
  env.config = config;

  const EntropyTable table = entropy_sweep(config.dmin, config.dmax, tol);

  double max_gap = 0.0;
  for (std::size_t i = 0; i < table.closed_rows.size(); ++i) {
    max_gap = std::max(max_gap,
                       std::abs(table.closed_rows[i].entropy_bits -
                                table.overlap_rows[i].entropy_bits));
  }
  bool increasing = true;
  double prev = -1.0;
  for (const auto& r : table.closed_rows) {
    if (r.first != 1 || r.second != 2) continue;
    if (r.entropy_bits <= prev) increasing = false;
    prev = r.entropy_bits;
  }

  auto rows_json = [](const std::vector<EntropyRow>& rows,
                      const std::string& method) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["d"] = r.d;
      j["pair"] = csv_pair_name(r.first, r.second);
      j["entropy_bits"] = r.entropy_bits;
      j["method"] = method;
      arr.push_back(j);
    }
    return arr;
  };

  ordered_json p;
  p["dmin"] = config.dmin;
  p["dmax"] = config.dmax;
  p["rows"] = rows_json(table.closed_rows, "closed_form");
  ordered_json overlap_rows = rows_json(table.overlap_rows, "overlap");
  for (auto& j : rows_json(table.extra_rows, "overlap")) {
    overlap_rows.push_back(j);
  }
  p["overlap_rows"] = overlap_rows;
  p["strictly_increasing"] = increasing;
  p["max_dual_path_gap"] = max_gap;
  env.payload = p;
  env.csv = entropy_csv(table);

  if (!config.out_dir.empty()) {
    const auto dir = ensure_out_dir(config.out_dir);
    write_text_file((dir / "entropy.csv").string(), env.csv);
    write_entropy_svg((dir / "entropy.svg").string(), table);
  }

  finish(env, increasing && max_gap <= tol.value_tol);
  return env;
}

ReportEnvelope run_nonuniqueness(const RunConfig& config) {
  config.validate();
  const ToleranceConfig tol = config.tolerances();
  ReportEnvelope env;
  env.config = config;

  Rng rng(config.seed);
  const int samples = std::min(config.trials, 1000);
  double max_planar_dev = 0.0;
  NonuniquenessReport last;
  for (int t = 0; t < samples; ++t) {
    const double theta = rng.uniform() * kPi / 2.0;
    const double phi = rng.uniform() * 2.0 * kPi;
    last = nonuniqueness_demo(theta, phi, tol);
    max_planar_dev = std::max(max_planar_dev, std::abs(last.tau_planar - 4.0));
  }
  const double skew_dev = std::abs(last.tau_skew - 4.0);

  ordered_json p;
  p["samples"] = samples;
  p["max_planar_deviation"] = max_planar_dev;
  p["tau_skew"] = last.tau_skew;
  p["skew_deviation"] = skew_dev;
  p["overlap_planar"] = last.overlap_planar;
  p["overlap_skew"] = last.overlap_skew;
  p["overlap_mismatch"] = last.overlap_mismatch;
  p["fingerprint_gap"] = last.fingerprint_gap;
  p["connecting_unitary_exists"] = last.connecting_unitary_exists;
  env.payload = p;

  finish(env, max_planar_dev <= tol.value_tol &&
                  skew_dev <= tol.paper_numeric_tol &&
                  last.overlap_mismatch > 0.2 &&
                  !last.connecting_unitary_exists);
  return env;
}

namespace {

CriterionResult suite_quantum_maximum(int dmax, const ToleranceConfig& tol) {
  CriterionResult c{1, "quantum_maximum", true, ""};
  double worst = 0.0;
  for (int d = 2; d <= std::min(8, dmax); ++d) {
    const Quartet q = canonical_quartet(d, tol);
    const PreparedState rho = PreparedState::maximally_mixed(d);
    const double stats = tau_from_stats(tables_from_quartet(q, rho, tol), tol);
    const double op = std::real((rho.density * tau_operator(q)).trace());
    const double target = 4.0 * (d - 1);
    worst = std::max({worst, std::abs(stats - target), std::abs(op - target)});
  }
  c.pass = worst < 1e-9;
  c.detail = "max deviation from 4(d-1): " + fmt(worst);
  return c;
}

CriterionResult suite_classical_bound(int dmax, const ToleranceConfig&) {
  CriterionResult c{2, "classical_bound_agreement", true, ""};
  double worst = 0.0;
  for (int d = 2; d <= std::min(12, dmax); ++d) {
    const double closed = classical_bound_closed(d);
    const double chained = classical_bound_bruteforce(d);
    const double enumerated = classical_bound_assignments(d).bound;
    worst = std::max({worst, std::abs(chained - closed),
                      std::abs(enumerated - closed)});
    if (d == 2) worst = std::max(worst, std::abs(closed - 2.0 * std::sqrt(2.0)));
    if (d == 3) {
      worst = std::max(worst, std::abs(closed - (1.0 + 3.0 * std::sqrt(3.0))));
    }
  }
  c.pass = worst <= 1e-12;
  c.detail = "max route disagreement: " + fmt(worst);
  return c;
}

CriterionResult suite_gap(int dmax, const ToleranceConfig&) {
  CriterionResult c{3, "quantum_classical_gap", true, ""};
  double min_gap = 1e300;
  for (int d = 2; d <= dmax; ++d) {
    min_gap = std::min(min_gap, 4.0 * (d - 1) - classical_bound_closed(d));
  }
  c.pass = min_gap > 0.0;
  c.detail = "min gap over d: " + fmt(min_gap);
  return c;
}

CriterionResult suite_sos(int dmax, std::uint64_t seed,
                          const ToleranceConfig& tol) {
  CriterionResult c{4, "sos_residuals", true, ""};
  double worst_primary = 0.0, worst_alt = 0.0, worst_random = 0.0;
  for (int d = 2; d <= std::min(6, dmax); ++d) {
    const SosReport rep = sos_residuals(canonical_quartet(d, tol), tol);
    worst_primary = std::max(worst_primary, rep.primary_residual);
    worst_alt = std::max(worst_alt, rep.alt_residual);
  }
  Rng rng(seed + 401);
  for (int d = 2; d <= std::min(3, dmax); ++d) {
    for (int t = 0; t < 100; ++t) {
      const Quartet q = random_root_quartet(d, rng, tol);
      worst_random = std::max(worst_random,
                              sos_residuals(q, tol).primary_residual);
    }
  }
  c.pass = worst_primary < 1e-9 && worst_alt < 1e-9 && worst_random < 1e-9;
  c.detail = "canonical primary " + fmt(worst_primary) + ", alternate " +
             fmt(worst_alt) + ", random-quartet primary " + fmt(worst_random);
  return c;
}

CriterionResult suite_projectivity(int dmax, std::uint64_t seed,
                                   const ToleranceConfig& tol) {
  CriterionResult c{5, "projectivity_criterion", true, ""};
  double worst_proj = 0.0;
  double min_smoothed = 1e300;
  bool all_agree = true;
  Rng rng(seed + 501);
  for (int d = 2; d <= std::min(4, dmax); ++d) {
    const Quartet q = canonical_quartet(d, tol);
    for (int i = 1; i <= 4; ++i) {
      const ProjectivityReport rep =
          projectivity_check(Povm::projective(q.a(i), tol), tol);
      worst_proj = std::max(worst_proj, rep.max_repeatability_residual);
      all_agree = all_agree && rep.criteria_agree && rep.repeatable;
    }
    const ProjectivityReport smoothed =
        projectivity_check(Povm::smoothed(q.a(1), 0.9, tol), tol);
    min_smoothed = std::min(smoothed.max_repeatability_residual, min_smoothed);
    all_agree = all_agree && smoothed.criteria_agree && !smoothed.repeatable;
    for (int t = 0; t < 200; ++t) {
      const Povm m = (t % 2 == 0) ? Povm::random(d, d, rng, tol)
                                  : Povm::random_projective(d, rng, tol);
      all_agree = all_agree && projectivity_check(m, tol).criteria_agree;
    }
  }
  c.pass = worst_proj < 1e-12 && min_smoothed > 0.01 && all_agree;
  c.detail = "canonical residual " + fmt(worst_proj) + ", smoothed residual " +
             fmt(min_smoothed) + ", criterion/idempotency agreement " +
             (all_agree ? "complete" : "BROKEN");
  return c;
}

CriterionResult suite_nonuniqueness(std::uint64_t seed,
                                    const ToleranceConfig& tol) {
  CriterionResult c{6, "nonuniqueness", true, ""};
  Rng rng(seed + 601);
  double max_planar_dev = 0.0;
  NonuniquenessReport rep;
  for (int t = 0; t < 10; ++t) {
    const double theta = rng.uniform() * kPi / 2.0;
    const double phi = rng.uniform() * 2.0 * kPi;
    rep = nonuniqueness_demo(theta, phi, tol);
    max_planar_dev = std::max(max_planar_dev, std::abs(rep.tau_planar - 4.0));
  }
  const double skew_dev = std::abs(rep.tau_skew - 4.0);
  c.pass = max_planar_dev <= 1e-9 && skew_dev <= tol.paper_numeric_tol &&
           rep.overlap_mismatch > 0.2;
  c.detail = "planar deviation " + fmt(max_planar_dev) + ", skew deviation " +
             fmt(skew_dev) + ", overlap mismatch " + fmt(rep.overlap_mismatch);
  return c;
}

CriterionResult suite_robustness(int dmax, int trials, std::uint64_t seed,
                                 const ToleranceConfig& tol,
                                 std::vector<RobustnessSample>& samples) {
  CriterionResult c{7, "robustness_bounds", true, ""};
  std::vector<int> dims;
  for (int d = 2; d <= std::min(4, dmax); ++d) dims.push_back(d);
  const std::vector<double> deltas = {1e-4, 1e-3, 1e-2};
  const int combos = static_cast<int>(dims.size() * deltas.size());
  const int per_combo = std::max(1, trials / combos);
  samples = robustness_trials(dims, deltas, per_combo, seed, tol);
  const ordered_json summary = robustness_summary(samples);
  c.pass = summary["all_hold"].get<bool>() &&
           summary["sharp_all_hold"].get<bool>();
  c.detail = std::to_string(samples.size()) + " trials, bound margin " +
             fmt(summary["max_pair_defect_ratio"].get<double>()) +
             " (pair), " + fmt(summary["max_row_defect_ratio"].get<double>()) +
             " (row, vs sqrt(eps))";
  return c;
}

CriterionResult suite_entropy(int dmax, const ToleranceConfig& tol,
                              EntropyTable& table) {
  CriterionResult c{8, "entropy_certification", true, ""};
  const int top = std::min(8, dmax);
  table = entropy_sweep(2, top, tol);
  double worst = 0.0;
  double prev = -1.0;
  bool increasing = true;
  for (const auto& r : table.closed_rows) {
    if (r.first != 1 || r.second != 2) continue;
    if (r.d == 2) worst = std::max(worst, std::abs(r.entropy_bits - 1.0));
    if (r.d == 3) {
      const double target = 2.0 * std::log2(3.0) - 16.0 / 9.0;
      worst = std::max(worst, std::abs(r.entropy_bits - target));
    }
    if (r.entropy_bits <= prev) increasing = false;
    prev = r.entropy_bits;
  }
  for (std::size_t i = 0; i < table.closed_rows.size(); ++i) {
    worst = std::max(worst, std::abs(table.closed_rows[i].entropy_bits -
                                     table.overlap_rows[i].entropy_bits));
  }
  c.pass = worst < 1e-9 && increasing;
  c.detail = "max deviation " + fmt(worst) + ", entropy " +
             (increasing ? "strictly increasing" : "NOT increasing");
  return c;
}

}  // namespace

ReportEnvelope run_suite(const RunConfig& config) {
  config.validate();
  const ToleranceConfig tol = config.tolerances();
  ReportEnvelope env;
  env.config = config;

  std::vector<CriterionResult> results;
  results.push_back(suite_quantum_maximum(config.dmax, tol));
  results.push_back(suite_classical_bound(config.dmax, tol));
  results.push_back(suite_gap(config.dmax, tol));
  results.push_back(suite_sos(config.dmax, config.seed, tol));
  results.push_back(suite_projectivity(config.dmax, config.seed, tol));
  results.push_back(suite_nonuniqueness(config.seed, tol));
  std::vector<RobustnessSample> samples;
  results.push_back(suite_robustness(config.dmax, config.trials, config.seed,
                                     tol, samples));
  EntropyTable table;
  results.push_back(suite_entropy(config.dmax, tol, table));

  std::string first_failing;
  for (const auto& r : results) {
    if (!r.pass && first_failing.empty()) first_failing = r.name;
  }

  const auto dir =
      ensure_out_dir(config.out_dir.empty() ? "." : config.out_dir);
  write_text_file((dir / "entropy.csv").string(), entropy_csv(table));
  write_entropy_svg((dir / "entropy.svg").string(), table);
  write_text_file((dir / "robustness.csv").string(),
                  robustness_csv(samples));
  write_robustness_svg((dir / "robustness.svg").string(), samples);

  ordered_json p;
  p["dmax"] = config.dmax;
  p["trials"] = config.trials;
  p["criteria"] = criteria_json(results);
  p["first_failing"] =
      first_failing.empty() ? ordered_json() : ordered_json(first_failing);
  p["artifacts"] = {"entropy.csv", "entropy.svg", "robustness.csv",
                    "robustness.svg", "suite.json"};
  env.payload = p;
  write_text_file((dir / "suite.json").string(), p.dump(2) + "\n");

  finish(env, first_failing.empty());
  return env;
}

ReportEnvelope run_subcommand(const RunConfig& config) {
  if (config.subcommand == "tau") return run_tau(config);
  if (config.subcommand == "classical-bound") return run_classical_bound(config);
  if (config.subcommand == "sos") return run_sos(config);
  if (config.subcommand == "certify") return run_certify(config);
  if (config.subcommand == "robustness") return run_robustness(config);
  if (config.subcommand == "randomness") return run_randomness(config);
  if (config.subcommand == "lemma2") return run_nonuniqueness(config);
  if (config.subcommand == "suite") return run_suite(config);
  throw validation_error("unknown subcommand: " + config.subcommand);
}

}  // namespace tempcert

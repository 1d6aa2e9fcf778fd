#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "tempcert/certification.hpp"
#include "tempcert/inequality.hpp"
#include "tempcert/io.hpp"
#include "tempcert/randomness.hpp"
#include "tempcert/report.hpp"
#include "tempcert/sos.hpp"

using namespace tempcert;

namespace {

struct Checker {
  bool ok = true;
  void require(bool cond, const char* file, int line, const std::string& msg) {
    if (!cond) {
      std::printf("[FAIL] %s:%d %s\n", file, line, msg.c_str());
      ok = false;
    }
  }
};

#define REQUIRE_MSG(c, cond, msg) (c).require((cond), __FILE__, __LINE__, (msg))

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

bool criterion_quantum_maximum() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int d = 2; d <= 8; ++d) {
    const Quartet q = canonical_quartet(d);
    const PreparedState rho = PreparedState::maximally_mixed(d);
    const double target = 4.0 * (d - 1);
    const double stats = tau_from_stats(tables_from_quartet(q, rho));
    const double op = std::real((rho.density * tau_operator(q)).trace());
    REQUIRE_MSG(c, std::abs(stats - target) < 1e-9,
                "statistics route off at d=" + std::to_string(d));
    REQUIRE_MSG(c, std::abs(op - target) < 1e-9,
                "operator route off at d=" + std::to_string(d));
    worst = std::max({worst, std::abs(stats - target), std::abs(op - target)});
  }
  const double dt = seconds_since(start);
  REQUIRE_MSG(c, dt < 5.0, "quantum-maximum sweep took " + num(dt) + "s");
  std::printf("[%s] 1 quantum maximum 4(d-1), d=2..8, both routes: max "
              "deviation %s (%ss)\n",
              c.ok ? "PASS" : "FAIL", num(worst).c_str(), num(dt).c_str());
  return c.ok;
}

bool criterion_classical_bound() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int d = 2; d <= 12; ++d) {
    const double closed = classical_bound_closed(d);
    const double chained = classical_bound_bruteforce(d);
    const double enumerated = classical_bound_assignments(d).bound;
    REQUIRE_MSG(c, std::abs(chained - closed) <= 1e-12,
                "chained maximization off at d=" + std::to_string(d));
    REQUIRE_MSG(c, std::abs(enumerated - closed) <= 1e-12,
                "assignment enumeration off at d=" + std::to_string(d));
    worst = std::max({worst, std::abs(chained - closed),
                      std::abs(enumerated - closed)});
  }
  REQUIRE_MSG(c,
              std::abs(classical_bound_closed(2) - 2.0 * std::sqrt(2.0)) <=
                  1e-12,
              "C_2 != 2*sqrt(2)");
  REQUIRE_MSG(c,
              std::abs(classical_bound_closed(3) -
                       (1.0 + 3.0 * std::sqrt(3.0))) <= 1e-12,
              "C_3 != 1+3*sqrt(3)");
  const double dt = seconds_since(start);
  REQUIRE_MSG(c, dt < 10.0, "classical-bound sweep took " + num(dt) + "s");
  std::printf("[%s] 2 classical bound, three routes, d=2..12: max "
              "disagreement %s (%ss)\n",
              c.ok ? "PASS" : "FAIL", num(worst).c_str(), num(dt).c_str());
  return c.ok;
}

bool criterion_gap() {
  Checker c;
  double min_gap = 1e300;
  for (int d = 2; d <= 20; ++d) {
    const double gap = 4.0 * (d - 1) - classical_bound_closed(d);
    REQUIRE_MSG(c, gap > 0.0, "no gap at d=" + std::to_string(d));
    min_gap = std::min(min_gap, gap);
  }
  std::printf("[%s] 3 quantum-classical gap, d=2..20: min gap %s\n",
              c.ok ? "PASS" : "FAIL", num(min_gap).c_str());
  return c.ok;
}

bool criterion_sos() {
  Checker c;
  double worst_canonical = 0.0;
  for (int d = 2; d <= 6; ++d) {
    const SosReport rep = sos_residuals(canonical_quartet(d));
    REQUIRE_MSG(c, rep.primary_residual < 1e-9,
                "primary residual at d=" + std::to_string(d));
    REQUIRE_MSG(c, rep.alt_residual < 1e-9,
                "alternate residual at d=" + std::to_string(d));
    worst_canonical = std::max(
        {worst_canonical, rep.primary_residual, rep.alt_residual});
  }
  double worst_random = 0.0;
  const RootOfUnityObservable z2 = build_z(2);
  const RootOfUnityObservable z3 = build_z(3);
  for (int d = 2; d <= 3; ++d) {
    Rng rng(9000 + static_cast<std::uint64_t>(d));
    const RootOfUnityObservable& z = d == 2 ? z2 : z3;
    for (int t = 0; t < 100; ++t) {
      Quartet q;
      q.d = d;
      q.D = d;
      for (int i = 0; i < 4; ++i) {
        const Matrix u = haar_unitary(d, rng);
        q.obs[static_cast<std::size_t>(i)] =
            RootOfUnityObservable::from_unitary(u * z.unitary * u.adjoint(),
                                                d);
      }
      const double r = sos_residuals(q).primary_residual;
      REQUIRE_MSG(c, r < 1e-9,
                  "random-quartet residual " + num(r) + " at d=" +
                      std::to_string(d) + " trial " + std::to_string(t));
      worst_random = std::max(worst_random, r);
    }
  }
  std::printf("[%s] 4 SOS identities: canonical d=2..6 max residual %s, 100 "
              "random quartets per d=2,3 max %s\n",
              c.ok ? "PASS" : "FAIL", num(worst_canonical).c_str(),
              num(worst_random).c_str());
  return c.ok;
}

bool criterion_repeatability() {
  Checker c;
  double worst_proj = 0.0;
  double min_smoothed = 1e300;
  int agreements = 0, cases = 0;
  Rng rng(0xFEED);
  for (int d = 2; d <= 4; ++d) {
    const Quartet q = canonical_quartet(d);
    const PreparedState rho = PreparedState::maximally_mixed(d);
    for (int i = 1; i <= 4; ++i) {
      const auto residuals =
          repeatability_residuals(Povm::projective(q.a(i)), rho);
      for (double r : residuals) worst_proj = std::max(worst_proj, r);
    }
    REQUIRE_MSG(c, worst_proj < 1e-12,
                "projective repeatability residual at d=" + std::to_string(d));

    const auto smoothed =
        repeatability_residuals(Povm::smoothed(q.a(1), 0.9), rho);
    double max_smoothed = 0.0;
    for (double r : smoothed) max_smoothed = std::max(max_smoothed, r);
    REQUIRE_MSG(c, max_smoothed > 0.01,
                "smoothed measurement passed at d=" + std::to_string(d));
    min_smoothed = std::min(min_smoothed, max_smoothed);

    for (int t = 0; t < 200; ++t) {
      const Povm m = (t % 2 == 0) ? Povm::random(d, d, rng)
                                  : Povm::random_projective(d, rng);
      const ProjectivityReport rep = projectivity_check(m);
      ++cases;
      agreements += rep.criteria_agree ? 1 : 0;
      REQUIRE_MSG(c, rep.criteria_agree,
                  "criterion/idempotency disagreement at d=" +
                      std::to_string(d) + " trial " + std::to_string(t));
    }
  }
  std::printf("[%s] 5 repeatability criterion: canonical residual %s, "
              "smoothed(0.9) residual %s > 0.01, agreement %d/%d\n",
              c.ok ? "PASS" : "FAIL", num(worst_proj).c_str(),
              num(min_smoothed).c_str(), agreements, cases);
  return c.ok;
}

bool criterion_nonuniqueness() {
  Checker c;
  Rng rng(0xAB);
  double worst = 0.0;
  NonuniquenessReport rep;
  for (int t = 0; t < 10; ++t) {
    const double theta = rng.uniform() * 1.5707963267948966;
    const double phi = rng.uniform() * 6.283185307179586;
    rep = nonuniqueness_demo(theta, phi);
    REQUIRE_MSG(c, std::abs(rep.tau_planar - 4.0) <= 1e-9,
                "planar strategy off maximum, trial " + std::to_string(t));
    worst = std::max(worst, std::abs(rep.tau_planar - 4.0));
  }
  REQUIRE_MSG(c, std::abs(rep.tau_skew - 4.0) <= 5e-3,
              "second strategy off maximum: tau=" + num(rep.tau_skew));
  const double mismatch = std::abs(std::cos(3.14159265358979324 / 8) - 0.7071);
  REQUIRE_MSG(c, mismatch > 0.2, "overlap mismatch too small");
  REQUIRE_MSG(c, rep.overlap_mismatch > 0.2,
              "computed overlap mismatch too small");
  std::printf("[%s] 6 two inequivalent strategies: planar max deviation %s, "
              "skew deviation %s, overlap mismatch %s\n",
              c.ok ? "PASS" : "FAIL", num(worst).c_str(),
              num(std::abs(rep.tau_skew - 4.0)).c_str(),
              num(rep.overlap_mismatch).c_str());
  return c.ok;
}

bool criterion_robustness() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  int held = 0, sharp_held = 0, total = 0;
  std::uint64_t trial_seed = 0;
  for (int d = 2; d <= 4; ++d) {
    const Quartet ideal = canonical_quartet(d);
    const PreparedState rho = PreparedState::maximally_mixed(d);
    for (double delta : {1e-4, 1e-3, 1e-2}) {
      for (int t = 0; t < 112; ++t, ++trial_seed) {
        const Quartet actual = perturb_quartet(d, delta, 70000 + trial_seed);
        const RobustnessReport r = robustness_check(ideal, actual, rho);
        ++total;
        held += r.all_bounds_hold ? 1 : 0;
        sharp_held += r.sharp_bounds_hold ? 1 : 0;
        REQUIRE_MSG(c, r.all_bounds_hold,
                    "closeness bound violated: d=" + std::to_string(d) +
                        " delta=" + num(delta) + " trial " +
                        std::to_string(t));
        REQUIRE_MSG(c, r.sharp_bounds_hold,
                    "sharp row bound violated: d=" + std::to_string(d) +
                        " delta=" + num(delta) + " trial " +
                        std::to_string(t));
      }
    }
  }
  const double dt = seconds_since(start);
  REQUIRE_MSG(c, dt < 60.0, "robustness trials took " + num(dt) + "s");
  std::printf("[%s] 7 robustness bounds: %d/%d trials hold, sharp %d/%d "
              "(%ss)\n",
              c.ok ? "PASS" : "FAIL", held, total, sharp_held, total,
              num(dt).c_str());
  return c.ok;
}

bool criterion_entropy() {
  Checker c;
  REQUIRE_MSG(c, std::abs(entropy_closed_form(2) - 1.0) < 1e-9,
              "entropy at d=2 is not one bit");
  const double h3 = 2.0 * std::log2(3.0) - 16.0 / 9.0;
  REQUIRE_MSG(c, std::abs(entropy_closed_form(3) - h3) < 1e-9,
              "entropy at d=3 off the closed form");
  double prev = 0.0;
  double worst_pair = 0.0;
  for (int d = 2; d <= 8; ++d) {
    const Quartet q = canonical_quartet(d);
    const double closed = entropy_closed_form(d);
    const double overlap = pair_entropy(q.a(1), q.a(2));
    REQUIRE_MSG(c, std::abs(closed - overlap) < 1e-9,
                "closed form vs eigendecomposition at d=" + std::to_string(d));
    REQUIRE_MSG(c, closed > prev,
                "entropy not strictly increasing at d=" + std::to_string(d));
    prev = closed;
    const double h21 = pair_entropy(q.a(2), q.a(1));
    const double h34 = pair_entropy(q.a(3), q.a(4));
    const double h43 = pair_entropy(q.a(4), q.a(3));
    worst_pair = std::max({worst_pair, std::abs(h21 - overlap),
                           std::abs(h34 - overlap), std::abs(h43 - overlap)});
  }
  REQUIRE_MSG(c, worst_pair < 1e-9, "certified pair entropies differ");
  std::printf("[%s] 8 certified randomness: H(2)=1, H(3)=2log2(3)-16/9, "
              "dual-path agreement d=2..8, strictly increasing, pair symmetry "
              "%s\n",
              c.ok ? "PASS" : "FAIL", num(worst_pair).c_str());
  return c.ok;
}

bool criterion_determinism() {
  Checker c;
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "tempcert_acceptance";
  std::error_code ec;
  fs::remove_all(base, ec);
  const fs::path dir_a = base / "a";
  const fs::path dir_b = base / "b";

  RunConfig cfg;
  cfg.subcommand = "suite";
  cfg.dmax = 4;
  cfg.trials = 90;
  cfg.seed = 7;

  cfg.out_dir = dir_a.string();
  const ReportEnvelope first = run_suite(cfg);
  cfg.out_dir = dir_b.string();
  const ReportEnvelope second = run_suite(cfg);
  REQUIRE_MSG(c, first.exit_code == 0,
              "suite failed: " + first.payload["first_failing"].dump());
  REQUIRE_MSG(c, second.exit_code == 0, "second suite run failed");

  int compared = 0;
  for (const char* name : {"entropy.csv", "entropy.svg", "robustness.csv",
                           "robustness.svg", "suite.json"}) {
    const std::string a = read_text_file((dir_a / name).string());
    const std::string b = read_text_file((dir_b / name).string());
    REQUIRE_MSG(c, !a.empty(), std::string(name) + " is empty");
    REQUIRE_MSG(c, a == b, std::string(name) + " differs between runs");
    ++compared;
  }
  REQUIRE_MSG(c, first.payload.dump() == second.payload.dump(),
              "suite payloads differ between runs");
  std::printf("[%s] 9 determinism: identical seed gives byte-identical "
              "artifacts (%d files) and payloads\n",
              c.ok ? "PASS" : "FAIL", compared);
  return c.ok;
}

}  // namespace

int main() {
  int failures = 0;
  failures += criterion_quantum_maximum() ? 0 : 1;
  failures += criterion_classical_bound() ? 0 : 1;
  failures += criterion_gap() ? 0 : 1;
  failures += criterion_sos() ? 0 : 1;
  failures += criterion_repeatability() ? 0 : 1;
  failures += criterion_nonuniqueness() ? 0 : 1;
  failures += criterion_robustness() ? 0 : 1;
  failures += criterion_entropy() ? 0 : 1;
  failures += criterion_determinism() ? 0 : 1;
  if (failures > 0) {
    std::printf("%d of 9 acceptance criteria failed\n", failures);
    return 1;
  }
  std::printf("all 9 acceptance criteria satisfied\n");
  return 0;
}

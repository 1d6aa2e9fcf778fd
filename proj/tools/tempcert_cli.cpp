#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tempcert/report.hpp"

namespace {

struct SubcommandSpec {
  const char* name;
  const char* description;
};

constexpr SubcommandSpec kSubcommands[] = {
    {"tau", "Evaluate the temporal correlation functional and its bounds"},
    {"classical-bound",
     "Cross-check the classical bound: closed form vs two enumerations"},
    {"sos", "Sum-of-squares residuals of the quantum-maximum certificate"},
    {"certify", "Full measurement-certification pipeline on a quartet"},
    {"robustness", "Seeded perturbation trials against the closeness bounds"},
    {"randomness", "Certified-entropy sweep over outcome counts"},
    {"lemma2", "Two inequivalent maximal-violation strategies (d = 2)"},
    {"suite", "Run every check and write CSV/SVG artifacts"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certification of d-outcome measurements from temporal "
               "correlations"};
  app.require_subcommand(1);

  tempcert::RunConfig config;
  double tol_value = 0.0;

  for (const auto& spec : kSubcommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.description);
    sub->add_option("--d", config.d, "outcome count (2..16)");
    sub->add_option("--dmin", config.dmin, "sweep lower bound");
    sub->add_option("--dmax", config.dmax, "sweep upper bound");
    sub->add_option("--observables", config.observables_path,
                    "quartet JSON file (default: canonical quartet)");
    sub->add_option("--state", config.state_spec,
                    "'mixed' or a density-matrix JSON file");
    sub->add_option("--delta", config.delta, "perturbation strength");
    sub->add_option("--trials", config.trials, "number of seeded trials");
    sub->add_option("--seed", config.seed, "RNG seed");
    sub->add_option("--tol", tol_value, "value-comparison tolerance override");
    sub->add_option("--out", config.out_dir, "artifact output directory");
    sub->add_option("--format", config.format, "stdout format: json or csv");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  config.subcommand = sub->get_name();
  if (sub->count("--tol") > 0) config.tol_override = tol_value;

  try {
    const tempcert::ReportEnvelope env = tempcert::run_subcommand(config);
    if (config.format == "csv" && !env.csv.empty()) {
      std::fputs(env.csv.c_str(), stdout);
    } else {
      std::fputs(env.serialize().c_str(), stdout);
    }
    return env.exit_code;
  } catch (const tempcert::numeric_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const tempcert::validation_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const tempcert::spectrum_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tempcert/numerics.hpp"

namespace tempcert {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct RunConfig {
  std::string subcommand;
  int d = 3;
  int dmin = 2;
  int dmax = 8;
  std::string observables_path;  // empty selects the canonical quartet
  std::string state_spec = "mixed";
  double delta = 1e-3;
  int trials = 1008;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol_override;
  std::string out_dir;  // empty means no file artifacts (suite defaults to ".")
  std::string format = "json";

  void validate() const;
  ToleranceConfig tolerances() const;
  nlohmann::ordered_json to_json() const;
};

struct ReportEnvelope {
  std::string version = kToolVersion;
  RunConfig config;
  std::string timestamp;
  nlohmann::ordered_json payload;
  std::string verdict = "pass";  // "pass" or "fail"
  int exit_code = 0;             // 0 pass, 1 checked claim violated
  std::string csv;               // sweep rows, filled by randomness/robustness

  nlohmann::ordered_json to_json(bool include_timestamp = true) const;
  std::string serialize(bool include_timestamp = true) const;
};

ReportEnvelope run_tau(const RunConfig& config);
ReportEnvelope run_classical_bound(const RunConfig& config);
ReportEnvelope run_sos(const RunConfig& config);
ReportEnvelope run_certify(const RunConfig& config);
ReportEnvelope run_robustness(const RunConfig& config);
ReportEnvelope run_randomness(const RunConfig& config);
ReportEnvelope run_nonuniqueness(const RunConfig& config);
ReportEnvelope run_suite(const RunConfig& config);

// Dispatch on config.subcommand; throws validation_error for unknown names.
ReportEnvelope run_subcommand(const RunConfig& config);

}  // namespace tempcert

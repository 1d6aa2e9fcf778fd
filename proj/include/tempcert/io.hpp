#pragma once

#include <string>
#include <vector>

#include "tempcert/certification.hpp"
#include "tempcert/numerics.hpp"
#include "tempcert/observables.hpp"
#include "tempcert/randomness.hpp"
#include "tempcert/sequential.hpp"

namespace tempcert {

// Thrown on malformed or inconsistent input files; maps to exit code 2.
class parse_error : public validation_error {
 public:
  using validation_error::validation_error;
};

// Shortest round-trip decimal with 17 significant digits.
std::string format_sig17(double x);

// Quartet file: {"d":D,"D":N,"observables":[[[re,im],...] x4]}, each
// observable a row-major list of D*D [re,im] pairs.
void save_quartet(const std::string& path, const Quartet& q);
Quartet load_quartet(const std::string& path, const ToleranceConfig& tol = {});

// State file: {"D":N,"density":[[re,im],...]} row-major; "mixed" selects the
// maximally mixed state of dimension D.
PreparedState load_state(const std::string& spec, int D,
                         const ToleranceConfig& tol = {});

struct RobustnessSample {
  int d = 0;
  double delta = 0.0;
  int trial = 0;
  RobustnessReport report;
};

std::string entropy_csv(const EntropyTable& table);
std::string robustness_csv(const std::vector<RobustnessSample>& samples);

void write_entropy_csv(const std::string& path, const EntropyTable& table);
void write_robustness_csv(const std::string& path,
                          const std::vector<RobustnessSample>& samples);

void write_entropy_svg(const std::string& path, const EntropyTable& table);
void write_robustness_svg(const std::string& path,
                          const std::vector<RobustnessSample>& samples);

std::string utc_timestamp();

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tempcert

#include <doctest.h>

#include <filesystem>
#include <string>

#include "tempcert/certification.hpp"
#include "tempcert/io.hpp"
#include "tempcert/report.hpp"

using namespace tempcert;

namespace {

std::filesystem::path temp_dir() {
  const auto dir =
      std::filesystem::temp_directory_path() / "tempcert_io_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("17-digit formatting round-trips doubles") {
  for (double x : {1.0 / 3.0, 2.8284271247461907, -1e-300, 0.0, 6.022e23}) {
    CHECK(std::stod(format_sig17(x)) == x);
  }
}

TEST_CASE("quartet files round-trip bit exactly") {
  const auto path = (temp_dir() / "canonical3.json").string();
  const Quartet q = canonical_quartet(3);
  save_quartet(path, q);
  const Quartet back = load_quartet(path);
  CHECK(back.d == 3);
  CHECK(back.D == 3);
  for (int i = 1; i <= 4; ++i) {
    CHECK(hs_dist(back.a(i).unitary, q.a(i).unitary) == 0.0);
  }
}

TEST_CASE("embedded-dimension quartets round-trip") {
  const auto path = (temp_dir() / "skew.json").string();
  const Strategy s = strategy_skew();
  save_quartet(path, s.quartet);
  const Quartet back = load_quartet(path);
  CHECK(back.d == 2);
  CHECK(back.D == 3);
  CHECK(hs_dist(back.a(3).unitary, s.quartet.a(3).unitary) == 0.0);
}

TEST_CASE("malformed quartet files raise parse errors") {
  const auto dir = temp_dir();
  const auto write = [&dir](const std::string& name, const std::string& body) {
    const auto p = (dir / name).string();
    write_text_file(p, body);
    return p;
  };
  CHECK_THROWS_AS(load_quartet((dir / "missing.json").string()), parse_error);
  CHECK_THROWS_AS(load_quartet(write("bad1.json", "not json")), parse_error);
  CHECK_THROWS_AS(load_quartet(write("bad2.json", "{\"d\":2}")), parse_error);
  CHECK_THROWS_AS(
      load_quartet(write("bad3.json",
                         "{\"d\":2,\"D\":2,\"observables\":[[[1,0]]]}")),
      parse_error);
  CHECK_THROWS_AS(
      load_quartet(write(
          "bad4.json",
          "{\"d\":2,\"D\":1,\"observables\":[[[1,0]],[[1,0]],[[1,0]],[[1,0]]]}")),
      parse_error);
  const std::string not_unitary =
      "{\"d\":2,\"D\":2,\"observables\":["
      "[[2,0],[0,0],[0,0],[2,0]],"
      "[[1,0],[0,0],[0,0],[-1,0]],"
      "[[1,0],[0,0],[0,0],[-1,0]],"
      "[[1,0],[0,0],[0,0],[-1,0]]]}";
  CHECK_THROWS_AS(load_quartet(write("bad5.json", not_unitary)), parse_error);
}

TEST_CASE("state loading") {
  const PreparedState mixed = load_state("mixed", 4);
  CHECK(mixed.is_maximally_mixed());
  const auto path = (temp_dir() / "state.json").string();
  write_text_file(path,
                  "{\"D\":2,\"density\":[[1,0],[0,0],[0,0],[0,0]]}");
  const PreparedState pure = load_state(path, 2);
  CHECK(pure.density(0, 0).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(load_state(path, 3), parse_error);
}

TEST_CASE("csv headers and row shapes") {
  const EntropyTable table = entropy_sweep(2, 3);
  const std::string csv = entropy_csv(table);
  CHECK(csv.rfind("d,pair,entropy_bits,method\n", 0) == 0);
  CHECK(csv.find("2,1-2,") != std::string::npos);
  CHECK(csv.find(",closed_form\n") != std::string::npos);
  CHECK(csv.find(",overlap\n") != std::string::npos);
  CHECK(csv.find("3,1-3,") != std::string::npos);

  std::vector<RobustnessSample> samples(1);
  samples[0].d = 2;
  samples[0].delta = 1e-3;
  samples[0].trial = 0;
  samples[0].report.epsilon = 1e-6;
  const std::string rcsv = robustness_csv(samples);
  CHECK(rcsv.rfind("d,delta,trial,epsilon,", 0) == 0);
}

TEST_CASE("svg artifacts are self-contained documents") {
  const auto dir = temp_dir();
  const EntropyTable table = entropy_sweep(2, 4);
  const auto epath = (dir / "entropy.svg").string();
  write_entropy_svg(epath, table);
  const std::string svg = read_text_file(epath);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);
}

TEST_CASE("report envelopes carry the exit-code contract") {
  RunConfig cfg;
  cfg.subcommand = "tau";
  cfg.d = 3;
  const ReportEnvelope env = run_tau(cfg);
  CHECK(env.exit_code == 0);
  CHECK(env.verdict == "pass");
  CHECK(env.payload["tau"].get<double>() == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(env.payload["violated"].get<bool>());
  const auto j = env.to_json(false);
  CHECK_FALSE(j.contains("timestamp"));
  CHECK(env.to_json(true).contains("timestamp"));

  RunConfig bad = cfg;
  bad.d = 99;
  CHECK_THROWS_AS(run_tau(bad), validation_error);

  RunConfig unknown = cfg;
  unknown.subcommand = "nope";
  CHECK_THROWS_AS(run_subcommand(unknown), validation_error);
}

TEST_CASE("certifying the skew quartet from a file fails with distance") {
  const auto path = (temp_dir() / "skew_certify.json").string();
  save_quartet(path, strategy_skew().quartet);
  RunConfig cfg;
  cfg.subcommand = "certify";
  cfg.observables_path = path;
  const ReportEnvelope env = run_certify(cfg);
  CHECK(env.exit_code == 1);
  CHECK(env.verdict == "fail");
  CHECK(env.payload["certification"].get<std::string>() == "not_certified");
  CHECK(env.payload["fingerprint_distance"].get<double>() > 0.1);
}

TEST_CASE("classical statistics leave the inequality unviolated") {
  Quartet flat;
  flat.d = 2;
  flat.D = 2;
  for (int i = 0; i < 4; ++i) flat.obs[i] = build_z(2);
  const auto path = (temp_dir() / "classical.json").string();
  save_quartet(path, flat);
  RunConfig cfg;
  cfg.subcommand = "tau";
  cfg.d = 2;
  cfg.observables_path = path;
  const ReportEnvelope env = run_tau(cfg);
  CHECK(env.exit_code == 0);
  CHECK_FALSE(env.payload["violated"].get<bool>());
  CHECK(env.payload["tau"].get<double>() <=
        env.payload["classical_bound"].get<double>() + 1e-9);
}

TEST_CASE("lemma2 subcommand reports the strategy mismatch") {
  RunConfig cfg;
  cfg.subcommand = "lemma2";
  cfg.trials = 3;
  const ReportEnvelope env = run_nonuniqueness(cfg);
  CHECK(env.exit_code == 0);
  CHECK(env.payload["overlap_mismatch"].get<double>() > 0.2);
  CHECK(env.payload["max_planar_deviation"].get<double>() < 1e-9);
}

TEST_CASE("timestamps are utc iso-8601") {
  const std::string ts = utc_timestamp();
  REQUIRE(ts.size() == 20);
  CHECK(ts[4] == '-');
  CHECK(ts[10] == 'T');
  CHECK(ts[19] == 'Z');
}

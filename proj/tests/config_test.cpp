#include <cmath>
#include <string>
#include <vector>

#include "railbeam/config.hpp"
#include "support.hpp"

using railbeam::ConfigEntry;
using railbeam::ConfigError;
using railbeam::resolve_config;
using railbeam::RunConfig;
using railbeam::Scheme;
using railbeam::SnrModel;
using railbeam::ValueSource;

namespace {

RunConfig from_file(const std::string& text) {
  return resolve_config(text, {});
}

RunConfig from_flags(std::vector<ConfigEntry> entries) {
  return resolve_config("", entries);
}

std::string error_of(const std::string& file_text,
                     std::vector<ConfigEntry> entries) {
  try {
    resolve_config(file_text, entries);
  } catch (const ConfigError& err) {
    return err.what();
  }
  return "";
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("defaults cover every parameter") {
  RunConfig config = from_file("");
  CHECK(config.geometry.bs_track_offset_m == 20.0);
  CHECK(config.geometry.inter_bs_m == 120.0);
  CHECK(config.geometry.segment_count == 8);
  CHECK(config.geometry.train_speed_mps == 300.0 / 3.6);
  CHECK(config.theta_3db_deg == 30.0);
  CHECK(config.shadowing_db == 10.0);
  CHECK(config.path_loss_exponent == 2.0);
  CHECK(config.wavelength_m == 0.005);
  CHECK(config.bandwidth_hz == 2.16e9);
  CHECK(config.noise_figure_db == 6.0);
  CHECK(config.mode == SnrModel::kPaperLiteral);
  REQUIRE(config.p_ref_dbm.size() == 2);
  CHECK(config.p_ref_dbm[0] == 40.0);
  CHECK(config.p_ref_dbm[1] == 50.0);
  CHECK(!config.sweep.has_value());
  CHECK(config.sigma_v_mps == 0.0);
  CHECK(config.trials == 1000);
  CHECK(config.seed == 1);
  CHECK(config.threads == 1);
  CHECK(!config.eq40_as_printed);
  CHECK(config.out_path.empty());
  for (const auto& [key, source] : config.provenance)
    CHECK(source == ValueSource::kDefault);
}

TEST_CASE("scheme list defaults follow the mode") {
  RunConfig literal = from_file("");
  std::vector<Scheme> lit_expected{Scheme::kMctp, Scheme::kOtpa, Scheme::kMtpa,
                                   Scheme::kOtpaInf};
  CHECK(literal.schemes == lit_expected);

  RunConfig physical = from_file("mode = physical\n");
  std::vector<Scheme> phys_expected{Scheme::kMctp, Scheme::kOtpa,
                                    Scheme::kMtpa, Scheme::kOracle};
  CHECK(physical.schemes == phys_expected);

  RunConfig pinned = from_file("mode = physical\nschemes = otpa\n");
  CHECK(pinned.schemes == std::vector<Scheme>{Scheme::kOtpa});
}

TEST_CASE("flags override the file which overrides defaults") {
  std::string file_text =
      "dl = 100 m\n"
      "v = 200 km/h\n";
  std::vector<ConfigEntry> flags{{"v", "250km/h"}};
  RunConfig config = resolve_config(file_text, flags);
  CHECK(config.geometry.inter_bs_m == 100.0);
  CHECK_CLOSE(config.geometry.train_speed_mps, 250.0 / 3.6, 1e-15);
  CHECK(config.geometry.bs_track_offset_m == 20.0);
  CHECK(config.provenance.at("dl") == ValueSource::kFile);
  CHECK(config.provenance.at("v") == ValueSource::kFlag);
  CHECK(config.provenance.at("d0") == ValueSource::kDefault);
}

TEST_CASE("later entries in one layer win") {
  RunConfig config = from_file("dl = 100 m\ndl = 140 m\n");
  CHECK(config.geometry.inter_bs_m == 140.0);
}

TEST_CASE("file syntax: comments, blank lines, missing separator") {
  RunConfig config = from_file(
      "# leading comment\n"
      "\n"
      "dl = 100 m  # trailing comment\n"
      "   \n");
  CHECK(config.geometry.inter_bs_m == 100.0);

  std::string message = error_of("dl = 100 m\njust words\n", {});
  CHECK(contains(message, "line 2"));
  CHECK(contains(message, "key = value"));
}

TEST_CASE("dimensioned values require their unit") {
  std::string message = error_of("", {{"bandwidth", "2.16"}});
  CHECK(contains(message, "bandwidth"));
  CHECK(contains(message, "frequency unit"));
  CHECK(contains(message, "GHz"));

  message = error_of("", {{"dl", "120 furlong"}});
  CHECK(contains(message, "dl"));
  CHECK(contains(message, "length unit"));
  CHECK(contains(message, "furlong"));

  message = error_of("", {{"v", "fast"}});
  CHECK(contains(message, "expects a number"));

  message = error_of("", {{"path_loss_exp", "2 dB"}});
  CHECK(contains(message, "dimensionless"));
}

TEST_CASE("short aliases map onto canonical keys") {
  RunConfig config = from_file(
      "N = 16\n"
      "P = 43 dBm\n"
      "W = 12 dB\n"
      "n = 2.5\n"
      "lambda = 5 mm\n"
      "B = 2.16 GHz\n"
      "NF = 7 dB\n");
  CHECK(config.geometry.segment_count == 16);
  CHECK(config.p_ref_dbm == std::vector<double>{43.0});
  CHECK(config.shadowing_db == 12.0);
  CHECK(config.path_loss_exponent == 2.5);
  CHECK_CLOSE(config.wavelength_m, 0.005, 1e-15);
  CHECK_CLOSE(config.bandwidth_hz, 2.16e9, 1e-15);
  CHECK(config.noise_figure_db == 7.0);
  CHECK(config.provenance.at("n_segments") == ValueSource::kFile);
  CHECK(config.provenance.at("p_ref") == ValueSource::kFile);
}

TEST_CASE("unit conversions reach canonical units") {
  RunConfig config = from_file(
      "d0 = 2000 cm\n"
      "dl = 0.12 km\n"
      "v = 300 km/h\n"
      "theta_3db = 0.52359877559829887 rad\n"
      "wavelength = 5 mm\n"
      "bandwidth = 2160 MHz\n");
  CHECK_CLOSE(config.geometry.bs_track_offset_m, 20.0, 1e-15);
  CHECK_CLOSE(config.geometry.inter_bs_m, 120.0, 1e-15);
  CHECK_CLOSE(config.geometry.train_speed_mps, 300.0 / 3.6, 1e-15);
  CHECK_CLOSE(config.theta_3db_deg, 30.0, 1e-14);
  CHECK_CLOSE(config.wavelength_m, 0.005, 1e-15);
  CHECK_CLOSE(config.bandwidth_hz, 2.16e9, 1e-15);

  RunConfig khz = from_file("bandwidth = 2160000 kHz\n");
  CHECK_CLOSE(khz.bandwidth_hz, 2.16e9, 1e-15);
}

TEST_CASE("reference power lists") {
  RunConfig config = from_flags({{"p_ref", "40dBm, 50 dBm,60dBm"}});
  CHECK(config.p_ref_dbm == (std::vector<double>{40.0, 50.0, 60.0}));

  std::string message = error_of("", {{"p_ref", "40"}});
  CHECK(contains(message, "p_ref"));
  CHECK(contains(message, "dBm"));
}

TEST_CASE("scheme lists dedupe and order canonically") {
  RunConfig config = from_flags({{"schemes", "otpa,mctp,otpa"}});
  CHECK(config.schemes == (std::vector<Scheme>{Scheme::kMctp, Scheme::kOtpa}));

  RunConfig everything = from_flags(
      {{"schemes", "all"}, {"mode", "physical"}});
  std::vector<Scheme> all{Scheme::kMctp, Scheme::kOtpa, Scheme::kMtpa,
                          Scheme::kOtpaInf, Scheme::kOracle};
  CHECK(everything.schemes == all);

  RunConfig reversed = from_flags(
      {{"schemes", "oracle, otpa-inf, mtpa, otpa, mctp"},
       {"mode", "physical"}});
  CHECK(reversed.schemes == all);

  std::string message = error_of("", {{"schemes", "otpa,teleport"}});
  CHECK(contains(message, "teleport"));
}

TEST_CASE("sweep specifications parse with units") {
  RunConfig dl = from_flags({{"sweep", "dl:60m:200m:20m"}});
  REQUIRE(dl.sweep.has_value());
  CHECK(dl.sweep->variable == "dl");
  CHECK(dl.sweep->start == 60.0);
  CHECK(dl.sweep->stop == 200.0);
  CHECK(dl.sweep->step == 20.0);

  RunConfig v = from_flags({{"sweep", "v:60km/h:80km/h:10km/h"}});
  REQUIRE(v.sweep.has_value());
  CHECK_CLOSE(v.sweep->start, 60.0 / 3.6, 1e-15);
  CHECK_CLOSE(v.sweep->stop, 80.0 / 3.6, 1e-15);
  CHECK_CLOSE(v.sweep->step, 10.0 / 3.6, 1e-15);

  RunConfig n = from_flags({{"sweep", "n_segments:2:32:2"}});
  REQUIRE(n.sweep.has_value());
  CHECK(n.sweep->start == 2.0);
  CHECK(n.sweep->stop == 32.0);
  CHECK(n.sweep->step == 2.0);
}

TEST_CASE("sweep specifications reject malformed input") {
  CHECK(contains(error_of("", {{"sweep", "dl:60m:200m"}}),
                 "var:start:stop:step"));
  CHECK(contains(error_of("", {{"sweep", "dl:60m:200m:0m"}}),
                 "step must be positive"));
  CHECK(contains(error_of("", {{"sweep", "dl:200m:60m:20m"}}),
                 "below its start"));
  CHECK(contains(error_of("", {{"sweep", "p_ref:40dBm:50dBm:10dBm"}}),
                 "dl, v, or n_segments"));
  CHECK(contains(error_of("", {{"sweep", "n_segments:1.5:32:2"}}),
                 "integer"));
  CHECK(contains(error_of("", {{"sweep", "n_segments:0:32:2"}}),
                 "starting at 1"));
  CHECK(contains(error_of("", {{"sweep", "dl:60:200:20"}}), "length unit"));
}

TEST_CASE("out-of-domain values fail validation") {
  CHECK(contains(error_of("", {{"trials", "0"}}), "trials"));
  CHECK(contains(error_of("", {{"threads", "0"}}), "threads"));
  CHECK(contains(error_of("", {{"sigma_v", "-1 m/s"}}), "sigma_v"));
  CHECK(contains(error_of("", {{"d0", "0 m"}}), "config:"));
  CHECK(contains(error_of("", {{"n_segments", "0"}}), "config:"));
  CHECK_THROWS(from_flags({{"theta_3db", "0 deg"}}), ConfigError);
}

TEST_CASE("unknown keys are rejected by name") {
  std::string message = error_of("", {{"pathloss", "2"}});
  CHECK(contains(message, "unknown key"));
  CHECK(contains(message, "pathloss"));
}

TEST_CASE("integer-like fields parse strictly") {
  CHECK(from_flags({{"seed", "18446744073709551615"}}).seed ==
        18446744073709551615ull);
  CHECK(contains(error_of("", {{"seed", "-3"}}), "unsigned"));
  CHECK(contains(error_of("", {{"seed", "12abc"}}), "unsigned"));
  CHECK(contains(error_of("", {{"trials", "2.5"}}), "integer"));
  CHECK(contains(error_of("", {{"eq40_as_printed", "TRUE"}}),
                 "true or false"));
  CHECK(from_flags({{"eq40_as_printed", "true"}}).eq40_as_printed);
}

TEST_CASE("echo round-trips to an equivalent configuration") {
  std::vector<std::vector<ConfigEntry>> cases{
      {},
      {{"sweep", "dl:60m:200m:20m"}, {"p_ref", "40dBm"}},
      {{"sweep", "n_segments:2:32:2"}},
      {{"sweep", "v:60km/h:80km/h:5km/h"}},
      {{"mode", "physical"},
       {"schemes", "all"},
       {"p_ref", "40dBm,50dBm,60dBm"},
       {"eq40_as_printed", "true"},
       {"out", "results.csv"},
       {"sigma_v", "0.8333 m/s"},
       {"trials", "64"},
       {"seed", "7"},
       {"threads", "8"},
       {"theta_3db", "25 deg"},
       {"path_loss_exp", "2.5"},
       {"v", "270 km/h"}},
  };
  for (const auto& entries : cases) {
    RunConfig original = resolve_config("", entries);
    RunConfig reparsed = resolve_config(railbeam::config_echo(original), {});
    CHECK(reparsed.equivalent(original));
  }
}

TEST_CASE("echo labels each value with its source") {
  std::vector<ConfigEntry> flags{{"v", "250km/h"}};
  RunConfig config = resolve_config("dl = 100 m\n", flags);
  std::string echo = railbeam::config_echo(config);
  CHECK(contains(echo, "dl = 100 m  # file"));
  CHECK(contains(echo, "# flag"));
  CHECK(contains(echo, "d0 = 20 m  # default"));
  CHECK(!contains(echo, "sweep"));
  CHECK(!contains(echo, "out ="));
}

int main() { return testkit::run_all(); }

// Command-line front end: layered configuration (defaults, config file,
// flags), four subcommands, CSV/report emission, and provenance echo.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "railbeam/config.hpp"
#include "railbeam/runner.hpp"

namespace {

struct FlagSlot {
  const char* flag;
  const char* key;
  const char* help;
  std::string value;
};

int run(int argc, char** argv) {
  CLI::App app{
      "train-to-trackside link energy simulator\n"
      "Dimensioned flag values carry unit suffixes, e.g. --dl 120m, "
      "--v 300km/h, --bandwidth 2.16GHz, --p-ref \"40dBm,50dBm\"."};
  app.require_subcommand(1);

  std::vector<FlagSlot> slots{
      {"--d0", "d0", "BS offset from the track (length)", {}},
      {"--dl", "dl", "inter-BS spacing (length)", {}},
      {"--v", "v", "train speed (speed)", {}},
      {"--n-segments", "n_segments", "segments per half cell", {}},
      {"--p-ref", "p_ref", "reference power list (dBm each)", {}},
      {"--theta-3db", "theta_3db", "half-power beamwidth (angle)", {}},
      {"--shadowing", "shadowing", "shadowing margin (dB)", {}},
      {"--path-loss-exp", "path_loss_exp", "path loss exponent", {}},
      {"--wavelength", "wavelength", "carrier wavelength (length)", {}},
      {"--bandwidth", "bandwidth", "bandwidth (frequency)", {}},
      {"--noise-figure", "noise_figure", "receiver noise figure (dB)", {}},
      {"--mode", "mode", "paper-literal | physical", {}},
      {"--schemes", "schemes",
       "comma list: mctp, otpa, mtpa, otpa-inf, oracle, all", {}},
      {"--sweep", "sweep", "var:start:stop:step over dl, v, or n_segments", {}},
      {"--sigma-v", "sigma_v", "speed estimate spread (speed)", {}},
      {"--trials", "trials", "Monte Carlo trials", {}},
      {"--seed", "seed", "Monte Carlo seed", {}},
      {"--threads", "threads", "Monte Carlo worker threads", {}},
      {"--out", "out", "output path (default stdout)", {}},
  };
  for (FlagSlot& slot : slots)
    app.add_option(slot.flag, slot.value, slot.help)->take_last();

  std::string config_path;
  app.add_option("--config", config_path, "config file (key = value unit)");
  bool eq40_as_printed = false;
  app.add_flag("--eq40-as-printed", eq40_as_printed,
               "limit report: also print the uncorrected printed form");

  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "CSV of every scheme over the sweep");
  CLI::App* cmd_montecarlo = app.add_subcommand(
      "montecarlo", "CSV of velocity-error aggregate statistics");
  CLI::App* cmd_limit =
      app.add_subcommand("limit", "large-segment-count limit report");
  CLI::App* cmd_allocate = app.add_subcommand(
      "allocate", "per-segment closed-form allocation report");
  for (CLI::App* cmd : {cmd_sweep, cmd_montecarlo, cmd_limit, cmd_allocate})
    cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  std::string file_text;
  if (!config_path.empty()) {
    std::ifstream file(config_path);
    if (!file) {
      std::cerr << "error: cannot read config file " << config_path << "\n";
      return 2;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    file_text = buffer.str();
  }

  std::vector<railbeam::ConfigEntry> entries;
  for (const FlagSlot& slot : slots)
    if (!slot.value.empty()) entries.push_back({slot.key, slot.value});
  if (eq40_as_printed) entries.push_back({"eq40_as_printed", "true"});

  railbeam::RunConfig config;
  railbeam::RunOutput output;
  try {
    config = railbeam::resolve_config(file_text, entries);
    std::cerr << railbeam::config_echo(config);
    if (cmd_sweep->parsed())
      output = railbeam::run_sweep(config);
    else if (cmd_montecarlo->parsed())
      output = railbeam::run_montecarlo_cmd(config);
    else if (cmd_limit->parsed())
      output = railbeam::run_limit_cmd(config);
    else
      output = railbeam::run_allocate_cmd(config);
  } catch (const railbeam::ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }

  if (!config.out_path.empty()) {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << config.out_path << "\n";
      return 2;
    }
    out << output.text;
  } else {
    std::cout << output.text;
  }
  return output.error_rows > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

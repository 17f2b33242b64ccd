#pragma once
// Run configuration: built-in defaults, flat key = value config files with
// mandatory unit suffixes, command-line overrides, provenance tracking, and
// a canonical echo that re-parses to the identical configuration.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "railbeam/allocation.hpp"
#include "railbeam/geometry.hpp"
#include "railbeam/link.hpp"

namespace railbeam {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValueSource { kDefault, kFile, kFlag };

const char* to_string(ValueSource source);

struct SweepSpec {
  std::string variable;  // "dl" | "v" | "n_segments"
  double start = 0.0;    // canonical units: m, m/s, or a count
  double stop = 0.0;
  double step = 0.0;

  bool operator==(const SweepSpec&) const = default;
};

struct RunConfig {
  NetworkGeometry geometry;      // d0, dl, n_segments, v
  double theta_3db_deg = 30.0;
  double shadowing_db = 10.0;
  double path_loss_exponent = 2.0;
  double wavelength_m = 0.005;
  double bandwidth_hz = 2.16e9;
  double noise_figure_db = 6.0;
  SnrModel mode = SnrModel::kPaperLiteral;
  std::vector<double> p_ref_dbm{40.0, 50.0};
  std::vector<Scheme> schemes;   // resolved, deduped, in fixed scheme order
  std::optional<SweepSpec> sweep;
  double sigma_v_mps = 0.0;
  int trials = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
  bool eq40_as_printed = false;
  std::string out_path;

  // Resolution layer that produced each canonical key's value.
  std::map<std::string, ValueSource> provenance;

  LinkBudget budget() const;

  // Throws ConfigError when any resolved value is out of domain.
  void validate() const;

  // Semantic equality; provenance is bookkeeping and not compared.
  bool equivalent(const RunConfig& other) const;
};

struct ConfigEntry {
  std::string key;
  std::string value;
};

// Layered resolution: built-in defaults, then the config file text, then the
// flag entries. Unknown keys, missing units, and malformed values raise
// ConfigError naming the key and what it expected. The scheme list defaults
// to the mode's meaningful set when no layer sets it.
RunConfig resolve_config(const std::string& file_text,
                         std::span<const ConfigEntry> flag_entries);

// Canonical config rendering: one "key = value unit  # source" line per
// resolved value. Feeding the result back through resolve_config yields an
// equivalent RunConfig.
std::string config_echo(const RunConfig& config);

}  // namespace railbeam

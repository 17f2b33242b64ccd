#include "railbeam/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "railbeam/textio.hpp"

namespace railbeam {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void fail(const std::string& message) { throw ConfigError(message); }

std::string canonical_key(const std::string& raw) {
  static const std::map<std::string, std::string> aliases{
      {"N", "n_segments"},   {"P", "p_ref"},      {"W", "shadowing"},
      {"n", "path_loss_exp"}, {"lambda", "wavelength"}, {"B", "bandwidth"},
      {"NF", "noise_figure"}};
  auto hit = aliases.find(raw);
  return hit == aliases.end() ? raw : hit->second;
}

struct UnitTable {
  const char* description;  // e.g. "a length unit (mm, cm, m, km)"
  std::map<std::string, double> factors;
};

const UnitTable kLength{"a length unit (mm, cm, m, km)",
                        {{"mm", 1e-3}, {"cm", 1e-2}, {"m", 1.0}, {"km", 1e3}}};
const UnitTable kSpeed{"a speed unit (m/s, km/h)",
                       {{"m/s", 1.0}, {"km/h", 1.0 / 3.6}}};
const UnitTable kFrequency{
    "a frequency unit (Hz, kHz, MHz, GHz)",
    {{"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}}};
const UnitTable kAngle{"an angle unit (deg, rad)",
                       {{"deg", 1.0}, {"rad", 180.0 / kPi}}};
const UnitTable kDecibel{"dB", {{"dB", 1.0}}};
const UnitTable kDbmUnit{"dBm", {{"dBm", 1.0}}};

// Splits "number [unit]" and returns the value scaled to canonical units.
double parse_quantity(const std::string& key, const std::string& raw,
                      const UnitTable& units) {
  std::string text = trim(raw);
  const char* begin = text.c_str();
  char* number_end = nullptr;
  double value = std::strtod(begin, &number_end);
  if (number_end == begin)
    fail("config: key \"" + key + "\" expects a number, got \"" + raw + "\"");
  std::string unit = trim(std::string(number_end));
  if (unit.empty())
    fail("config: key \"" + key + "\" requires " + units.description +
         ", got \"" + raw + "\"");
  auto hit = units.factors.find(unit);
  if (hit == units.factors.end())
    fail("config: key \"" + key + "\" requires " + units.description +
         ", got unit \"" + unit + "\"");
  if (!std::isfinite(value))
    fail("config: key \"" + key + "\" must be finite");
  return value * hit->second;
}

double parse_bare_number(const std::string& key, const std::string& raw) {
  std::string text = trim(raw);
  const char* begin = text.c_str();
  char* number_end = nullptr;
  double value = std::strtod(begin, &number_end);
  if (number_end == begin || trim(std::string(number_end)) != "")
    fail("config: key \"" + key + "\" expects a dimensionless number, got \"" +
         raw + "\"");
  if (!std::isfinite(value))
    fail("config: key \"" + key + "\" must be finite");
  return value;
}

long long parse_integer(const std::string& key, const std::string& raw) {
  double value = parse_bare_number(key, raw);
  if (value != std::floor(value) || std::fabs(value) > 9.0e15)
    fail("config: key \"" + key + "\" expects an integer, got \"" + raw + "\"");
  return static_cast<long long>(value);
}

std::uint64_t parse_seed(const std::string& key, const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty() || text[0] == '-')
    fail("config: key \"" + key + "\" expects an unsigned integer, got \"" +
         raw + "\"");
  const char* begin = text.c_str();
  char* end = nullptr;
  unsigned long long value = std::strtoull(begin, &end, 10);
  if (end == begin || trim(std::string(end)) != "")
    fail("config: key \"" + key + "\" expects an unsigned integer, got \"" +
         raw + "\"");
  return static_cast<std::uint64_t>(value);
}

bool parse_bool(const std::string& key, const std::string& raw) {
  std::string text = trim(raw);
  if (text == "true") return true;
  if (text == "false") return false;
  fail("config: key \"" + key + "\" expects true or false, got \"" + raw +
       "\"");
}

SnrModel parse_mode(const std::string& raw) {
  std::string text = trim(raw);
  if (text == "paper-literal") return SnrModel::kPaperLiteral;
  if (text == "physical") return SnrModel::kPhysical;
  fail("config: key \"mode\" expects paper-literal or physical, got \"" + raw +
       "\"");
}

std::vector<double> parse_p_ref(const std::string& raw) {
  std::vector<double> powers;
  for (const std::string& part : split(raw, ','))
    powers.push_back(parse_quantity("p_ref", part, kDbmUnit));
  if (powers.empty()) fail("config: key \"p_ref\" expects at least one power");
  return powers;
}

std::vector<Scheme> parse_schemes(const std::string& raw) {
  std::vector<Scheme> schemes;
  auto add = [&](Scheme s) {
    if (std::find(schemes.begin(), schemes.end(), s) == schemes.end())
      schemes.push_back(s);
  };
  for (const std::string& part : split(raw, ',')) {
    std::string token = trim(part);
    if (token == "mctp") add(Scheme::kMctp);
    else if (token == "otpa") add(Scheme::kOtpa);
    else if (token == "mtpa") add(Scheme::kMtpa);
    else if (token == "otpa-inf") add(Scheme::kOtpaInf);
    else if (token == "oracle") add(Scheme::kOracle);
    else if (token == "all") {
      add(Scheme::kMctp);
      add(Scheme::kOtpa);
      add(Scheme::kMtpa);
      add(Scheme::kOtpaInf);
      add(Scheme::kOracle);
    } else {
      fail("config: key \"schemes\" expects tokens from mctp, otpa, mtpa, "
           "otpa-inf, oracle, all; got \"" + token + "\"");
    }
  }
  if (schemes.empty()) fail("config: key \"schemes\" expects at least one token");
  std::sort(schemes.begin(), schemes.end());
  return schemes;
}

SweepSpec parse_sweep(const std::string& raw) {
  std::vector<std::string> parts = split(trim(raw), ':');
  if (parts.size() != 4)
    fail("config: key \"sweep\" expects var:start:stop:step, got \"" + raw +
         "\"");
  SweepSpec spec;
  spec.variable = trim(parts[0]);
  if (spec.variable == "dl") {
    spec.start = parse_quantity("sweep", parts[1], kLength);
    spec.stop = parse_quantity("sweep", parts[2], kLength);
    spec.step = parse_quantity("sweep", parts[3], kLength);
  } else if (spec.variable == "v") {
    spec.start = parse_quantity("sweep", parts[1], kSpeed);
    spec.stop = parse_quantity("sweep", parts[2], kSpeed);
    spec.step = parse_quantity("sweep", parts[3], kSpeed);
  } else if (spec.variable == "n_segments") {
    spec.start = static_cast<double>(parse_integer("sweep", parts[1]));
    spec.stop = static_cast<double>(parse_integer("sweep", parts[2]));
    spec.step = static_cast<double>(parse_integer("sweep", parts[3]));
  } else {
    fail("config: key \"sweep\" expects variable dl, v, or n_segments; got \"" +
         spec.variable + "\"");
  }
  if (!(spec.step > 0.0)) fail("config: sweep step must be positive");
  if (spec.stop < spec.start) fail("config: sweep stop is below its start");
  return spec;
}

struct Resolver {
  RunConfig config;
  bool schemes_set = false;

  void apply(const std::string& raw_key, const std::string& value,
             ValueSource source) {
    std::string key = canonical_key(trim(raw_key));
    if (key == "d0")
      config.geometry.bs_track_offset_m = parse_quantity(key, value, kLength);
    else if (key == "dl")
      config.geometry.inter_bs_m = parse_quantity(key, value, kLength);
    else if (key == "n_segments")
      config.geometry.segment_count =
          static_cast<int>(parse_integer(key, value));
    else if (key == "v")
      config.geometry.train_speed_mps = parse_quantity(key, value, kSpeed);
    else if (key == "theta_3db")
      config.theta_3db_deg = parse_quantity(key, value, kAngle);
    else if (key == "shadowing")
      config.shadowing_db = parse_quantity(key, value, kDecibel);
    else if (key == "path_loss_exp")
      config.path_loss_exponent = parse_bare_number(key, value);
    else if (key == "wavelength")
      config.wavelength_m = parse_quantity(key, value, kLength);
    else if (key == "bandwidth")
      config.bandwidth_hz = parse_quantity(key, value, kFrequency);
    else if (key == "noise_figure")
      config.noise_figure_db = parse_quantity(key, value, kDecibel);
    else if (key == "mode")
      config.mode = parse_mode(value);
    else if (key == "p_ref")
      config.p_ref_dbm = parse_p_ref(value);
    else if (key == "schemes") {
      config.schemes = parse_schemes(value);
      schemes_set = true;
    } else if (key == "sweep")
      config.sweep = parse_sweep(value);
    else if (key == "sigma_v")
      config.sigma_v_mps = parse_quantity(key, value, kSpeed);
    else if (key == "trials")
      config.trials = static_cast<int>(parse_integer(key, value));
    else if (key == "seed")
      config.seed = parse_seed(key, value);
    else if (key == "threads")
      config.threads = static_cast<int>(parse_integer(key, value));
    else if (key == "eq40_as_printed")
      config.eq40_as_printed = parse_bool(key, value);
    else if (key == "out")
      config.out_path = trim(value);
    else
      fail("config: unknown key \"" + key + "\"");
    config.provenance[key] = source;
  }
};

std::vector<Scheme> default_schemes(SnrModel mode) {
  if (mode == SnrModel::kPaperLiteral)
    return {Scheme::kMctp, Scheme::kOtpa, Scheme::kMtpa, Scheme::kOtpaInf};
  return {Scheme::kMctp, Scheme::kOtpa, Scheme::kMtpa, Scheme::kOracle};
}

const std::vector<std::string>& canonical_keys() {
  static const std::vector<std::string> keys{
      "d0",        "dl",          "n_segments",  "v",
      "theta_3db", "shadowing",   "path_loss_exp", "wavelength",
      "bandwidth", "noise_figure", "mode",        "p_ref",
      "schemes",   "sweep",       "sigma_v",     "trials",
      "seed",      "threads",     "eq40_as_printed", "out"};
  return keys;
}

}  // namespace

const char* to_string(ValueSource source) {
  switch (source) {
    case ValueSource::kDefault: return "default";
    case ValueSource::kFile: return "file";
    case ValueSource::kFlag: return "flag";
  }
  return "?";
}

LinkBudget RunConfig::budget() const {
  LinkBudget b;
  b.pattern = AntennaPattern::from_beamwidth(Degrees{theta_3db_deg});
  b.shadowing_margin = {shadowing_db};
  b.path_loss_exponent = path_loss_exponent;
  b.wavelength_m = wavelength_m;
  b.bandwidth_hz = bandwidth_hz;
  b.noise_figure = {noise_figure_db};
  return b;
}

void RunConfig::validate() const {
  try {
    geometry.validate();
    budget().validate();
  } catch (const std::invalid_argument& err) {
    fail(std::string("config: ") + err.what());
  }
  if (p_ref_dbm.empty()) fail("config: p_ref must list at least one power");
  if (schemes.empty()) fail("config: schemes must not be empty");
  if (!(sigma_v_mps >= 0.0)) fail("config: sigma_v must be non-negative");
  if (trials < 1) fail("config: trials must be at least 1");
  if (threads < 1) fail("config: threads must be at least 1");
  if (sweep) {
    if (sweep->variable == "n_segments" &&
        (sweep->start < 1.0 || sweep->step != std::floor(sweep->step) ||
         sweep->start != std::floor(sweep->start)))
      fail("config: an n_segments sweep needs integer points starting at 1");
  }
}

bool RunConfig::equivalent(const RunConfig& other) const {
  return geometry.bs_track_offset_m == other.geometry.bs_track_offset_m &&
         geometry.inter_bs_m == other.geometry.inter_bs_m &&
         geometry.segment_count == other.geometry.segment_count &&
         geometry.train_speed_mps == other.geometry.train_speed_mps &&
         theta_3db_deg == other.theta_3db_deg &&
         shadowing_db == other.shadowing_db &&
         path_loss_exponent == other.path_loss_exponent &&
         wavelength_m == other.wavelength_m &&
         bandwidth_hz == other.bandwidth_hz &&
         noise_figure_db == other.noise_figure_db && mode == other.mode &&
         p_ref_dbm == other.p_ref_dbm && schemes == other.schemes &&
         sweep == other.sweep && sigma_v_mps == other.sigma_v_mps &&
         trials == other.trials && seed == other.seed &&
         threads == other.threads &&
         eq40_as_printed == other.eq40_as_printed && out_path == other.out_path;
}

RunConfig resolve_config(const std::string& file_text,
                         std::span<const ConfigEntry> flag_entries) {
  Resolver resolver;
  for (const std::string& key : canonical_keys())
    resolver.config.provenance[key] = ValueSource::kDefault;

  std::istringstream lines(file_text);
  std::string line;
  int line_number = 0;
  while (std::getline(lines, line)) {
    ++line_number;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail("config: line " + std::to_string(line_number) +
           " is not a key = value pair");
    resolver.apply(line.substr(0, eq), line.substr(eq + 1), ValueSource::kFile);
  }

  for (const ConfigEntry& entry : flag_entries)
    resolver.apply(entry.key, entry.value, ValueSource::kFlag);

  if (!resolver.schemes_set)
    resolver.config.schemes = default_schemes(resolver.config.mode);
  resolver.config.validate();
  return resolver.config;
}

std::string config_echo(const RunConfig& config) {
  auto source_of = [&](const std::string& key) {
    auto hit = config.provenance.find(key);
    return to_string(hit == config.provenance.end() ? ValueSource::kDefault
                                                    : hit->second);
  };
  auto line = [&](const std::string& key, const std::string& value) {
    return key + " = " + value + "  # " + source_of(key) + "\n";
  };

  std::string text;
  text += line("d0", format_double(config.geometry.bs_track_offset_m) + " m");
  text += line("dl", format_double(config.geometry.inter_bs_m) + " m");
  text += line("n_segments", std::to_string(config.geometry.segment_count));
  text += line("v", format_double(config.geometry.train_speed_mps) + " m/s");
  text += line("theta_3db", format_double(config.theta_3db_deg) + " deg");
  text += line("shadowing", format_double(config.shadowing_db) + " dB");
  text += line("path_loss_exp", format_double(config.path_loss_exponent));
  text += line("wavelength", format_double(config.wavelength_m) + " m");
  text += line("bandwidth", format_double(config.bandwidth_hz) + " Hz");
  text += line("noise_figure", format_double(config.noise_figure_db) + " dB");
  text += line("mode", to_string(config.mode));

  std::string powers;
  for (std::size_t i = 0; i < config.p_ref_dbm.size(); ++i) {
    if (i) powers += ", ";
    powers += format_double(config.p_ref_dbm[i]) + " dBm";
  }
  text += line("p_ref", powers);

  std::string schemes;
  for (std::size_t i = 0; i < config.schemes.size(); ++i) {
    if (i) schemes += ", ";
    switch (config.schemes[i]) {
      case Scheme::kMctp: schemes += "mctp"; break;
      case Scheme::kOtpa: schemes += "otpa"; break;
      case Scheme::kMtpa: schemes += "mtpa"; break;
      case Scheme::kOtpaInf: schemes += "otpa-inf"; break;
      case Scheme::kOracle: schemes += "oracle"; break;
    }
  }
  text += line("schemes", schemes);

  if (config.sweep) {
    std::string unit = config.sweep->variable == "dl"  ? "m"
                       : config.sweep->variable == "v" ? "m/s"
                                                       : "";
    auto bound = [&](double value) {
      return format_double(value) + unit;
    };
    text += line("sweep", config.sweep->variable + ":" +
                              bound(config.sweep->start) + ":" +
                              bound(config.sweep->stop) + ":" +
                              bound(config.sweep->step));
  }

  text += line("sigma_v", format_double(config.sigma_v_mps) + " m/s");
  text += line("trials", std::to_string(config.trials));
  text += line("seed", std::to_string(config.seed));
  text += line("threads", std::to_string(config.threads));
  text += line("eq40_as_printed", config.eq40_as_printed ? "true" : "false");
  if (!config.out_path.empty()) text += line("out", config.out_path);
  return text;
}

}  // namespace railbeam

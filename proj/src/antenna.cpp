#include "railbeam/antenna.hpp"

#include <cmath>
#include <stdexcept>

namespace railbeam {

AntennaPattern AntennaPattern::from_beamwidth(Degrees theta_3db) {
  if (!(theta_3db.value > 0.0 && theta_3db.value < 180.0))
    throw std::invalid_argument(
        "antenna: half-power beamwidth must lie in (0, 180) degrees");
  AntennaPattern p;
  p.half_power_beamwidth = theta_3db;
  p.peak_gain = max_gain(theta_3db);
  p.sidelobe_gain = railbeam::sidelobe_gain(theta_3db);
  p.main_lobe_width = {2.6 * theta_3db.value};
  return p;
}

Decibels max_gain(Degrees theta_3db) {
  if (!(theta_3db.value > 0.0 && theta_3db.value <= 180.0))
    throw std::invalid_argument(
        "antenna: half-power beamwidth must lie in (0, 180] degrees");
  double half = std::sin(to_radians(Degrees{theta_3db.value / 2.0}).value);
  double amplitude = 1.6162 / half;
  return {10.0 * std::log10(amplitude * amplitude)};
}

Decibels sidelobe_gain(Degrees theta_3db) {
  if (!(theta_3db.value > 0.0))
    throw std::invalid_argument("antenna: beamwidth must be positive");
  return {-0.4111 * std::log(theta_3db.value) - 10.579};
}

Decibels gain_at(const AntennaPattern& pattern, Degrees theta) {
  if (!(theta.value >= 0.0 && theta.value <= 180.0))
    throw std::invalid_argument(
        "antenna: off-boresight angle must lie in [0, 180] degrees");
  if (theta.value <= pattern.main_lobe_width.value / 2.0) {
    double steps = 2.0 * theta.value / pattern.half_power_beamwidth.value;
    return {pattern.peak_gain.value - 3.01 * steps * steps};
  }
  return pattern.sidelobe_gain;
}

}  // namespace railbeam

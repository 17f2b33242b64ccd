#pragma once
// Directional antenna model: a main lobe that is Gaussian in linear scale
// (quadratic in dB) over a constant sidelobe floor, parameterized entirely
// by the half-power beamwidth.

#include "railbeam/units.hpp"

namespace railbeam {

struct AntennaPattern {
  Degrees half_power_beamwidth;  // theta_3dB
  Decibels peak_gain;            // boresight gain
  Decibels sidelobe_gain;
  Degrees main_lobe_width;       // 2.6 * theta_3dB

  // Derives all pattern constants from the beamwidth. Requires
  // 0 < theta_3dB < 180 degrees.
  static AntennaPattern from_beamwidth(Degrees theta_3db);
};

// Boresight gain for a half-power beamwidth in (0, 180] degrees.
Decibels max_gain(Degrees theta_3db);

// Constant sidelobe level; the fit takes the beamwidth in degrees and
// requires it positive.
Decibels sidelobe_gain(Degrees theta_3db);

// Gain at an off-boresight angle in [0, 180] degrees. Inside half the
// main-lobe width the gain falls quadratically in dB, reaching -3.01 dB at
// half the half-power beamwidth; outside, the constant sidelobe applies.
// The two branches do not meet, so the model jumps at the branch edge.
Decibels gain_at(const AntennaPattern& pattern, Degrees theta);

}  // namespace railbeam

#pragma once
// Thin value wrappers that keep dB-domain, linear-power and angular
// quantities apart at API boundaries. Arithmetic happens on .value after an
// explicit unwrap; the types only prevent silent cross-domain mixing.

#include <cmath>

namespace railbeam {

// Relative level in decibels (gains, margins, noise figure).
struct Decibels {
  double value = 0.0;
};

// Absolute power in dB referenced to 1 mW.
struct DbmPower {
  double value = 0.0;
};

// Absolute power on the linear scale.
struct Watts {
  double value = 0.0;
};

struct Degrees {
  double value = 0.0;
};

struct Radians {
  double value = 0.0;
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline Radians to_radians(Degrees a) { return {a.value * kPi / 180.0}; }
inline Degrees to_degrees(Radians a) { return {a.value * 180.0 / kPi}; }

inline Watts to_watts(DbmPower p) {
  return {1e-3 * std::pow(10.0, p.value / 10.0)};
}

inline DbmPower to_dbm(Watts w) { return {10.0 * std::log10(w.value * 1e3)}; }

// Linear amplitude ratio for a relative dB level.
inline double db_ratio(Decibels level) {
  return std::pow(10.0, level.value / 10.0);
}

inline double mps_from_kmh(double kmh) { return kmh / 3.6; }

}  // namespace railbeam

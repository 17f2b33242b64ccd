#pragma once
// Link budget: wavelength-referenced path loss with a tunable exponent, a
// fixed shadowing margin, the thermal noise floor, and the two SNR
// conventions the simulator supports.

#include "railbeam/antenna.hpp"
#include "railbeam/units.hpp"

namespace railbeam {

// How receive power and noise combine into an SNR.
//
//   kPaperLiteral: the quotient of the two dB-domain values themselves.
//     With a negative noise floor this makes SNR fall as transmit power
//     rises once RX power goes negative. Counterintuitive, but the
//     closed-form allocation and the asymptotic limit only hold under this
//     reading, so it is a first-class mode and the default.
//   kPhysical: conventional linear ratio, 10^((rx - noise)/10).
enum class SnrModel { kPaperLiteral, kPhysical };

const char* to_string(SnrModel model);

struct LinkBudget {
  AntennaPattern pattern;
  Decibels shadowing_margin{10.0};   // W
  double path_loss_exponent = 2.0;   // n
  double wavelength_m = 0.005;       // lambda
  double bandwidth_hz = 2.16e9;      // B
  Decibels noise_figure{6.0};        // NF

  // Throws std::invalid_argument when a field is outside its domain.
  void validate() const;
};

// Thermal noise floor: -174 dBm/Hz plus bandwidth and noise figure.
DbmPower noise_power_dbm(const LinkBudget& budget);

// Receive power with both ends at boresight gain. Requires distance > 0.
DbmPower rx_power_dbm(const LinkBudget& budget, DbmPower ptx, double distance_m);

// Dimensionless SNR under the chosen convention.
double snr(const LinkBudget& budget, SnrModel model, DbmPower ptx,
           double distance_m);

// Spectral rate log2(1 + snr). Requires snr > -1; the paper-literal mode can
// leave that region, which callers treat as a modeling breakdown.
double rate(double snr_value);

}  // namespace railbeam

#include "railbeam/link.hpp"

#include <cmath>
#include <stdexcept>

namespace railbeam {

const char* to_string(SnrModel model) {
  return model == SnrModel::kPaperLiteral ? "paper-literal" : "physical";
}

void LinkBudget::validate() const {
  if (!(shadowing_margin.value >= 0.0))
    throw std::invalid_argument("link: shadowing margin must be non-negative");
  if (!(path_loss_exponent > 0.0))
    throw std::invalid_argument("link: path loss exponent must be positive");
  if (!(wavelength_m > 0.0))
    throw std::invalid_argument("link: wavelength must be positive");
  if (!(bandwidth_hz > 0.0))
    throw std::invalid_argument("link: bandwidth must be positive");
  if (!(noise_figure.value >= 0.0))
    throw std::invalid_argument("link: noise figure must be non-negative");
}

DbmPower noise_power_dbm(const LinkBudget& budget) {
  return {-174.0 + 10.0 * std::log10(budget.bandwidth_hz) +
          budget.noise_figure.value};
}

DbmPower rx_power_dbm(const LinkBudget& budget, DbmPower ptx, double distance_m) {
  if (!(distance_m > 0.0))
    throw std::invalid_argument("link: distance must be positive");
  double path = 10.0 * budget.path_loss_exponent *
                std::log10(budget.wavelength_m / (4.0 * kPi * distance_m));
  return {ptx.value + 2.0 * budget.pattern.peak_gain.value -
          budget.shadowing_margin.value + path};
}

double snr(const LinkBudget& budget, SnrModel model, DbmPower ptx,
           double distance_m) {
  DbmPower rx = rx_power_dbm(budget, ptx, distance_m);
  DbmPower noise = noise_power_dbm(budget);
  if (model == SnrModel::kPaperLiteral) {
    if (noise.value == 0.0)
      throw std::domain_error("snr: zero noise level makes the dB quotient undefined");
    return rx.value / noise.value;
  }
  return std::pow(10.0, (rx.value - noise.value) / 10.0);
}

double rate(double snr_value) {
  if (!(snr_value > -1.0))
    throw std::domain_error("rate: snr at or below -1 has no finite log2 rate");
  return std::log2(1.0 + snr_value);
}

}  // namespace railbeam

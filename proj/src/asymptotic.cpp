#include "railbeam/asymptotic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "railbeam/allocation.hpp"
#include "railbeam/quadrature.hpp"

namespace railbeam {

namespace {

void require_literal(SnrModel mode, const char* what) {
  if (mode != SnrModel::kPaperLiteral)
    throw std::invalid_argument(std::string(what) +
                                ": defined in paper-literal mode only");
}

double require_data(double d_fixed) {
  if (!(d_fixed >= 0.0))
    throw std::invalid_argument("limit: data requirement must be non-negative");
  return d_fixed;
}

// noise + m + 10 n log10(lambda / 4 pi), the distance-independent part of
// the per-segment power offset, in dB.
double offset_per_width(const NetworkGeometry& geo, const LinkBudget& budget) {
  LimitConstants lc = limit_constants(geo, budget, 0.0);
  double noise = noise_power_dbm(budget).value;
  return noise + lc.m_db +
         10.0 * budget.path_loss_exponent *
             std::log10(budget.wavelength_m / (4.0 * kPi));
}

}  // namespace

LimitConstants limit_constants(const NetworkGeometry& geo,
                               const LinkBudget& budget, double d_fixed) {
  geo.validate();
  budget.validate();
  require_data(d_fixed);
  LimitConstants lc;
  lc.h = geo.inter_bs_m / (2.0 * geo.bs_track_offset_m);
  lc.k_rad = std::atan(lc.h);
  lc.q = geo.train_speed_mps * d_fixed / geo.bs_track_offset_m;
  lc.m_db = 2.0 * budget.pattern.peak_gain.value - budget.shadowing_margin.value;
  return lc;
}

PartialSums energy_partial_sums(const NetworkGeometry& geo,
                                const LinkBudget& budget, double d_fixed,
                                int segment_count, SnrModel mode) {
  require_literal(mode, "energy_partial_sums");
  require_data(d_fixed);
  NetworkGeometry g = geo;
  g.segment_count = segment_count;
  SegmentPlan plan = segment_plan(g);
  LimitConstants lc = limit_constants(g, budget, d_fixed);
  double per_width = offset_per_width(g, budget);
  double ten_n = 10.0 * budget.path_loss_exponent;

  PartialSums sums;
  for (int i = 0; i < plan.count(); ++i) {
    double phi = plan.widths_m[static_cast<std::size_t>(i)] / g.bs_track_offset_m;
    sums.rate_growth += phi * std::exp2(lc.q / (phi * segment_count));
    sums.offset += phi * per_width;
    sums.distance +=
        phi * ten_n *
        std::log10(plan.midpoint_distances_m[static_cast<std::size_t>(i)]);
  }
  return sums;
}

PartialSums energy_partial_limits(const NetworkGeometry& geo,
                                  const LinkBudget& budget, double d_fixed,
                                  SnrModel mode) {
  require_literal(mode, "energy_partial_limits");
  LimitConstants lc = limit_constants(geo, budget, require_data(d_fixed));
  PartialSums sums;
  sums.rate_growth = lc.h + lc.k_rad * (std::exp2(lc.q / lc.k_rad) - 1.0);
  sums.offset = lc.h * offset_per_width(geo, budget);
  sums.distance = 10.0 * budget.path_loss_exponent * lc.h *
                  std::log10(geo.bs_track_offset_m);
  return sums;
}

double finite_energy_sum(const NetworkGeometry& geo, const LinkBudget& budget,
                         double d_fixed, int segment_count, SnrModel mode) {
  require_literal(mode, "finite_energy_sum");
  require_data(d_fixed);
  NetworkGeometry g = geo;
  g.segment_count = segment_count;
  SegmentPlan plan = segment_plan(g);
  PowerAllocation alloc = allocate_closed_form(plan, budget, d_fixed, mode);
  return energy_of(plan, alloc);
}

double limit_energy(const NetworkGeometry& geo, const LinkBudget& budget,
                    double d_fixed, SnrModel mode) {
  require_literal(mode, "limit_energy");
  LimitConstants lc = limit_constants(geo, budget, require_data(d_fixed));
  double noise = noise_power_dbm(budget).value;
  double distance_term =
      10.0 * budget.path_loss_exponent *
      std::log10(4.0 * kPi * geo.bs_track_offset_m / budget.wavelength_m);
  return geo.bs_track_offset_m / geo.train_speed_mps *
         (lc.h * (distance_term - lc.m_db) +
          lc.k_rad * noise * (std::exp2(lc.q / lc.k_rad) - 1.0));
}

double limit_energy_as_printed(const NetworkGeometry& geo,
                               const LinkBudget& budget, double d_fixed,
                               SnrModel mode) {
  require_literal(mode, "limit_energy_as_printed");
  LimitConstants lc = limit_constants(geo, budget, require_data(d_fixed));
  double noise = noise_power_dbm(budget).value;
  double distance_term = 10.0 * budget.path_loss_exponent *
                         (4.0 * kPi * geo.bs_track_offset_m / budget.wavelength_m);
  return geo.bs_track_offset_m / geo.train_speed_mps *
         (lc.h * (distance_term - lc.m_db) +
          lc.k_rad * noise * (std::exp2(lc.q / lc.k_rad) - 1.0));
}

double limit_energy_quadrature(const NetworkGeometry& geo,
                               const LinkBudget& budget, double d_fixed,
                               SnrModel mode) {
  require_literal(mode, "limit_energy_quadrature");
  require_data(d_fixed);
  geo.validate();
  budget.validate();
  auto power_at = [&](double x) {
    return limit_power_dbm_at(geo, budget, d_fixed, x);
  };
  return integrate(power_at, 0.0, geo.inter_bs_m / 2.0) / geo.train_speed_mps;
}

double limit_rate_at(const NetworkGeometry& geo, double d_fixed, double x_m) {
  geo.validate();
  require_data(d_fixed);
  if (x_m < 0.0 || x_m > geo.inter_bs_m / 2.0)
    throw std::invalid_argument("limit_rate_at: position outside the half cell");
  double h = geo.inter_bs_m / (2.0 * geo.bs_track_offset_m);
  double k = std::atan(h);
  double q = geo.train_speed_mps * d_fixed / geo.bs_track_offset_m;
  double u = std::atan((geo.inter_bs_m / 2.0 - x_m) / geo.bs_track_offset_m);
  double cos_u = std::cos(u);
  return q * cos_u * cos_u / k;
}

double limit_power_dbm_at(const NetworkGeometry& geo, const LinkBudget& budget,
                          double d_fixed, double x_m) {
  budget.validate();
  double r = limit_rate_at(geo, d_fixed, x_m);
  double along = geo.inter_bs_m / 2.0 - x_m;
  double d = std::sqrt(geo.bs_track_offset_m * geo.bs_track_offset_m +
                       along * along);
  double noise = noise_power_dbm(budget).value;
  double c = rx_power_dbm(budget, DbmPower{0.0}, d).value / noise;
  return (std::exp2(r) - 1.0 - c) * noise;
}

}  // namespace railbeam

#include "railbeam/traffic.hpp"

#include <cmath>
#include <stdexcept>

#include "railbeam/quadrature.hpp"

namespace railbeam {

double data_segment_midpoint(const SegmentPlan& plan, const LinkBudget& budget,
                             SnrModel model, DbmPower ptx, int segment_index) {
  if (segment_index < 1 || segment_index > plan.count())
    throw std::invalid_argument("traffic: segment index out of range");
  std::size_t i = static_cast<std::size_t>(segment_index - 1);
  double s = snr(budget, model, ptx, plan.midpoint_distances_m[i]);
  return rate(s) * plan.dwell_times_s[i];
}

double data_total_midpoint(const SegmentPlan& plan, const LinkBudget& budget,
                           SnrModel model, std::span<const double> powers_dbm) {
  if (powers_dbm.size() != plan.widths_m.size())
    throw std::invalid_argument(
        "traffic: power count does not match the segment count");
  double total = 0.0;
  for (int i = 1; i <= plan.count(); ++i) {
    double p = powers_dbm[static_cast<std::size_t>(i - 1)];
    if (std::isinf(p) && p < 0.0) continue;
    total += data_segment_midpoint(plan, budget, model, DbmPower{p}, i);
  }
  return total;
}

double data_integral_constant_power_window(const NetworkGeometry& geo,
                                           const LinkBudget& budget,
                                           SnrModel model, DbmPower ptx,
                                           double t0_s, double t1_s) {
  geo.validate();
  budget.validate();
  if (t1_s < t0_s)
    throw std::invalid_argument("traffic: window ends before it starts");
  auto instantaneous_rate = [&](double t) {
    return rate(snr(budget, model, ptx, distance_at_time(geo, t)));
  };
  return integrate(instantaneous_rate, t0_s, t1_s);
}

double data_integral_constant_power(const NetworkGeometry& geo,
                                    const LinkBudget& budget, SnrModel model,
                                    DbmPower ptx) {
  double t_end = geo.inter_bs_m / (2.0 * geo.train_speed_mps);
  return data_integral_constant_power_window(geo, budget, model, ptx, 0.0, t_end);
}

}  // namespace railbeam

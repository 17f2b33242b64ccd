#include "railbeam/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace railbeam {

void NetworkGeometry::validate() const {
  if (!(bs_track_offset_m > 0.0))
    throw std::invalid_argument("geometry: d0 must be positive");
  if (!(inter_bs_m > 0.0))
    throw std::invalid_argument("geometry: dl must be positive");
  if (segment_count < 1)
    throw std::invalid_argument("geometry: segment count must be at least 1");
  if (!(train_speed_mps > 0.0))
    throw std::invalid_argument("geometry: train speed must be positive");
}

Radians beam_angle(const NetworkGeometry& geo) {
  geo.validate();
  return {std::atan(geo.inter_bs_m / (2.0 * geo.bs_track_offset_m)) /
          geo.segment_count};
}

std::vector<double> segment_widths(double d0_m, int n, Radians theta) {
  if (!(d0_m > 0.0)) throw std::invalid_argument("segment_widths: d0 must be positive");
  if (n < 1) throw std::invalid_argument("segment_widths: need at least one segment");
  if (!(theta.value > 0.0))
    throw std::invalid_argument("segment_widths: beam angle must be positive");
  if (n * theta.value >= kPi / 2.0)
    throw std::invalid_argument(
        "segment_widths: total angular span reaches or exceeds 90 degrees");

  // Segment i spans the angular slice [(n-i) theta, (n+1-i) theta] as seen
  // from the BS, so its along-track width is a difference of tangents.
  std::vector<double> widths(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    double outer = std::tan((n + 1 - i) * theta.value);
    double inner = std::tan((n - i) * theta.value);
    widths[static_cast<std::size_t>(i - 1)] = d0_m * (outer - inner);
  }
  return widths;
}

SegmentPlan segment_plan(const NetworkGeometry& geo) {
  geo.validate();
  SegmentPlan plan;
  plan.beam_angle = beam_angle(geo);
  plan.widths_m = segment_widths(geo.bs_track_offset_m, geo.segment_count,
                                 plan.beam_angle);

  const double d0 = geo.bs_track_offset_m;
  const double half_cell = geo.inter_bs_m / 2.0;
  plan.midpoint_distances_m.reserve(plan.widths_m.size());
  plan.dwell_times_s.reserve(plan.widths_m.size());
  double covered = 0.0;
  for (double w : plan.widths_m) {
    double offset = half_cell - covered - w / 2.0;
    plan.midpoint_distances_m.push_back(std::sqrt(offset * offset + d0 * d0));
    plan.dwell_times_s.push_back(w / geo.train_speed_mps);
    covered += w;
  }
  return plan;
}

double position_at(double speed_mps, double t_s, double x0_m, double t0_s) {
  return x0_m + speed_mps * (t_s - t0_s);
}

double distance_at_position(const NetworkGeometry& geo, double x_m) {
  const double d0 = geo.bs_track_offset_m;
  const double offset = geo.inter_bs_m / 2.0 - x_m;
  return std::sqrt(offset * offset + d0 * d0);
}

double distance_at_time(const NetworkGeometry& geo, double t_s) {
  return distance_at_position(geo, geo.train_speed_mps * t_s);
}

}  // namespace railbeam

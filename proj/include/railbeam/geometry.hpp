#pragma once
// Cell geometry for a straight track served by trackside base stations.
// Each BS covers half the inter-BS distance on either side; the half cell
// [0, dl/2] is split into N beam segments of equal angular width at the BS.
// The train enters at the cell edge (widest segment) and moves toward the
// broadside point.

#include <vector>

#include "railbeam/units.hpp"

namespace railbeam {

struct NetworkGeometry {
  double bs_track_offset_m = 20.0;          // d0, BS to rail, perpendicular
  double inter_bs_m = 120.0;                // dl, distance between adjacent BSs
  int segment_count = 8;                    // N, beam segments per half cell
  double train_speed_mps = 300.0 / 3.6;     // v

  // Throws std::invalid_argument on non-positive sizes or speeds.
  void validate() const;
};

struct SegmentPlan {
  std::vector<double> widths_m;              // along-track length per segment
  std::vector<double> midpoint_distances_m;  // BS to segment midpoint
  std::vector<double> dwell_times_s;         // width / speed
  Radians beam_angle;

  int count() const { return static_cast<int>(widths_m.size()); }
};

// Per-beam angular width: arctan(dl / (2 d0)) / N.
Radians beam_angle(const NetworkGeometry& geo);

// Segment widths for a hand-chosen beam angle, widest first. Rejects
// n * theta >= pi/2, which cannot happen when theta comes from beam_angle().
std::vector<double> segment_widths(double d0_m, int n, Radians theta);

// Full half-cell plan: widths, midpoint distances and dwell times, ordered
// from the cell edge toward broadside.
SegmentPlan segment_plan(const NetworkGeometry& geo);

// Along-track position of the train under constant speed.
double position_at(double speed_mps, double t_s, double x0_m = 0.0,
                   double t0_s = 0.0);

// BS-to-train distance for a train at along-track position x, where x = 0 is
// the cell edge and x = dl/2 the broadside point. The formula is total, so
// positions outside [0, dl/2] evaluate as well.
double distance_at_position(const NetworkGeometry& geo, double x_m);

// BS-to-train distance at time t for a train entering the half cell at t = 0.
double distance_at_time(const NetworkGeometry& geo, double t_s);

}  // namespace railbeam

#pragma once
// Delivered data over the half cell, in rate-seconds: the time integral of
// the log2 spectral rate (bandwidth is not folded in). Two estimators: the
// per-segment midpoint rule the allocator is built on, and the exact time
// integral under constant power, which defines the data requirement the
// optimized schemes must meet.

#include <span>

#include "railbeam/geometry.hpp"
#include "railbeam/link.hpp"

namespace railbeam {

// Midpoint-rule data for one segment (1-based index): rate at the segment's
// midpoint distance times its dwell time.
double data_segment_midpoint(const SegmentPlan& plan, const LinkBudget& budget,
                             SnrModel model, DbmPower ptx, int segment_index);

// Midpoint-rule data summed over all segments with per-segment powers. An
// entry of -infinity marks a switched-off transmitter and contributes
// nothing.
double data_total_midpoint(const SegmentPlan& plan, const LinkBudget& budget,
                           SnrModel model, std::span<const double> powers_dbm);

// Exact data under constant power over the full half-cell traversal.
double data_integral_constant_power(const NetworkGeometry& geo,
                                    const LinkBudget& budget, SnrModel model,
                                    DbmPower ptx);

// Same integral restricted to the traversal-time window [t0, t1].
double data_integral_constant_power_window(const NetworkGeometry& geo,
                                           const LinkBudget& budget,
                                           SnrModel model, DbmPower ptx,
                                           double t0_s, double t1_s);

}  // namespace railbeam

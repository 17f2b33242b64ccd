#pragma once
// Behavior of the closed-form allocation as the segment count grows: the
// dimensionless constants of the half cell, the finite energy ladder, its
// three partial sums, and the large-N energy expression in three variants
// (closed form, the uncorrected printed form, and a direct quadrature of the
// limiting power profile). Everything here lives in paper-literal mode.

#include "railbeam/geometry.hpp"
#include "railbeam/link.hpp"

namespace railbeam {

// Dimensionless constants of the half cell.
//   h: aspect ratio dl / (2 d0), which the segment widths sum to exactly.
//   k_rad: full beam sweep arctan(h) in radians.
//   q: speed-invariant data requirement v * d_fixed / d0.
//   m_db: distance-independent dB gain 2 G0 - W.
struct LimitConstants {
  double h = 0.0;
  double k_rad = 0.0;
  double q = 0.0;
  double m_db = 0.0;
};

LimitConstants limit_constants(const NetworkGeometry& geo,
                               const LinkBudget& budget, double d_fixed);

// The three partial sums of the half-cell energy, taken over the segment
// widths phi_i = widths / d0:
//   rate_growth: sum phi_i 2^(q / (phi_i n))
//   offset:      sum phi_i (noise + m + 10 n log10(lambda / 4 pi))
//   distance:    sum phi_i 10 n log10(midpoint distance)
// The energy ladder recombines them as
//   E(n) = (d0 / v) (noise * rate_growth - offset + distance).
struct PartialSums {
  double rate_growth = 0.0;
  double offset = 0.0;
  double distance = 0.0;
};

PartialSums energy_partial_sums(const NetworkGeometry& geo,
                                const LinkBudget& budget, double d_fixed,
                                int segment_count, SnrModel mode);

// The closed-form stand-ins the limit expression substitutes for the three
// partial sums: h + k (2^(q/k) - 1) for rate_growth, the offset sum itself
// (already independent of the segment count), and 10 n h log10(d0) for
// distance. The first and third are not the true limits of the sums; see
// limit_energy_quadrature for the profile they actually approach.
PartialSums energy_partial_limits(const NetworkGeometry& geo,
                                  const LinkBudget& budget, double d_fixed,
                                  SnrModel mode);

// Energy of the closed-form allocation run with segment_count segments,
// holding d_fixed constant. Decreases monotonically in the segment count.
double finite_energy_sum(const NetworkGeometry& geo, const LinkBudget& budget,
                         double d_fixed, int segment_count, SnrModel mode);

// Large-N energy assembled from the stand-in sums, with the distance term
// corrected to 10 n h log10(4 pi d0 / lambda):
//   (d0 / v) [ h (10 n log10(4 pi d0 / lambda) - m) + k noise (2^(q/k) - 1) ]
double limit_energy(const NetworkGeometry& geo, const LinkBudget& budget,
                    double d_fixed, SnrModel mode);

// The same expression with the logarithm dropped from the distance term,
// i.e. 10 n h (4 pi d0 / lambda) - m h, reproducing the uncorrected
// algebraic form. Orders of magnitude above limit_energy.
double limit_energy_as_printed(const NetworkGeometry& geo,
                               const LinkBudget& budget, double d_fixed,
                               SnrModel mode);

// True limit of the energy ladder: adaptive quadrature of the limiting
// power profile over the half cell, (1/v) integral of limit_power at every
// track position. finite_energy_sum converges here, not to limit_energy.
double limit_energy_quadrature(const NetworkGeometry& geo,
                               const LinkBudget& budget, double d_fixed,
                               SnrModel mode);

// Limiting per-position rate at track position x in [0, dl/2] measured from
// cell entry: q cos^2(u) / k with tan(u) = (dl/2 - x) / d0.
double limit_rate_at(const NetworkGeometry& geo, double d_fixed, double x_m);

// Limiting transmit power (dBm) at track position x: the closed-form
// allocation evaluated on the limiting rate profile.
double limit_power_dbm_at(const NetworkGeometry& geo, const LinkBudget& budget,
                          double d_fixed, double x_m);

}  // namespace railbeam

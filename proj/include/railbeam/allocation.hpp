#pragma once
// Per-segment transmit-power allocation and the energy bookkeeping of the
// comparison schemes. Energy units follow the SNR convention: dwell-weighted
// dBm values ("dBm-seconds") in the paper-literal mode, joules in the
// physical mode.

#include <vector>

#include "railbeam/geometry.hpp"
#include "railbeam/link.hpp"
#include "railbeam/traffic.hpp"

namespace railbeam {

// Fixed scheme order; also the emission order in CSV output.
enum class Scheme { kMctp, kOtpa, kMtpa, kOtpaInf, kOracle };

const char* to_string(Scheme scheme);

struct PowerAllocation {
  std::vector<double> powers_dbm;  // -infinity marks a switched-off segment
  Scheme scheme = Scheme::kOtpa;
  SnrModel mode = SnrModel::kPaperLiteral;
  // Paper-literal entries below 0 dBm, flagged rather than clamped: they
  // mark the operating region where the dB-quotient model breaks down.
  int negative_power_warnings = 0;
};

// Dwell times a_i, per-segment SNR offsets c_i, and the common SNR slope g
// of the linearized rate constraint rate_i = log2(1 + c_i + g p_i).
// Paper-literal only: c and g divide dB-domain terms by the dBm noise value.
struct RateCoefficients {
  std::vector<double> dwell_s;     // a_i
  std::vector<double> snr_offset;  // c_i
  double snr_slope = 0.0;          // g, the reciprocal of the noise level
};

RateCoefficients coefficients(const SegmentPlan& plan, const LinkBudget& budget,
                              SnrModel mode);

// Closed-form allocation: every segment carries d_fixed / N data under the
// midpoint rule, so the dwell-weighted constraint closes exactly. This is
// the equal-data feasible point, not the cost optimum; allocate_oracle
// quantifies the gap in physical mode.
PowerAllocation allocate_closed_form(const SegmentPlan& plan,
                                     const LinkBudget& budget, double d_fixed,
                                     SnrModel mode);

// Water-filling optimum of: minimize sum a_i p_i (watts) subject to
// sum a_i log2(1 + snr_i(p_i)) >= d_fixed with p_i >= 0, solved by bisection
// on the Lagrange multiplier. Physical mode only.
PowerAllocation allocate_oracle(const SegmentPlan& plan, const LinkBudget& budget,
                                double d_fixed, SnrModel mode);

// Half-cell energy of an allocation under its mode's bookkeeping.
double energy_of(const SegmentPlan& plan, const PowerAllocation& alloc);

struct OperatingPoint {
  double inter_bs_m = 0.0;
  double train_speed_mps = 0.0;
  double p_ref_dbm = 0.0;
  int segment_count = 0;
};

struct SchemeResult {
  Scheme scheme = Scheme::kMctp;
  SnrModel mode = SnrModel::kPaperLiteral;
  double energy = 0.0;             // dBm-seconds or joules, by mode
  double data = 0.0;               // rate-seconds
  double energy_efficiency = 0.0;  // data / energy, 0 when energy is 0
  OperatingPoint operating_point;
  int warnings = 0;                // negative-power flags plus residual clamps
};

// Piecewise-constant transmit timetable: window i spans
// [boundaries_s[i], boundaries_s[i+1]) at powers_dbm[i]. Off windows carry
// -infinity. Empty for the infinite-segment scheme, whose power profile is
// continuous.
struct TransmitPlan {
  std::vector<double> boundaries_s;
  std::vector<double> powers_dbm;
};

struct SchemeEvaluation {
  SchemeResult result;
  TransmitPlan plan;
};

// Evaluates one scheme at one operating point. Throws std::invalid_argument
// for scheme/mode pairs that have no meaning (the water-filling oracle in
// paper-literal mode, the infinite-segment limit in physical mode).
SchemeEvaluation evaluate_scheme(Scheme scheme, const NetworkGeometry& geo,
                                 const LinkBudget& budget, SnrModel mode,
                                 DbmPower p_ref);

// Constant reference power across the half cell; data by exact integral.
// Defines the data floor the optimized schemes must meet.
SchemeResult scheme_mctp(const NetworkGeometry& geo, const LinkBudget& budget,
                         SnrModel mode, DbmPower p_const);

// Closed-form allocation meeting the constant-power data floor.
SchemeResult scheme_otpa(const NetworkGeometry& geo, const LinkBudget& budget,
                         SnrModel mode, DbmPower p_ref);

// Constant power over the first quarter of the cell, closed-form allocation
// of the residual data requirement over a fresh segment ladder covering the
// second quarter. If the first quarter alone over-delivers, the second
// quarter transmitter is off and the clamp is flagged.
SchemeResult scheme_mtpa(const NetworkGeometry& geo, const LinkBudget& budget,
                         SnrModel mode, DbmPower p_const);

// Closed-form allocation in the infinite-segment limit (paper-literal only).
SchemeResult scheme_otpa_inf(const NetworkGeometry& geo, const LinkBudget& budget,
                             SnrModel mode, DbmPower p_ref);

// Water-filling optimum meeting the same data floor (physical only).
SchemeResult scheme_oracle(const NetworkGeometry& geo, const LinkBudget& budget,
                           SnrModel mode, DbmPower p_ref);

}  // namespace railbeam

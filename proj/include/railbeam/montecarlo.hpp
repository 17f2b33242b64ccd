#pragma once
// Monte Carlo study of velocity estimation error: every scheme plans its
// transmit timetable against an estimated speed, the train traverses the
// cell at the true speed, and the delivered data is re-integrated over the
// planned windows at the true positions. Energy is what the plan committed
// to; only the data (and so the efficiency) feels the error.

#include <cstdint>
#include <span>
#include <vector>

#include "railbeam/allocation.hpp"
#include "railbeam/geometry.hpp"
#include "railbeam/link.hpp"

namespace railbeam {

struct VelocityErrorModel {
  double sigma_mps = 0.0;     // standard deviation of the speed estimate
  std::uint64_t seed = 1;
  int trials = 1;

  // Throws std::invalid_argument when a field is outside its domain.
  void validate() const;
};

struct VelocitySample {
  double v_hat_mps = 0.0;
  int resamples = 0;  // draws discarded because the estimate was not positive
};

// The speed estimate for one trial: true speed plus centered Gaussian noise,
// redrawn while non-positive. Throws std::runtime_error when 64 consecutive
// draws fail. Identical (model, true speed, trial) always yields the same
// sample, independent of threading or evaluation order.
VelocitySample sample_velocity(const VelocityErrorModel& model,
                               double true_speed_mps, int trial_index);

struct SchemeSample {
  Scheme scheme = Scheme::kMctp;
  double planned_energy = 0.0;
  double realized_data = 0.0;
  double energy_efficiency = 0.0;  // realized data per planned energy
  int warnings = 0;
};

struct TrialResult {
  int trial_index = 0;
  double v_hat_mps = 0.0;
  int resamples = 0;
  std::vector<SchemeSample> schemes;
};

// Runs one trial: draws the speed estimate, plans every scheme against it,
// then integrates the delivered data over the planned windows at the true
// speed. All schemes in the trial share the same estimate.
TrialResult trial_evaluate(const NetworkGeometry& geo, const LinkBudget& budget,
                           SnrModel mode, DbmPower p_ref,
                           std::span<const Scheme> schemes,
                           const VelocityErrorModel& model, int trial_index);

struct Aggregate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single trial
  double ci95_low = 0.0;
  double ci95_high = 0.0;
};

struct SchemeStats {
  Scheme scheme = Scheme::kMctp;
  Aggregate energy;
  Aggregate data;
  Aggregate energy_efficiency;
  int flagged_trials = 0;  // trials with scheme warnings or discarded draws
  long long warnings_total = 0;
};

struct MonteCarloSummary {
  std::vector<SchemeStats> schemes;
  int trials = 0;
};

// Runs the full study. Trials are distributed over the given number of
// worker threads; the aggregation always reduces per-trial values in trial
// order with pairwise summation, so the summary is bit-identical for any
// thread count.
MonteCarloSummary run_montecarlo(const NetworkGeometry& geo,
                                 const LinkBudget& budget, SnrModel mode,
                                 DbmPower p_ref, std::span<const Scheme> schemes,
                                 const VelocityErrorModel& model, int threads);

}  // namespace railbeam

#include "railbeam/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "railbeam/asymptotic.hpp"
#include "railbeam/quadrature.hpp"
#include "railbeam/rng.hpp"
#include "railbeam/traffic.hpp"

namespace railbeam {

namespace {

constexpr double kZ95 = 1.959963984540054;

// Pairwise reduction in index order: the result depends only on the values,
// never on which thread produced them.
double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() == 1) return values[0];
  if (values.size() == 2) return values[0] + values[1];
  std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Aggregate aggregate_of(std::span<const double> values) {
  Aggregate agg;
  std::size_t n = values.size();
  agg.mean = pairwise_sum(values) / static_cast<double>(n);
  if (n > 1) {
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
      double dev = values[i] - agg.mean;
      sq[i] = dev * dev;
    }
    agg.stddev = std::sqrt(pairwise_sum(sq) / static_cast<double>(n - 1));
  }
  double half_width = kZ95 * agg.stddev / std::sqrt(static_cast<double>(n));
  agg.ci95_low = agg.mean - half_width;
  agg.ci95_high = agg.mean + half_width;
  return agg;
}

// Data delivered when the timetable planned against the estimated speed is
// executed while the train moves at the true speed.
double realized_data(const NetworkGeometry& true_geo, const LinkBudget& budget,
                     SnrModel mode, const SchemeEvaluation& planned,
                     const NetworkGeometry& planned_geo, DbmPower p_ref) {
  if (planned.result.scheme == Scheme::kOtpaInf) {
    // Continuous profile: the power the plan emits at time t is the profile
    // value at the position the plan believes the train occupies.
    double d_hat = data_integral_constant_power(planned_geo, budget, mode, p_ref);
    double t_end = planned_geo.inter_bs_m / (2.0 * planned_geo.train_speed_mps);
    auto rate_at = [&](double t) {
      double planned_position = std::clamp(planned_geo.train_speed_mps * t, 0.0,
                                           planned_geo.inter_bs_m / 2.0);
      double p = limit_power_dbm_at(planned_geo, budget, d_hat, planned_position);
      double true_distance = distance_at_time(true_geo, t);
      return rate(snr(budget, mode, DbmPower{p}, true_distance));
    };
    return integrate(rate_at, 0.0, t_end);
  }

  double total = 0.0;
  for (std::size_t w = 0; w < planned.plan.powers_dbm.size(); ++w) {
    double p = planned.plan.powers_dbm[w];
    if (std::isinf(p) && p < 0.0) continue;
    total += data_integral_constant_power_window(
        true_geo, budget, mode, DbmPower{p}, planned.plan.boundaries_s[w],
        planned.plan.boundaries_s[w + 1]);
  }
  return total;
}

}  // namespace

void VelocityErrorModel::validate() const {
  if (!(sigma_mps >= 0.0))
    throw std::invalid_argument("velocity error: sigma must be non-negative");
  if (trials < 1)
    throw std::invalid_argument("velocity error: at least one trial");
}

VelocitySample sample_velocity(const VelocityErrorModel& model,
                               double true_speed_mps, int trial_index) {
  model.validate();
  if (!(true_speed_mps > 0.0))
    throw std::invalid_argument("velocity error: true speed must be positive");
  CounterRng rng(model.seed, static_cast<std::uint64_t>(trial_index));
  VelocitySample sample;
  for (int attempt = 0; attempt < 64; ++attempt) {
    sample.v_hat_mps = true_speed_mps + model.sigma_mps * rng.next_gaussian();
    if (sample.v_hat_mps > 0.0) return sample;
    ++sample.resamples;
  }
  throw std::runtime_error(
      "velocity error: 64 consecutive non-positive speed estimates");
}

TrialResult trial_evaluate(const NetworkGeometry& geo, const LinkBudget& budget,
                           SnrModel mode, DbmPower p_ref,
                           std::span<const Scheme> schemes,
                           const VelocityErrorModel& model, int trial_index) {
  VelocitySample sample = sample_velocity(model, geo.train_speed_mps, trial_index);
  NetworkGeometry planned_geo = geo;
  planned_geo.train_speed_mps = sample.v_hat_mps;

  TrialResult trial;
  trial.trial_index = trial_index;
  trial.v_hat_mps = sample.v_hat_mps;
  trial.resamples = sample.resamples;
  trial.schemes.reserve(schemes.size());
  for (Scheme scheme : schemes) {
    SchemeEvaluation planned =
        evaluate_scheme(scheme, planned_geo, budget, mode, p_ref);
    SchemeSample out;
    out.scheme = scheme;
    out.planned_energy = planned.result.energy;
    out.realized_data =
        realized_data(geo, budget, mode, planned, planned_geo, p_ref);
    out.energy_efficiency =
        out.planned_energy != 0.0 ? out.realized_data / out.planned_energy : 0.0;
    out.warnings = planned.result.warnings;
    trial.schemes.push_back(out);
  }
  return trial;
}

MonteCarloSummary run_montecarlo(const NetworkGeometry& geo,
                                 const LinkBudget& budget, SnrModel mode,
                                 DbmPower p_ref, std::span<const Scheme> schemes,
                                 const VelocityErrorModel& model, int threads) {
  model.validate();
  geo.validate();
  budget.validate();
  if (threads < 1)
    throw std::invalid_argument("montecarlo: at least one worker thread");

  const int trials = model.trials;
  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;

  auto worker = [&]() {
    for (;;) {
      int trial = next.fetch_add(1);
      if (trial >= trials) return;
      try {
        results[static_cast<std::size_t>(trial)] =
            trial_evaluate(geo, budget, mode, p_ref, schemes, model, trial);
      } catch (...) {
        std::lock_guard<std::mutex> hold(failure_lock);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  int workers = std::min(threads, trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  MonteCarloSummary summary;
  summary.trials = trials;
  summary.schemes.reserve(schemes.size());
  std::vector<double> energy(static_cast<std::size_t>(trials));
  std::vector<double> data(static_cast<std::size_t>(trials));
  std::vector<double> efficiency(static_cast<std::size_t>(trials));
  for (std::size_t s = 0; s < schemes.size(); ++s) {
    SchemeStats stats;
    stats.scheme = schemes[s];
    for (std::size_t t = 0; t < results.size(); ++t) {
      const SchemeSample& sample = results[t].schemes[s];
      energy[t] = sample.planned_energy;
      data[t] = sample.realized_data;
      efficiency[t] = sample.energy_efficiency;
      if (sample.warnings > 0 || results[t].resamples > 0) ++stats.flagged_trials;
      stats.warnings_total += sample.warnings;
    }
    stats.energy = aggregate_of(energy);
    stats.data = aggregate_of(data);
    stats.energy_efficiency = aggregate_of(efficiency);
    summary.schemes.push_back(stats);
  }
  return summary;
}

}  // namespace railbeam

#include "railbeam/runner.hpp"

#include <cmath>
#include <exception>
#include <vector>

#include "railbeam/asymptotic.hpp"
#include "railbeam/montecarlo.hpp"
#include "railbeam/textio.hpp"
#include "railbeam/traffic.hpp"

namespace railbeam {

namespace {

struct SweepPoint {
  std::string variable;
  double value = 0.0;
  NetworkGeometry geometry;
};

std::vector<SweepPoint> sweep_points(const RunConfig& config) {
  std::vector<SweepPoint> points;
  if (!config.sweep) {
    points.push_back({"dl", config.geometry.inter_bs_m, config.geometry});
    return points;
  }
  const SweepSpec& spec = *config.sweep;
  double slack = spec.step * 1e-9;
  for (double value = spec.start; value <= spec.stop + slack;
       value += spec.step) {
    SweepPoint point;
    point.variable = spec.variable;
    point.value = value;
    point.geometry = config.geometry;
    if (spec.variable == "dl")
      point.geometry.inter_bs_m = value;
    else if (spec.variable == "v")
      point.geometry.train_speed_mps = value;
    else
      point.geometry.segment_count = static_cast<int>(std::llround(value));
    points.push_back(point);
  }
  return points;
}

std::string mode_name(SnrModel mode) { return to_string(mode); }

}  // namespace

RunOutput run_sweep(const RunConfig& config) {
  config.validate();
  LinkBudget budget = config.budget();
  RunOutput out;
  const std::vector<std::string> header{
      "sweep_var", "value",  "scheme", "mode",
      "N",         "P_ref_dbm", "energy", "data",
      "energy_efficiency", "warnings_count", "error"};
  out.text += csv_row(header);

  for (const SweepPoint& point : sweep_points(config)) {
    for (double p_ref : config.p_ref_dbm) {
      for (Scheme scheme : config.schemes) {
        std::vector<std::string> row{
            point.variable,
            format_double(point.value),
            to_string(scheme),
            mode_name(config.mode),
            std::to_string(point.geometry.segment_count),
            format_double(p_ref)};
        try {
          SchemeResult result = evaluate_scheme(scheme, point.geometry, budget,
                                                config.mode, DbmPower{p_ref})
                                    .result;
          row.push_back(format_double(result.energy));
          row.push_back(format_double(result.data));
          row.push_back(format_double(result.energy_efficiency));
          row.push_back(std::to_string(result.warnings));
          row.push_back("");
        } catch (const std::exception& err) {
          row.insert(row.end(), {"", "", "", ""});
          row.push_back(err.what());
          ++out.error_rows;
        }
        out.text += csv_row(row);
      }
    }
  }
  return out;
}

RunOutput run_montecarlo_cmd(const RunConfig& config) {
  config.validate();
  LinkBudget budget = config.budget();
  RunOutput out;
  const std::vector<std::string> header{
      "sweep_var",      "value",          "scheme",        "mode",
      "N",              "P_ref_dbm",      "sigma_v",       "trials",
      "seed",           "energy_mean",    "energy_std",    "energy_ci95_low",
      "energy_ci95_high", "data_mean",    "data_std",      "data_ci95_low",
      "data_ci95_high", "ee_mean",        "ee_std",        "ee_ci95_low",
      "ee_ci95_high",   "flagged_trials", "warnings_count", "error"};
  out.text += csv_row(header);

  VelocityErrorModel model;
  model.sigma_mps = config.sigma_v_mps;
  model.seed = config.seed;
  model.trials = config.trials;

  for (const SweepPoint& point : sweep_points(config)) {
    for (double p_ref : config.p_ref_dbm) {
      // Schemes that are meaningless in this mode become error rows; the
      // remaining set runs as one study so every scheme shares the same
      // velocity draws.
      std::vector<Scheme> runnable;
      std::vector<std::pair<Scheme, std::string>> rejected;
      for (Scheme scheme : config.schemes) {
        try {
          evaluate_scheme(scheme, point.geometry, budget, config.mode,
                          DbmPower{p_ref});
          runnable.push_back(scheme);
        } catch (const std::exception& err) {
          rejected.emplace_back(scheme, err.what());
        }
      }

      MonteCarloSummary summary;
      std::string study_error;
      if (!runnable.empty()) {
        try {
          summary = run_montecarlo(point.geometry, budget, config.mode,
                                   DbmPower{p_ref}, runnable, model,
                                   config.threads);
        } catch (const std::exception& err) {
          study_error = err.what();
        }
      }

      for (Scheme scheme : config.schemes) {
        std::vector<std::string> row{
            point.variable,
            format_double(point.value),
            to_string(scheme),
            mode_name(config.mode),
            std::to_string(point.geometry.segment_count),
            format_double(p_ref),
            format_double(config.sigma_v_mps),
            std::to_string(config.trials),
            std::to_string(config.seed)};
        std::string error;
        const SchemeStats* stats = nullptr;
        for (std::size_t s = 0; s < runnable.size(); ++s)
          if (runnable[s] == scheme) stats = &summary.schemes[s];
        for (const auto& [bad, message] : rejected)
          if (bad == scheme) error = message;
        if (!study_error.empty() && error.empty()) error = study_error;

        if (stats != nullptr && error.empty()) {
          for (const Aggregate* agg :
               {&stats->energy, &stats->data, &stats->energy_efficiency}) {
            row.push_back(format_double(agg->mean));
            row.push_back(format_double(agg->stddev));
            row.push_back(format_double(agg->ci95_low));
            row.push_back(format_double(agg->ci95_high));
          }
          row.push_back(std::to_string(stats->flagged_trials));
          row.push_back(std::to_string(stats->warnings_total));
          row.push_back("");
        } else {
          for (int i = 0; i < 14; ++i) row.push_back("");
          row.push_back(error);
          ++out.error_rows;
        }
        out.text += csv_row(row);
      }
    }
  }
  return out;
}

RunOutput run_limit_cmd(const RunConfig& config) {
  config.validate();
  if (config.mode != SnrModel::kPaperLiteral)
    throw ConfigError(
        "limit: the large-segment-count limit is defined in paper-literal "
        "mode only");
  LinkBudget budget = config.budget();
  const NetworkGeometry& geo = config.geometry;
  double p_ref = config.p_ref_dbm.front();
  double d_fixed =
      data_integral_constant_power(geo, budget, config.mode, DbmPower{p_ref});
  LimitConstants lc = limit_constants(geo, budget, d_fixed);

  RunOutput out;
  std::string& text = out.text;
  text += "half-cell limit report\n";
  text += "  d0 = " + format_double(geo.bs_track_offset_m) + " m\n";
  text += "  dl = " + format_double(geo.inter_bs_m) + " m\n";
  text += "  v = " + format_double(geo.train_speed_mps) + " m/s\n";
  text += "  reference power = " + format_double(p_ref) + " dBm\n";
  text += "  d_fixed = " + format_double(d_fixed) + " rate-seconds\n";
  text += "  h = " + format_double(lc.h) + "\n";
  text += "  k = " + format_double(lc.k_rad) + " rad\n";
  text += "  q = " + format_double(lc.q) + "\n";
  text += "  m = " + format_double(lc.m_db) + " dB\n";
  double closed = limit_energy(geo, budget, d_fixed, config.mode);
  double quad = limit_energy_quadrature(geo, budget, d_fixed, config.mode);
  text += "  closed-form limit energy = " + format_double(closed) +
          " dBm-seconds\n";
  text += "  profile quadrature energy = " + format_double(quad) +
          " dBm-seconds\n";
  if (config.eq40_as_printed) {
    double printed =
        limit_energy_as_printed(geo, budget, d_fixed, config.mode);
    text += "  derived vs printed:\n";
    text += "    derived (log10 distance term) = " + format_double(closed) +
            " dBm-seconds\n";
    text += "    printed (logarithm dropped)   = " + format_double(printed) +
            " dBm-seconds\n";
  }
  text += "  finite-segment energies:\n";
  for (int n = 2; n <= 2048; n *= 2) {
    text += "    N=" + std::to_string(n) + " -> " +
            format_double(finite_energy_sum(geo, budget, d_fixed, n,
                                            config.mode)) +
            "\n";
  }
  return out;
}

RunOutput run_allocate_cmd(const RunConfig& config) {
  config.validate();
  LinkBudget budget = config.budget();
  const NetworkGeometry& geo = config.geometry;
  double p_ref = config.p_ref_dbm.front();
  double d_fixed =
      data_integral_constant_power(geo, budget, config.mode, DbmPower{p_ref});
  SegmentPlan plan = segment_plan(geo);
  PowerAllocation alloc =
      allocate_closed_form(plan, budget, d_fixed, config.mode);
  double delivered =
      data_total_midpoint(plan, budget, config.mode, alloc.powers_dbm);
  double residual =
      d_fixed != 0.0 ? std::fabs(delivered - d_fixed) / d_fixed : 0.0;

  RunOutput out;
  std::string& text = out.text;
  text += "per-segment allocation report\n";
  text += "  mode = " + std::string(to_string(config.mode)) + "\n";
  text += "  N = " + std::to_string(geo.segment_count) + "\n";
  text += "  reference power = " + format_double(p_ref) + " dBm\n";
  text += "  d_fixed = " + format_double(d_fixed) + " rate-seconds\n";
  text += "  i, width_m, midpoint_m, dwell_s, power_dbm\n";
  for (int i = 0; i < plan.count(); ++i) {
    std::size_t idx = static_cast<std::size_t>(i);
    text += "  " + std::to_string(i + 1) + ", " +
            format_double(plan.widths_m[idx]) + ", " +
            format_double(plan.midpoint_distances_m[idx]) + ", " +
            format_double(plan.dwell_times_s[idx]) + ", " +
            format_double(alloc.powers_dbm[idx]) + "\n";
  }
  text += "  constraint residual = " + format_double(residual) +
          " relative\n";
  text += "  negative-power warnings = " +
          std::to_string(alloc.negative_power_warnings) + "\n";
  return out;
}

}  // namespace railbeam

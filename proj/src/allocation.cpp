#include "railbeam/allocation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "railbeam/asymptotic.hpp"

namespace railbeam {

namespace {

constexpr double kOff = -std::numeric_limits<double>::infinity();

bool is_off(double power_dbm) { return std::isinf(power_dbm) && power_dbm < 0.0; }

// Distance-dependent dB terms of the receive power with the transmit power
// excluded: 2 G0 - W + 10 n log10(lambda / (4 pi d)).
double fixed_link_gain_db(const LinkBudget& budget, double distance_m) {
  return rx_power_dbm(budget, DbmPower{0.0}, distance_m).value;
}

// Linear SNR per watt of transmit power at the given distance.
double snr_per_watt(const LinkBudget& budget, double distance_m) {
  double noise = noise_power_dbm(budget).value;
  return std::pow(10.0, (30.0 + fixed_link_gain_db(budget, distance_m) - noise) / 10.0);
}

double finish(SchemeResult& r) {
  r.energy_efficiency = r.energy != 0.0 ? r.data / r.energy : 0.0;
  return r.energy_efficiency;
}

OperatingPoint point_of(const NetworkGeometry& geo, DbmPower p_ref) {
  return {geo.inter_bs_m, geo.train_speed_mps, p_ref.value, geo.segment_count};
}

}  // namespace

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kMctp: return "MCTP";
    case Scheme::kOtpa: return "OTPA";
    case Scheme::kMtpa: return "MTPA";
    case Scheme::kOtpaInf: return "OTPA_INF";
    case Scheme::kOracle: return "ORACLE";
  }
  return "?";
}

RateCoefficients coefficients(const SegmentPlan& plan, const LinkBudget& budget,
                              SnrModel mode) {
  if (mode != SnrModel::kPaperLiteral)
    throw std::invalid_argument(
        "coefficients: the linearized rate constraint exists only in "
        "paper-literal mode");
  double noise = noise_power_dbm(budget).value;
  if (noise == 0.0)
    throw std::domain_error("coefficients: zero noise level");
  RateCoefficients coef;
  coef.dwell_s = plan.dwell_times_s;
  coef.snr_slope = 1.0 / noise;
  coef.snr_offset.reserve(plan.midpoint_distances_m.size());
  for (double d : plan.midpoint_distances_m)
    coef.snr_offset.push_back(fixed_link_gain_db(budget, d) / noise);
  return coef;
}

PowerAllocation allocate_closed_form(const SegmentPlan& plan,
                                     const LinkBudget& budget, double d_fixed,
                                     SnrModel mode) {
  if (!(d_fixed >= 0.0))
    throw std::invalid_argument("allocate: data requirement must be non-negative");
  const int n = plan.count();
  PowerAllocation alloc;
  alloc.scheme = Scheme::kOtpa;
  alloc.mode = mode;
  alloc.powers_dbm.reserve(static_cast<std::size_t>(n));

  if (mode == SnrModel::kPaperLiteral) {
    RateCoefficients coef = coefficients(plan, budget, mode);
    for (int i = 0; i < n; ++i) {
      double target_rate = d_fixed / (coef.dwell_s[static_cast<std::size_t>(i)] * n);
      double p = (std::exp2(target_rate) - 1.0 -
                  coef.snr_offset[static_cast<std::size_t>(i)]) /
                 coef.snr_slope;
      if (p < 0.0) ++alloc.negative_power_warnings;
      alloc.powers_dbm.push_back(p);
    }
    return alloc;
  }

  double noise = noise_power_dbm(budget).value;
  for (int i = 0; i < n; ++i) {
    double target_rate =
        d_fixed / (plan.dwell_times_s[static_cast<std::size_t>(i)] * n);
    double target_snr = std::exp2(target_rate) - 1.0;
    if (target_snr <= 0.0) {
      alloc.powers_dbm.push_back(kOff);
      continue;
    }
    double d = plan.midpoint_distances_m[static_cast<std::size_t>(i)];
    alloc.powers_dbm.push_back(noise + 10.0 * std::log10(target_snr) -
                               fixed_link_gain_db(budget, d));
  }
  return alloc;
}

PowerAllocation allocate_oracle(const SegmentPlan& plan, const LinkBudget& budget,
                                double d_fixed, SnrModel mode) {
  if (mode != SnrModel::kPhysical)
    throw std::invalid_argument(
        "allocate_oracle: the water-filling program is defined in physical "
        "mode only");
  if (!(d_fixed >= 0.0))
    throw std::invalid_argument("allocate: data requirement must be non-negative");

  const std::size_t n = plan.widths_m.size();
  PowerAllocation alloc;
  alloc.scheme = Scheme::kOracle;
  alloc.mode = mode;
  alloc.powers_dbm.assign(n, kOff);
  if (d_fixed == 0.0) return alloc;

  std::vector<double> gamma(n);
  for (std::size_t i = 0; i < n; ++i)
    gamma[i] = snr_per_watt(budget, plan.midpoint_distances_m[i]);

  // Water level mu: segment i transmits p_i = max(0, mu - 1/gamma_i) watts,
  // so its rate is log2(max(1, mu gamma_i)) and delivered data is monotone
  // increasing in mu.
  auto data_at = [&](double mu) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double lifted = mu * gamma[i];
      if (lifted > 1.0) total += plan.dwell_times_s[i] * std::log2(lifted);
    }
    return total;
  };

  double lo = 0.0;
  double hi = 1.0;
  for (int growth = 0; growth < 1024 && data_at(hi) < d_fixed; ++growth) hi *= 2.0;
  if (data_at(hi) < d_fixed)
    throw std::runtime_error("allocate_oracle: failed to bracket the water level");

  double mu = hi;
  bool converged = false;
  for (int iter = 0; iter < 200; ++iter) {
    mu = 0.5 * (lo + hi);
    double delivered = data_at(mu);
    if (std::fabs(delivered - d_fixed) <= 1e-12 * d_fixed) {
      converged = true;
      break;
    }
    (delivered < d_fixed ? lo : hi) = mu;
    if (hi - lo <= 1e-16 * hi) {
      mu = 0.5 * (lo + hi);
      converged = std::fabs(data_at(mu) - d_fixed) <= 1e-9 * d_fixed;
      break;
    }
  }
  if (!converged &&
      !(std::fabs(data_at(mu) - d_fixed) <= 1e-9 * d_fixed))
    throw std::runtime_error("allocate_oracle: bisection did not converge");

  for (std::size_t i = 0; i < n; ++i) {
    double p_watts = mu - 1.0 / gamma[i];
    alloc.powers_dbm[i] = p_watts > 0.0 ? to_dbm(Watts{p_watts}).value : kOff;
  }
  return alloc;
}

double energy_of(const SegmentPlan& plan, const PowerAllocation& alloc) {
  if (alloc.powers_dbm.size() != plan.dwell_times_s.size())
    throw std::invalid_argument("energy_of: allocation does not match the plan");
  double total = 0.0;
  for (std::size_t i = 0; i < alloc.powers_dbm.size(); ++i) {
    double p = alloc.powers_dbm[i];
    if (is_off(p)) continue;
    if (alloc.mode == SnrModel::kPaperLiteral)
      total += plan.dwell_times_s[i] * p;
    else
      total += plan.dwell_times_s[i] * to_watts(DbmPower{p}).value;
  }
  return total;
}

SchemeResult scheme_mctp(const NetworkGeometry& geo, const LinkBudget& budget,
                         SnrModel mode, DbmPower p_const) {
  return evaluate_scheme(Scheme::kMctp, geo, budget, mode, p_const).result;
}

SchemeResult scheme_otpa(const NetworkGeometry& geo, const LinkBudget& budget,
                         SnrModel mode, DbmPower p_ref) {
  return evaluate_scheme(Scheme::kOtpa, geo, budget, mode, p_ref).result;
}

SchemeResult scheme_mtpa(const NetworkGeometry& geo, const LinkBudget& budget,
                         SnrModel mode, DbmPower p_const) {
  return evaluate_scheme(Scheme::kMtpa, geo, budget, mode, p_const).result;
}

SchemeResult scheme_otpa_inf(const NetworkGeometry& geo, const LinkBudget& budget,
                             SnrModel mode, DbmPower p_ref) {
  return evaluate_scheme(Scheme::kOtpaInf, geo, budget, mode, p_ref).result;
}

SchemeResult scheme_oracle(const NetworkGeometry& geo, const LinkBudget& budget,
                           SnrModel mode, DbmPower p_ref) {
  return evaluate_scheme(Scheme::kOracle, geo, budget, mode, p_ref).result;
}

namespace {

SchemeEvaluation evaluate_mctp(const NetworkGeometry& geo, const LinkBudget& budget,
                               SnrModel mode, DbmPower p_const) {
  SchemeEvaluation ev;
  double t_end = geo.inter_bs_m / (2.0 * geo.train_speed_mps);
  ev.result.scheme = Scheme::kMctp;
  ev.result.mode = mode;
  ev.result.operating_point = point_of(geo, p_const);
  ev.result.energy = mode == SnrModel::kPaperLiteral
                         ? p_const.value * t_end
                         : to_watts(p_const).value * t_end;
  ev.result.data = data_integral_constant_power(geo, budget, mode, p_const);
  finish(ev.result);
  ev.plan.boundaries_s = {0.0, t_end};
  ev.plan.powers_dbm = {p_const.value};
  return ev;
}

SchemeEvaluation evaluate_otpa(const NetworkGeometry& geo, const LinkBudget& budget,
                               SnrModel mode, DbmPower p_ref) {
  SchemeEvaluation ev;
  SegmentPlan plan = segment_plan(geo);
  double d_fixed = data_integral_constant_power(geo, budget, mode, p_ref);
  PowerAllocation alloc = allocate_closed_form(plan, budget, d_fixed, mode);
  ev.result.scheme = Scheme::kOtpa;
  ev.result.mode = mode;
  ev.result.operating_point = point_of(geo, p_ref);
  ev.result.energy = energy_of(plan, alloc);
  ev.result.data = data_total_midpoint(plan, budget, mode, alloc.powers_dbm);
  ev.result.warnings = alloc.negative_power_warnings;
  finish(ev.result);
  ev.plan.boundaries_s.push_back(0.0);
  double t = 0.0;
  for (double dwell : plan.dwell_times_s) {
    t += dwell;
    ev.plan.boundaries_s.push_back(t);
  }
  ev.plan.powers_dbm = alloc.powers_dbm;
  return ev;
}

SchemeEvaluation evaluate_mtpa(const NetworkGeometry& geo, const LinkBudget& budget,
                               SnrModel mode, DbmPower p_const) {
  SchemeEvaluation ev;
  ev.result.scheme = Scheme::kMtpa;
  ev.result.mode = mode;
  ev.result.operating_point = point_of(geo, p_const);

  double t_quarter = geo.inter_bs_m / (4.0 * geo.train_speed_mps);
  double t_end = geo.inter_bs_m / (2.0 * geo.train_speed_mps);
  double d_fixed = data_integral_constant_power(geo, budget, mode, p_const);
  double first_data = data_integral_constant_power_window(geo, budget, mode,
                                                          p_const, 0.0, t_quarter);
  double first_energy = mode == SnrModel::kPaperLiteral
                            ? p_const.value * t_quarter
                            : to_watts(p_const).value * t_quarter;
  ev.plan.boundaries_s.push_back(0.0);
  ev.plan.boundaries_s.push_back(t_quarter);
  ev.plan.powers_dbm.push_back(p_const.value);

  double residual = d_fixed - first_data;
  if (residual <= 0.0) {
    // The constant-power quarter already over-delivers; the optimizer's
    // quarter stays silent.
    ev.result.energy = first_energy;
    ev.result.data = first_data;
    ev.result.warnings = 1;
    finish(ev.result);
    ev.plan.boundaries_s.push_back(t_end);
    ev.plan.powers_dbm.push_back(kOff);
    return ev;
  }

  // The second quarter [dl/4, dl/2] sees the same distances as the half
  // cell of a network with half the BS spacing, so a fresh ladder over that
  // virtual cell tiles it exactly.
  NetworkGeometry tail_geo = geo;
  tail_geo.inter_bs_m = geo.inter_bs_m / 2.0;
  SegmentPlan tail_plan = segment_plan(tail_geo);
  PowerAllocation tail_alloc =
      allocate_closed_form(tail_plan, budget, residual, mode);
  ev.result.energy = first_energy + energy_of(tail_plan, tail_alloc);
  ev.result.data =
      first_data + data_total_midpoint(tail_plan, budget, mode, tail_alloc.powers_dbm);
  ev.result.warnings = tail_alloc.negative_power_warnings;
  finish(ev.result);
  double t = t_quarter;
  for (std::size_t i = 0; i < tail_plan.dwell_times_s.size(); ++i) {
    t += tail_plan.dwell_times_s[i];
    ev.plan.boundaries_s.push_back(t);
    ev.plan.powers_dbm.push_back(tail_alloc.powers_dbm[i]);
  }
  return ev;
}

SchemeEvaluation evaluate_otpa_inf(const NetworkGeometry& geo,
                                   const LinkBudget& budget, SnrModel mode,
                                   DbmPower p_ref) {
  if (mode != SnrModel::kPaperLiteral)
    throw std::invalid_argument(
        "scheme OTPA_INF: the infinite-segment limit is defined in "
        "paper-literal mode only");
  SchemeEvaluation ev;
  double d_fixed = data_integral_constant_power(geo, budget, mode, p_ref);
  ev.result.scheme = Scheme::kOtpaInf;
  ev.result.mode = mode;
  ev.result.operating_point = point_of(geo, p_ref);
  ev.result.energy = limit_energy(geo, budget, d_fixed, mode);
  ev.result.data = d_fixed;
  finish(ev.result);
  return ev;
}

SchemeEvaluation evaluate_oracle(const NetworkGeometry& geo,
                                 const LinkBudget& budget, SnrModel mode,
                                 DbmPower p_ref) {
  if (mode != SnrModel::kPhysical)
    throw std::invalid_argument(
        "scheme ORACLE: the water-filling optimum is defined in physical "
        "mode only");
  SchemeEvaluation ev;
  SegmentPlan plan = segment_plan(geo);
  double d_fixed = data_integral_constant_power(geo, budget, mode, p_ref);
  PowerAllocation alloc = allocate_oracle(plan, budget, d_fixed, mode);
  ev.result.scheme = Scheme::kOracle;
  ev.result.mode = mode;
  ev.result.operating_point = point_of(geo, p_ref);
  ev.result.energy = energy_of(plan, alloc);
  ev.result.data = data_total_midpoint(plan, budget, mode, alloc.powers_dbm);
  finish(ev.result);
  ev.plan.boundaries_s.push_back(0.0);
  double t = 0.0;
  for (double dwell : plan.dwell_times_s) {
    t += dwell;
    ev.plan.boundaries_s.push_back(t);
  }
  ev.plan.powers_dbm = alloc.powers_dbm;
  return ev;
}

}  // namespace

SchemeEvaluation evaluate_scheme(Scheme scheme, const NetworkGeometry& geo,
                                 const LinkBudget& budget, SnrModel mode,
                                 DbmPower p_ref) {
  geo.validate();
  budget.validate();
  switch (scheme) {
    case Scheme::kMctp: return evaluate_mctp(geo, budget, mode, p_ref);
    case Scheme::kOtpa: return evaluate_otpa(geo, budget, mode, p_ref);
    case Scheme::kMtpa: return evaluate_mtpa(geo, budget, mode, p_ref);
    case Scheme::kOtpaInf: return evaluate_otpa_inf(geo, budget, mode, p_ref);
    case Scheme::kOracle: return evaluate_oracle(geo, budget, mode, p_ref);
  }
  throw std::invalid_argument("evaluate_scheme: unknown scheme");
}

}  // namespace railbeam

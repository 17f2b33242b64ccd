#pragma once
// Batch execution: sweeps, Monte Carlo studies, the limit report, and the
// per-segment allocation report, all rendered as deterministic text.

#include <string>

#include "railbeam/config.hpp"

namespace railbeam {

struct RunOutput {
  std::string text;    // CSV (sweep, montecarlo) or plain report (limit, allocate)
  int error_rows = 0;  // rows that carry an error message instead of numbers
};

// One CSV row per sweep point, reference power, and scheme, ordered by
// sweep value, then reference power, then the fixed scheme order. Failures
// become rows with the error column set and the run continues.
RunOutput run_sweep(const RunConfig& config);

// Aggregate statistics per sweep point, reference power, and scheme, same
// ordering and error handling as run_sweep. Byte-identical for any thread
// count.
RunOutput run_montecarlo_cmd(const RunConfig& config);

// Text report of the large-segment-count limit: the half-cell constants,
// the closed-form energy, the profile quadrature, the uncorrected printed
// form when requested, and a doubling ladder of finite segment counts.
RunOutput run_limit_cmd(const RunConfig& config);

// Text report of the closed-form allocation at one operating point:
// per-segment geometry and power, the constraint residual, and warnings.
RunOutput run_allocate_cmd(const RunConfig& config);

}  // namespace railbeam

#pragma once
// Adaptive Simpson integration with a relative tolerance target and a hard
// evaluation cap. Deterministic: the refinement order depends only on the
// integrand values.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace railbeam {

struct QuadratureOptions {
  double rel_tol = 1e-8;
  std::size_t max_evals = 1000000;
};

namespace detail {

template <class E>
double simpson_adapt(E& eval, double a, double b, double fa, double fm,
                     double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = eval(lm);
  double frm = eval(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_adapt(eval, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_adapt(eval, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace detail

// Integrates f over [a, b]. Throws std::runtime_error when the evaluation
// cap is reached before the tolerance is met.
template <class F>
double integrate(F&& f, double a, double b, QuadratureOptions opts = {}) {
  if (a == b) return 0.0;
  std::size_t evals = 0;
  auto eval = [&](double x) {
    if (++evals > opts.max_evals)
      throw std::runtime_error("integrate: evaluation cap exceeded");
    return f(x);
  };
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double fa = eval(a);
  double fm = eval(m);
  double fb = eval(b);
  double flm = eval(lm);
  double frm = eval(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  // Tolerance scale: the two-panel estimate, floored by the integral of |f|
  // so an estimate near zero by cancellation cannot demand the impossible.
  double magnitude = std::fabs(
      (b - a) / 12.0 *
      (std::fabs(fa) + 4.0 * std::fabs(flm) + 2.0 * std::fabs(fm) +
       4.0 * std::fabs(frm) + std::fabs(fb)));
  double scale = std::max(std::fabs(left + right), 0.01 * magnitude);
  double tol = opts.rel_tol * std::max(scale, 1e-12);
  return detail::simpson_adapt(eval, a, m, fa, flm, fm, left, tol / 2.0, 59) +
         detail::simpson_adapt(eval, m, b, fm, frm, fb, right, tol / 2.0, 59);
}

}  // namespace railbeam

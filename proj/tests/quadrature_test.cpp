// Adaptive Simpson integrator: exactness on low-order polynomials, accuracy
// on smooth transcendental integrands, tolerance behavior, and the
// evaluation cap.

#include "railbeam/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "railbeam/units.hpp"

#include "support.hpp"

using namespace railbeam;

TEST_CASE("polynomials up to cubic integrate exactly") {
  CHECK_CLOSE(integrate([](double) { return 1.0; }, 0.0, 5.0), 5.0, 1e-14);
  CHECK_CLOSE(integrate([](double x) { return x; }, -1.0, 3.0), 4.0, 1e-14);
  CHECK_CLOSE(integrate([](double x) { return x * x; }, 0.0, 3.0), 9.0, 1e-14);
  CHECK_CLOSE(integrate([](double x) { return x * x * x; }, -2.0, 2.0), 0.0, 1e-12);
}

TEST_CASE("smooth transcendental integrands meet the tolerance") {
  CHECK_CLOSE(integrate([](double x) { return std::sin(x); }, 0.0, kPi), 2.0, 1e-10);
  CHECK_CLOSE(integrate([](double x) { return std::exp(x); }, 0.0, 1.0),
              std::exp(1.0) - 1.0, 1e-10);
  CHECK_CLOSE(integrate([](double x) { return 1.0 / x; }, 1.0, 4.0),
              std::log(4.0), 1e-10);
  CHECK_CLOSE(
      integrate([](double x) { return std::log2(1.0 + 1.0 / (1.0 + x * x)); },
                0.0, 10.0),
      integrate([](double x) { return std::log2(1.0 + 1.0 / (1.0 + x * x)); },
                0.0, 5.0) +
          integrate([](double x) { return std::log2(1.0 + 1.0 / (1.0 + x * x)); },
                    5.0, 10.0),
      1e-9);
}

TEST_CASE("empty interval and reversed bounds") {
  CHECK_CLOSE_ABS(integrate([](double x) { return x * x; }, 2.0, 2.0), 0.0, 0.0);
  // Reversed bounds flip the sign, as with a plain Riemann integral.
  CHECK_CLOSE(integrate([](double x) { return x; }, 3.0, 0.0), -4.5, 1e-12);
}

TEST_CASE("tighter tolerance gives a result at least as accurate") {
  auto f = [](double x) { return std::sin(10.0 * x) * std::exp(-x); };
  double exact = (10.0 - std::exp(-kPi) * (10.0 * std::cos(10.0 * kPi) +
                                           std::sin(10.0 * kPi))) /
                 101.0;
  QuadratureOptions loose;
  loose.rel_tol = 1e-4;
  QuadratureOptions tight;
  tight.rel_tol = 1e-12;
  double err_loose = std::fabs(integrate(f, 0.0, kPi, loose) - exact);
  double err_tight = std::fabs(integrate(f, 0.0, kPi, tight) - exact);
  CHECK(err_tight <= err_loose + 1e-15);
  CHECK(err_tight < 1e-10);
}

TEST_CASE("evaluation cap trips on a hostile integrand") {
  // A near-singular integrand with an absurd tolerance cannot finish within
  // a small evaluation budget.
  QuadratureOptions opts;
  opts.rel_tol = 1e-16;
  opts.max_evals = 200;
  CHECK_THROWS(
      integrate([](double x) { return 1.0 / std::sqrt(x + 1e-12); }, 0.0, 1.0, opts),
      std::runtime_error);
}

TEST_CASE("integrand exceptions propagate") {
  CHECK_THROWS(integrate(
                   [](double x) -> double {
                     if (x > 0.5) throw std::domain_error("bad point");
                     return x;
                   },
                   0.0, 1.0),
               std::domain_error);
}

int main() { return testkit::run_all(); }

#pragma once
// Minimal shared test harness: registered cases, CHECK/REQUIRE assertions
// with value reporting, and a [PASS]/[FAIL] line per case.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace testkit {

struct TestCase {
  std::string name;
  void (*run)();
};

inline std::vector<TestCase>& registry() {
  static std::vector<TestCase> cases;
  return cases;
}

inline bool& case_failed() {
  static bool failed = false;
  return failed;
}

struct RequireAborted : std::exception {
  const char* what() const noexcept override { return "REQUIRE aborted the case"; }
};

inline void report_failure(const char* file, int line, const std::string& what) {
  std::printf("    %s:%d: %s\n", file, line, what.c_str());
  case_failed() = true;
}

inline bool close_rel(double a, double b, double rel_tol) {
  double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= rel_tol * std::max(scale, 1e-300);
}

inline bool close_abs(double a, double b, double abs_tol) {
  return std::fabs(a - b) <= abs_tol;
}

inline std::string show(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline int run_all() {
  int failed_cases = 0;
  for (const auto& tc : registry()) {
    case_failed() = false;
    try {
      tc.run();
    } catch (const RequireAborted&) {
    } catch (const std::exception& e) {
      report_failure("(uncaught exception)", 0, e.what());
    }
    if (case_failed()) {
      std::printf("[FAIL] %s\n", tc.name.c_str());
      ++failed_cases;
    } else {
      std::printf("[PASS] %s\n", tc.name.c_str());
    }
  }
  if (failed_cases == 0)
    std::printf("all %zu cases passed\n", registry().size());
  else
    std::printf("%d of %zu cases failed\n", failed_cases, registry().size());
  return failed_cases == 0 ? 0 : 1;
}

}  // namespace testkit

#define TK_CONCAT2(a, b) a##b
#define TK_CONCAT(a, b) TK_CONCAT2(a, b)

#define TEST_CASE(name_str)                                              \
  static void TK_CONCAT(tk_case_, __LINE__)();                           \
  static const bool TK_CONCAT(tk_reg_, __LINE__) = [] {                  \
    ::testkit::registry().push_back({name_str, &TK_CONCAT(tk_case_, __LINE__)}); \
    return true;                                                         \
  }();                                                                   \
  static void TK_CONCAT(tk_case_, __LINE__)()

#define CHECK(cond)                                                       \
  do {                                                                    \
    if (!(cond))                                                          \
      ::testkit::report_failure(__FILE__, __LINE__, "CHECK failed: " #cond); \
  } while (0)

#define REQUIRE(cond)                                                     \
  do {                                                                    \
    if (!(cond)) {                                                        \
      ::testkit::report_failure(__FILE__, __LINE__, "REQUIRE failed: " #cond); \
      throw ::testkit::RequireAborted{};                                  \
    }                                                                     \
  } while (0)

#define CHECK_CLOSE(a, b, rel_tol)                                        \
  do {                                                                    \
    double tk_a = (a);                                                    \
    double tk_b = (b);                                                    \
    if (!::testkit::close_rel(tk_a, tk_b, (rel_tol)))                     \
      ::testkit::report_failure(                                         \
          __FILE__, __LINE__,                                             \
          std::string("CHECK_CLOSE failed: " #a " = ") +                  \
              ::testkit::show(tk_a) + ", " #b " = " + ::testkit::show(tk_b)); \
  } while (0)

#define CHECK_CLOSE_ABS(a, b, abs_tol)                                    \
  do {                                                                    \
    double tk_a = (a);                                                    \
    double tk_b = (b);                                                    \
    if (!::testkit::close_abs(tk_a, tk_b, (abs_tol)))                     \
      ::testkit::report_failure(                                         \
          __FILE__, __LINE__,                                             \
          std::string("CHECK_CLOSE_ABS failed: " #a " = ") +              \
              ::testkit::show(tk_a) + ", " #b " = " + ::testkit::show(tk_b)); \
  } while (0)

#define CHECK_THROWS(expr, exception_type)                                \
  do {                                                                    \
    bool tk_threw = false;                                                \
    try {                                                                 \
      (void)(expr);                                                       \
    } catch (const exception_type&) {                                     \
      tk_threw = true;                                                    \
    } catch (...) {                                                       \
    }                                                                     \
    if (!tk_threw)                                                        \
      ::testkit::report_failure(__FILE__, __LINE__,                       \
                                "CHECK_THROWS failed: " #expr             \
                                " did not throw " #exception_type);       \
  } while (0)

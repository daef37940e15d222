#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace teich {

/// Outcome of one identity check. An empty residual means exact comparison.
struct CheckReport {
  std::string name;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  std::optional<double> residual;
  double tolerance = 0.0;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0.0;
  std::string note;
};

inline CheckReport exact_report(std::string name, bool passed, std::string lhs, std::string rhs) {
  CheckReport r;
  r.name = std::move(name);
  r.passed = passed;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

inline CheckReport numeric_report(std::string name, double residual, double tol, std::string lhs = {},
                                  std::string rhs = {}) {
  CheckReport r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tol;
  r.passed = residual <= tol;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace teich

#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace tspread {

// Division rounding toward -infinity / +infinity for any sign of the
// numerator. Divisor must be positive.
constexpr int floor_div(int a, int b) {
  int q = a / b;
  int r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

constexpr int ceil_div(int a, int b) {
  int q = a / b;
  int r = a % b;
  return (r != 0 && r > 0) ? q + 1 : q;
}

// Exact binomial coefficient; 0 outside the Pascal triangle. Arguments are
// kept small enough here that the result fits a long long.
long long binomial(long long n, long long k);

// Cooperative per-point timeout used by the long-running verifiers. A null
// Deadline pointer means "no limit".
class Deadline {
 public:
  static Deadline after_seconds(double secs);
  bool expired() const;

 private:
  std::chrono::steady_clock::time_point when_;
};

struct TimeoutError : std::runtime_error {
  explicit TimeoutError(const std::string& where)
      : std::runtime_error("timed out in " + where) {}
};

inline void poll_deadline(const Deadline* d, const char* where) {
  if (d && d->expired()) throw TimeoutError(where);
}

}  // namespace tspread

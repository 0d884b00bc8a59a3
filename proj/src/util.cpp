#include "tspread/util.hpp"

#include <cassert>

namespace tspread {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long result = 1;
  for (long long i = 1; i <= k; ++i) {
    // Exact at every step: result * (n-k+i) is divisible by i.
    assert(result <= (long long)9e18 / (n - k + i));
    result = result * (n - k + i) / i;
  }
  return result;
}

Deadline Deadline::after_seconds(double secs) {
  Deadline d;
  d.when_ = std::chrono::steady_clock::now() +
            std::chrono::microseconds(static_cast<long long>(secs * 1e6));
  return d;
}

bool Deadline::expired() const {
  return std::chrono::steady_clock::now() >= when_;
}

}  // namespace tspread

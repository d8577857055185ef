#pragma once

#include <cmath>

namespace regmod {

// Kahan-Babuska (Neumaier) compensated accumulator. The quotient sweeps add
// ~1e8 terms of size O(1); compensation keeps the error independent of the
// term count instead of growing with it.
template <typename T = long double>
struct CompensatedSum {
  T sum{0};
  T comp{0};

  void add(T x) {
    T t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  T value() const { return sum + comp; }
};

}  // namespace regmod

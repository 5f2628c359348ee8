#pragma once

#include <cmath>

namespace stancu::detail {

/// Neumaier compensated accumulator. Summation order is part of the
/// contract wherever results must be bitwise reproducible.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace stancu::detail

#include "sigma_kernels.hpp"

#include <cmath>

namespace stancu::simd {
namespace {

inline double sigma_one(double s) {
  const double t = std::abs(s);
  if (t > kSigmaCut) return 0.0;
  const double u = std::exp(-t);
  return kSinh1 * u / ((1.0 + u * kEuler) * (1.0 + u * kInvEuler));
}

void shift_row_scalar(double x, long long k0, double* w, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) {
    w[j] = sigma_one(x - static_cast<double>(k0 + static_cast<long long>(j)));
  }
}

void eval_scalar(const double* s, double* out, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) out[j] = sigma_one(s[j]);
}

}  // namespace

const SigmaKernels kSigmaScalar = {shift_row_scalar, eval_scalar, "scalar"};

}  // namespace stancu::simd

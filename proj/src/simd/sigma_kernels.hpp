#pragma once

// Internal kernel table shared by the dispatch layer and the per-ISA
// translation units. Not installed.

#include <cstddef>

namespace stancu::simd {

// sinh(1), e, 1/e: the logistic activation in product form is
//   sigma(s) = sinh(1) * u / ((1 + u*e) * (1 + u/e)),  u = exp(-|s|),
// algebraically equal to [eta(s+1) - eta(s-1)] / 2 but free of the
// cancellation the difference form suffers in the tails.
inline constexpr double kSinh1 = 1.1752011936438014569;
inline constexpr double kEuler = 2.7182818284590452354;
inline constexpr double kInvEuler = 0.36787944117144232160;

// exp(-t) underflows past ~745; beyond 708 the activation is < 1e-306,
// below every tolerance in the project. Both backends clamp here so the
// cutoff is backend-independent.
inline constexpr double kSigmaCut = 708.0;

struct SigmaKernels {
  void (*shift_row)(double x, long long k0, double* w, std::size_t len);
  void (*eval)(const double* s, double* out, std::size_t len);
  const char* name;
};

extern const SigmaKernels kSigmaScalar;

#if defined(__x86_64__) || defined(_M_X64)
#define STANCU_HAVE_AVX2_TU 1
extern const SigmaKernels kSigmaAvx2;
#else
#define STANCU_HAVE_AVX2_TU 0
#endif

}  // namespace stancu::simd

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace stancu::simd {

/// Instruction-set variant of the logistic activation row kernels.
/// Scalar is the reference; vector backends must agree with it to
/// tight relative tolerance (see tests/test_simd.cpp).
enum class Backend {
  kScalar,
  kAvx2,
};

std::string_view backend_name(Backend b);

/// True when the backend can run on this CPU (and was compiled in).
bool backend_available(Backend b);

/// Best available backend, honoring the STANCU_NNO_SIMD env override
/// ("scalar" or "avx2"). Falls back to scalar on unknown values.
Backend preferred_backend();

/// Process-wide selection used by the activation-kernel fast path.
/// Initialized lazily to preferred_backend().
Backend active_backend();
void set_backend(Backend b);  // throws ConfigError if unavailable

/// w[j] = sigma_logistic(x - (k0 + j)) for j in [0, w.size()).
void sigma_row(Backend b, double x, long long k0, std::span<double> w);

/// out[i] = sigma_logistic(s[i]).
void sigma_values(Backend b, std::span<const double> s, std::span<double> out);

/// Reference scalar activation value; exact evenness by construction.
double sigma_logistic(double s);

/// Logistic generator 1/(1+e^(-s)).
double eta_logistic(double s);

}  // namespace stancu::simd

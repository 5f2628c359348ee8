#include "stancu/simd/backend.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "sigma_kernels.hpp"
#include "stancu/errors.hpp"

namespace stancu::simd {
namespace {

const SigmaKernels& table(Backend b) {
#if STANCU_HAVE_AVX2_TU
  if (b == Backend::kAvx2) return kSigmaAvx2;
#endif
  return kSigmaScalar;
}

bool cpu_has_avx2() {
#if STANCU_HAVE_AVX2_TU && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<int> g_backend{-1};  // -1: not yet selected

}  // namespace

std::string_view backend_name(Backend b) { return table(b).name; }

bool backend_available(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
      return cpu_has_avx2();
  }
  return false;
}

Backend preferred_backend() {
  if (const char* env = std::getenv("STANCU_NNO_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
    if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::kAvx2)) {
      return Backend::kAvx2;
    }
    return Backend::kScalar;
  }
  return backend_available(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
}

Backend active_backend() {
  int cur = g_backend.load(std::memory_order_relaxed);
  if (cur < 0) {
    cur = static_cast<int>(preferred_backend());
    g_backend.store(cur, std::memory_order_relaxed);
  }
  return static_cast<Backend>(cur);
}

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw ConfigError("simd backend not available on this host: " +
                      std::string(backend_name(b)));
  }
  g_backend.store(static_cast<int>(b), std::memory_order_relaxed);
}

void sigma_row(Backend b, double x, long long k0, std::span<double> w) {
  table(b).shift_row(x, k0, w.data(), w.size());
}

void sigma_values(Backend b, std::span<const double> s, std::span<double> out) {
  table(b).eval(s.data(), out.data(), s.size() < out.size() ? s.size() : out.size());
}

double sigma_logistic(double s) {
  const double t = std::abs(s);
  if (t > kSigmaCut) return 0.0;
  const double u = std::exp(-t);
  return kSinh1 * u / ((1.0 + u * kEuler) * (1.0 + u * kInvEuler));
}

double eta_logistic(double s) {
  // 1/(1+e^(-s)); the e^(+s) form keeps the tail s -> -inf from overflowing.
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double u = std::exp(s);
  return u / (1.0 + u);
}

}  // namespace stancu::simd

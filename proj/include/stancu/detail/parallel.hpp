#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace stancu::detail {

/// Thread budget: STANCU_NNO_THREADS if set (>=1), else hardware concurrency.
inline unsigned thread_budget() {
  if (const char* env = std::getenv("STANCU_NNO_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? hc : 1;
}

/// Runs body(i) for i in [0, count). Work is split into static contiguous
/// chunks; every index is processed exactly once by exactly one thread, so
/// results written to disjoint slots match the sequential run bitwise.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const unsigned budget = thread_budget();
  if (budget <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(
      count < static_cast<std::size_t>(budget) ? count : budget);
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = static_cast<std::size_t>(w) * chunk;
    if (lo >= count) break;
    const std::size_t hi = lo + chunk < count ? lo + chunk : count;
    threads.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace stancu::detail

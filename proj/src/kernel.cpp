#include "stancu/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "stancu/detail/compensated.hpp"
#include "stancu/errors.hpp"

namespace stancu {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_custom(const std::string& name,
                     const std::function<double(double)>& eta, double rho) {
  if (!eta) throw ConfigError(name + ": generator callable is empty");
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ConfigError(name + ": decay exponent rho must be finite and > 0");
  }

  // Limits and monotonicity on a wide grid.
  if (!(eta(-1e6) < 1e-3) || !(1.0 - eta(1e6) < 1e-3)) {
    throw ConfigError(name + ": sigmoidal limits 0 / 1 not reached");
  }
  double prev = eta(-50.0);
  for (int i = 1; i <= 2000; ++i) {
    const double s = -50.0 + 0.05 * i;
    const double v = eta(s);
    if (v < prev - 1e-12) {
      throw ConfigError(name + ": generator is not monotone increasing");
    }
    prev = v;
  }

  // (P1) eta(s) - 1/2 odd.
  for (int i = 0; i <= 400; ++i) {
    const double s = 0.05 * i;
    if (std::abs((eta(s) - 0.5) + (eta(-s) - 0.5)) > 1e-12) {
      throw ConfigError(name + ": (P1) odd symmetry of eta - 1/2 fails");
    }
  }

  if (!(eta(1.0) < 1.0)) throw ConfigError(name + ": eta(1) < 1 fails");

  // (P2) concavity on [0, inf), second-order central differences.
  for (int i = 1; i < 2000; ++i) {
    const double s = 0.01 * i;
    const double d2 = eta(s + 0.01) - 2.0 * eta(s) + eta(s - 0.01);
    if (d2 > 1e-8) {
      throw ConfigError(name + ": (P2) concavity on [0, inf) fails");
    }
  }

  // (P3) tail decay: 1 - eta(s) <= 2C s^(-1-rho) with C calibrated at s=10.
  const double c = (1.0 - eta(10.0)) * std::pow(10.0, 1.0 + rho);
  for (double s : {100.0, 1000.0, 10000.0}) {
    if (1.0 - eta(s) > 2.0 * c * std::pow(s, -1.0 - rho) + 1e-15) {
      throw ConfigError(name + ": (P3) tail decay slower than |s|^(-1-rho)");
    }
  }
}

}  // namespace

SigmoidalGenerator::SigmoidalGenerator(GeneratorKind kind, std::string name,
                                       std::function<double(double)> eta,
                                       double rho)
    : kind_(kind), name_(std::move(name)), eta_(std::move(eta)), rho_(rho) {}

SigmoidalGenerator SigmoidalGenerator::logistic() {
  return SigmoidalGenerator(GeneratorKind::kLogistic, "logistic", {}, kInf);
}

SigmoidalGenerator SigmoidalGenerator::custom(
    std::string name, std::function<double(double)> eta, double rho) {
  validate_custom(name, eta, rho);
  return SigmoidalGenerator(GeneratorKind::kCustom, std::move(name),
                            std::move(eta), rho);
}

double SigmoidalGenerator::operator()(double s) const {
  switch (kind_) {
    case GeneratorKind::kLogistic:
      return simd::eta_logistic(s);
    case GeneratorKind::kCustom:
      return eta_(s);
  }
  throw ConfigError("unsupported generator kind");
}

ActivationKernel::ActivationKernel(SigmoidalGenerator generator, int dimension)
    : generator_(std::move(generator)), dimension_(dimension) {
  if (dimension_ < 1) throw ArgumentError("kernel dimension must be >= 1");
  sigma_one_ = eval1d(1.0);
  if (!(sigma_one_ > 0.0)) {
    throw ConfigError(generator_.name() + ": sigma(1) > 0 fails");
  }
}

double ActivationKernel::eval1d(double s) const {
  if (is_logistic()) return simd::sigma_logistic(s);
  return 0.5 * (generator_(s + 1.0) - generator_(s - 1.0));
}

double ActivationKernel::eval(std::span<const double> s) const {
  if (static_cast<int>(s.size()) != dimension_) {
    throw ArgumentError("kernel argument has dimension " +
                        std::to_string(s.size()) + ", expected " +
                        std::to_string(dimension_));
  }
  double prod = 1.0;
  for (double si : s) prod *= eval1d(si);
  return prod;
}

void ActivationKernel::weight_row(double x, long long k0,
                                  std::span<double> w) const {
  if (is_logistic()) {
    simd::sigma_row(simd::active_backend(), x, k0, w);
    return;
  }
  for (std::size_t j = 0; j < w.size(); ++j) {
    w[j] = eval1d(x - static_cast<double>(k0 + static_cast<long long>(j)));
  }
}

std::vector<double> uniform_grid(double a, double b, int count) {
  if (count < 1) throw ArgumentError("grid needs at least one point");
  if (count == 1) return {a};
  std::vector<double> g(static_cast<std::size_t>(count));
  const double h = (b - a) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = a + h * i;
  g.front() = a;
  g.back() = b;
  return g;
}

std::vector<double> unit_period_grid() { return uniform_grid(0.0, 1.0, 101); }

double discrete_moment(const ActivationKernel& kernel, double order,
                       int truncation, std::span<const double> grid) {
  if (truncation < 0) throw ArgumentError("truncation must be >= 0");
  double best = 0.0;
  std::vector<double> w;
  for (double s : grid) {
    const long long lo = static_cast<long long>(std::ceil(s - truncation));
    const long long hi = static_cast<long long>(std::floor(s + truncation));
    if (hi < lo) continue;
    w.resize(static_cast<std::size_t>(hi - lo + 1));
    kernel.weight_row(s, lo, w);
    detail::NeumaierSum acc;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const double dist = std::abs(s - static_cast<double>(lo + static_cast<long long>(j)));
      if (order == 0.0) {
        acc.add(w[j]);
      } else if (order == 1.0) {
        acc.add(w[j] * dist);
      } else {
        acc.add(w[j] * std::pow(dist, order));
      }
    }
    best = std::max(best, acc.value());
  }
  return best;
}

double tail_mass(const ActivationKernel& kernel, int n, double delta,
                 std::span<const double> grid, double window) {
  if (n < 1) throw ArgumentError("tail_mass needs n >= 1");
  if (!(delta > 0.0)) throw ArgumentError("tail_mass needs delta > 0");
  if (grid.empty()) return 0.0;
  const auto [mn, mx] = std::minmax_element(grid.begin(), grid.end());
  const double span = *mx - *mn;
  const double w_eff = window >= 0.0 ? window : n * span + n * delta + 50.0;
  const double cut = n * delta;

  double worst = 0.0;
  std::vector<double> w;
  for (double s : grid) {
    const double x = n * static_cast<double>(s);
    const long long lo = static_cast<long long>(std::ceil(x - w_eff));
    const long long hi = static_cast<long long>(std::floor(x + w_eff));
    if (hi < lo) continue;
    w.resize(static_cast<std::size_t>(hi - lo + 1));
    kernel.weight_row(x, lo, w);
    detail::NeumaierSum acc;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const double dist = std::abs(x - static_cast<double>(lo + static_cast<long long>(j)));
      if (dist > cut) acc.add(w[j]);
    }
    worst = std::max(worst, acc.value());
  }
  return worst;
}

const KernelCheckReport::Entry* KernelCheckReport::find(
    std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

KernelCheckReport run_kernel_checks(const ActivationKernel& kernel,
                                    int truncation) {
  KernelCheckReport report;
  auto push = [&report](std::string name, double residual, double tolerance) {
    const bool pass = residual < tolerance;
    report.entries.push_back({std::move(name), residual, tolerance, pass});
    report.all_pass = report.all_pass && pass;
  };
  const auto grid = unit_period_grid();

  // Partition of unity: sum_k sigma(s - k) == 1 on the period grid.
  {
    double residual = 0.0;
    std::vector<double> w;
    for (double s : grid) {
      const long long lo = static_cast<long long>(std::ceil(s - truncation));
      const long long hi = static_cast<long long>(std::floor(s + truncation));
      w.resize(static_cast<std::size_t>(hi - lo + 1));
      kernel.weight_row(s, lo, w);
      detail::NeumaierSum acc;
      for (double v : w) acc.add(v);
      residual = std::max(residual, std::abs(acc.value() - 1.0));
    }
    push("partition_of_unity", residual, 1e-10);
  }

  // Evenness on deterministic pseudo-random points in [-10, 10].
  {
    std::mt19937_64 rng(0x757ae1c5u);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    double residual = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double s = dist(rng);
      residual = std::max(residual,
                          std::abs(kernel.eval1d(s) - kernel.eval1d(-s)));
    }
    push("evenness", residual, 1e-14);
  }

  // Nonnegativity over a dense grid plus the far tail.
  {
    double worst = 0.0;
    for (double s : uniform_grid(-50.0, 50.0, 5001)) {
      worst = std::min(worst, kernel.eval1d(s));
    }
    push("nonnegativity", -worst, 1e-30);
  }

  // Vanishing at the truncation edge.
  {
    const double t = static_cast<double>(truncation);
    const double residual =
        std::max(kernel.eval1d(t), kernel.eval1d(-t));
    push("tail_vanishing", residual, 1e-12);
  }

  // Denominator lower bound: sigma(1) <= sum over the index range <= 1.
  {
    double residual = 0.0;
    std::vector<double> w;
    for (int n : {5, 10, 50}) {
      for (double s : grid) {
        const double x = n * s;
        w.resize(static_cast<std::size_t>(n) + 1);
        kernel.weight_row(x, 0, w);
        detail::NeumaierSum acc;
        for (double v : w) acc.add(v);
        const double total = acc.value();
        residual = std::max(residual, kernel.sigma_at_one() - total);
        residual = std::max(residual, total - (1.0 + 1e-12));
      }
    }
    push("denominator_lower_bound", residual, 1e-15);
  }

  // Zeroth discrete moment.
  {
    const double m0 = discrete_moment(kernel, 0.0, truncation, grid);
    push("moment_m0", std::abs(m0 - 1.0), 1e-10);
  }

  // (P1) odd symmetry of the generator about 1/2.
  {
    const auto& gen = kernel.generator();
    double residual = 0.0;
    for (double s : uniform_grid(0.0, 20.0, 2001)) {
      residual = std::max(residual,
                          std::abs((gen(s) - 0.5) + (gen(-s) - 0.5)));
    }
    push("generator_symmetry_p1", residual, 1e-14);
  }

  // (P2) concavity of the generator on [0, 20].
  {
    const auto& gen = kernel.generator();
    double residual = 0.0;
    const double h = 0.01;
    for (double s : uniform_grid(h, 20.0, 2000)) {
      residual = std::max(residual, gen(s + h) - 2.0 * gen(s) + gen(s - h));
    }
    push("generator_concavity_p2", residual, 1e-10);
  }

  // Lipschitz: |sigma(s) - sigma(t)| <= L |s - t| with L from a fine
  // finite-difference scan of sigma'.
  {
    double lip = 0.0;
    const double h = 1e-4;
    for (double s : uniform_grid(-10.0, 10.0, 20001)) {
      lip = std::max(lip,
                     std::abs(kernel.eval1d(s + h) - kernel.eval1d(s - h)) /
                         (2.0 * h));
    }
    std::mt19937_64 rng(0x51a7e0ffu);
    std::uniform_real_distribution<double> dist(-12.0, 12.0);
    double residual = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const double s = dist(rng);
      const double t = dist(rng);
      const double lhs = std::abs(kernel.eval1d(s) - kernel.eval1d(t));
      residual = std::max(
          residual, lhs - (lip * (1.0 + 1e-6) * std::abs(s - t) + 1e-15));
    }
    push("lipschitz", residual, 1e-15);
  }

  return report;
}

}  // namespace stancu

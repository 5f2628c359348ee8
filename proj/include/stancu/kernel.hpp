#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stancu/simd/backend.hpp"

namespace stancu {

enum class GeneratorKind { kLogistic, kCustom };

/// Increasing sigmoidal generator eta with limits 0 / 1 at -inf / +inf,
/// odd-symmetric about (0, 1/2), concave on [0, inf) and eta(1) < 1.
/// The logistic generator 1/(1+e^(-s)) is built in; user generators are
/// validated numerically at registration.
class SigmoidalGenerator {
 public:
  static SigmoidalGenerator logistic();

  /// Registers a generator with polynomial tail decay |s|^(-1-rho), rho > 0.
  /// Monotonicity, limits, odd symmetry, concavity on [0, inf), eta(1) < 1
  /// and the decay order are all checked on grids; ConfigError on failure.
  static SigmoidalGenerator custom(std::string name,
                                   std::function<double(double)> eta,
                                   double rho);

  double operator()(double s) const;

  GeneratorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Decay exponent rho from the tail condition. +inf for the logistic
  /// generator: exponential tails make every moment order finite.
  double decay_exponent() const { return rho_; }

 private:
  SigmoidalGenerator(GeneratorKind kind, std::string name,
                     std::function<double(double)> eta, double rho);

  GeneratorKind kind_;
  std::string name_;
  std::function<double(double)> eta_;
  double rho_;
};

/// Activation kernel sigma(s) = [eta(s+1) - eta(s-1)] / 2 and its
/// d-dimensional tensor product. Nonnegative, even, sigma(1) > 0.
class ActivationKernel {
 public:
  explicit ActivationKernel(SigmoidalGenerator generator, int dimension = 1);

  double eval1d(double s) const;
  double eval(std::span<const double> s) const;

  /// w[j] = sigma(x - (k0 + j)). The logistic kernel routes through the
  /// active simd backend; custom generators use the difference form.
  void weight_row(double x, long long k0, std::span<double> w) const;

  int dimension() const { return dimension_; }
  const SigmoidalGenerator& generator() const { return generator_; }
  double sigma_at_one() const { return sigma_one_; }
  bool is_logistic() const { return generator_.kind() == GeneratorKind::kLogistic; }

 private:
  SigmoidalGenerator generator_;
  int dimension_;
  double sigma_one_;
};

/// Inclusive uniform grid with exact endpoints; count == 1 yields {a}.
std::vector<double> uniform_grid(double a, double b, int count);

/// 101 points over one unit period; the moment and tail summands are
/// invariant under integer shifts of s, so [0, 1] suffices.
std::vector<double> unit_period_grid();

/// Truncated discrete absolute moment of order r:
///   max over the grid of  sum_{|k-s| <= truncation} sigma(s-k) |s-k|^r.
/// A lower bound on M_r(sigma) that converges upward with the truncation.
double discrete_moment(const ActivationKernel& kernel, double order,
                       int truncation, std::span<const double> grid);

/// sup over the grid of  sum_{|ns-k| > n*delta} sigma(ns-k), truncated at
/// |ns-k| <= n*span(grid) + n*delta + 50 (or at `window` if window >= 0).
double tail_mass(const ActivationKernel& kernel, int n, double delta,
                 std::span<const double> grid, double window = -1.0);

struct KernelCheckReport {
  struct Entry {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
  };
  std::vector<Entry> entries;
  bool all_pass = true;

  const Entry* find(std::string_view name) const;
};

/// Runs the full battery of activation-kernel property checks (partition of
/// unity, evenness, nonnegativity, tail decay, denominator lower bound,
/// zeroth moment, generator symmetry/concavity, Lipschitz bound) and
/// reports the measured residuals.
KernelCheckReport run_kernel_checks(const ActivationKernel& kernel,
                                    int truncation = 40);

}  // namespace stancu

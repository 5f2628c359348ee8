#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "stancu/operator.hpp"

namespace stancu {

struct ErrorReport {
  int n = 0;
  double max_error = 0.0;
  Point argmax_point;
  double mean_abs_error = 0.0;
};

struct ConvergenceSeries {
  std::vector<ErrorReport> entries;  // strictly increasing in n
  double fitted_slope = 0.0;         // log-log least squares over the window
  bool slope_degenerate = false;     // all errors below noise floor, no fit
  int fit_n_min = 0;                 // realized fit window
  int fit_n_max = 0;
};

struct ModulusEstimate {
  double delta = 0.0;
  double omega = 0.0;  // lower-bound estimate of the true modulus
};

/// Error bound C * (inflation * omega(f, 1/n)) with
/// C = (M_0 / sigma(1))^d * (2 + C1). The inflation compensates for the
/// modulus estimate being a lower bound of the true supremum.
struct RateBound {
  double constant = 0.0;
  double omega = 0.0;
  double inflation = 1.0;
  double value = 0.0;
};

/// Max and mean absolute deviation of the operator from `truth` on a grid.
ErrorReport max_error(const OperatorSpec& spec,
                      const std::function<double(std::span<const double>)>& truth,
                      std::span<const Point> grid);
ErrorReport max_error(const OperatorSpec& spec,
                      const std::function<double(double)>& truth,
                      std::span<const double> grid_1d);

/// Least-squares slope of log(e) against log(n).
double fit_loglog_slope(std::span<const double> ns, std::span<const double> es);

/// One ErrorReport per n (ascending) for the analytic 1-d source f; the
/// slope is fitted over [fit_window.first, fit_window.second] when given,
/// else over the upper half of n_list.
ConvergenceSeries convergence_series(
    const DomainBox& domain, const ActivationKernel& kernel,
    const StancuParams& params, const std::function<double(double)>& f,
    std::span<const int> n_list, std::span<const double> grid_1d,
    std::optional<std::pair<int, int>> fit_window = std::nullopt,
    int window = 40);

/// Lower-bound estimate of omega(f, delta) on [a, b] from a structured
/// scheme (uniform pairs at distance exactly delta) plus a deterministic
/// pseudo-random pairing; delta >= b - a saturates to max f - min f.
ModulusEstimate estimate_modulus(const std::function<double(double)>& f,
                                 double a, double b, double delta,
                                 int sample_pairs = 100000);

/// Assembles the rate-theorem bound at delta = 1/n from the boundedness
/// constant and the node-shift constant C1.
RateBound theoretical_bound(const OperatorSpec& spec,
                            const ModulusEstimate& modulus,
                            double inflation = 1.25);

}  // namespace stancu

#include "stancu/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "stancu/detail/compensated.hpp"
#include "stancu/errors.hpp"

namespace stancu {
namespace {

constexpr double kDegenerateFloor = 1e-12;

ErrorReport report_from(int n, std::span<const double> approx,
                        std::span<const double> exact,
                        const std::function<Point(std::size_t)>& point_at) {
  ErrorReport rep;
  rep.n = n;
  detail::NeumaierSum total;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    const double err = std::abs(approx[i] - exact[i]);
    total.add(err);
    if (err > rep.max_error) {
      rep.max_error = err;
      argmax = i;
    }
  }
  rep.mean_abs_error = total.value() / static_cast<double>(approx.size());
  rep.argmax_point = point_at(argmax);
  return rep;
}

}  // namespace

ErrorReport max_error(const OperatorSpec& spec,
                      const std::function<double(std::span<const double>)>& truth,
                      std::span<const Point> grid) {
  if (grid.empty()) throw ArgumentError("max_error needs a nonempty grid");
  const std::vector<double> approx = evaluate_grid(spec, grid);
  std::vector<double> exact(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) exact[i] = truth(grid[i]);
  return report_from(spec.n, approx, exact,
                     [&grid](std::size_t i) { return grid[i]; });
}

ErrorReport max_error(const OperatorSpec& spec,
                      const std::function<double(double)>& truth,
                      std::span<const double> grid_1d) {
  if (grid_1d.empty()) throw ArgumentError("max_error needs a nonempty grid");
  const std::vector<double> approx = evaluate_grid(spec, grid_1d);
  std::vector<double> exact(grid_1d.size());
  for (std::size_t i = 0; i < grid_1d.size(); ++i) exact[i] = truth(grid_1d[i]);
  return report_from(spec.n, approx, exact,
                     [&grid_1d](std::size_t i) { return Point{grid_1d[i]}; });
}

double fit_loglog_slope(std::span<const double> ns, std::span<const double> es) {
  if (ns.size() != es.size() || ns.size() < 2) {
    throw ArgumentError("slope fit needs at least two (n, e) pairs");
  }
  const auto m = static_cast<double>(ns.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(ns[i]);
    const double y = std::log(es[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ConvergenceSeries convergence_series(
    const DomainBox& domain, const ActivationKernel& kernel,
    const StancuParams& params, const std::function<double(double)>& f,
    std::span<const int> n_list, std::span<const double> grid_1d,
    std::optional<std::pair<int, int>> fit_window, int window) {
  if (n_list.empty()) throw ArgumentError("convergence series needs n values");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw ArgumentError("n_list must be strictly ascending");
    }
  }

  ConvergenceSeries series;
  series.entries.reserve(n_list.size());
  const auto source = FunctionSource::analytic1d(f);
  for (int n : n_list) {
    OperatorSpec spec(domain, kernel, n, params, source, window);
    series.entries.push_back(max_error(spec, f, grid_1d));
  }

  // Fit window: explicit bounds, else the upper half of n_list.
  int lo_n, hi_n;
  if (fit_window) {
    lo_n = fit_window->first;
    hi_n = fit_window->second;
  } else {
    lo_n = n_list[n_list.size() / 2];
    hi_n = n_list.back();
  }
  std::vector<double> ns, es;
  bool above_floor = false;
  for (const auto& e : series.entries) {
    if (e.n < lo_n || e.n > hi_n) continue;
    if (e.max_error > kDegenerateFloor) above_floor = true;
    ns.push_back(static_cast<double>(e.n));
    es.push_back(std::max(e.max_error, 1e-300));
  }
  series.fit_n_min = lo_n;
  series.fit_n_max = hi_n;
  if (ns.size() < 2 || !above_floor) {
    series.slope_degenerate = true;
    series.fitted_slope = 0.0;
  } else {
    series.fitted_slope = fit_loglog_slope(ns, es);
  }
  return series;
}

ModulusEstimate estimate_modulus(const std::function<double(double)>& f,
                                 double a, double b, double delta,
                                 int sample_pairs) {
  if (!(delta > 0.0)) throw ArgumentError("modulus needs delta > 0");
  if (!(a < b)) throw ArgumentError("modulus needs a < b");
  const int budget = std::max(sample_pairs, 1000);

  ModulusEstimate est;
  est.delta = delta;

  if (delta >= b - a) {
    // Saturated: the modulus equals the total variation range.
    double fmin = f(a), fmax = f(a);
    for (double s : uniform_grid(a, b, budget)) {
      const double v = f(s);
      fmin = std::min(fmin, v);
      fmax = std::max(fmax, v);
    }
    est.omega = fmax - fmin;
    return est;
  }

  double omega = 0.0;
  // Structured pairs at distance exactly delta.
  const int m = budget / 2;
  for (double u : uniform_grid(a, b - delta, m)) {
    omega = std::max(omega, std::abs(f(u + delta) - f(u)));
  }
  // Deterministic pseudo-random pairs at distance <= delta.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> upos(a, b);
  std::uniform_real_distribution<double> uoff(-delta, delta);
  for (int i = 0; i < budget / 2; ++i) {
    const double u = upos(rng);
    const double v = std::clamp(u + uoff(rng), a, b);
    omega = std::max(omega, std::abs(f(u) - f(v)));
  }
  est.omega = omega;
  return est;
}

RateBound theoretical_bound(const OperatorSpec& spec,
                            const ModulusEstimate& modulus, double inflation) {
  RateBound bound;
  const double c1 = node_shift_constant(spec.domain, spec.params);
  bound.constant = boundedness_constant(spec.kernel) * (2.0 + c1);
  bound.omega = modulus.omega;
  bound.inflation = inflation;
  bound.value = bound.constant * inflation * modulus.omega;
  return bound;
}

}  // namespace stancu

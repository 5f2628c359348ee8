#pragma once

#include <functional>
#include <span>
#include <vector>

#include "stancu/kernel.hpp"

namespace stancu {

using Point = std::vector<double>;

/// Compact rectangular domain, the product of [lower[i], upper[i]].
struct DomainBox {
  std::vector<double> lower;
  std::vector<double> upper;

  DomainBox(std::vector<double> lo, std::vector<double> up);
  static DomainBox interval(double a, double b);
  static DomainBox unit_cube(int dimension);

  int dimension() const { return static_cast<int>(lower.size()); }
  bool contains(std::span<const double> s) const;
  Point clamp(std::span<const double> s) const;
  /// Largest coordinate magnitude over all corners, max_i max(|a_i|, |b_i|).
  double max_abs_coordinate() const;
};

/// Node perturbation parameters, 0 <= alpha <= beta.
struct StancuParams {
  double alpha = 0.0;
  double beta = 0.0;

  StancuParams() = default;
  StancuParams(double a, double b);
};

/// Integer index ranges [ceil(n a_i), floor(n b_i)] per coordinate.
struct IndexSet {
  int n = 0;
  std::vector<long long> lo;
  std::vector<long long> hi;

  static IndexSet build(const DomainBox& domain, int n);

  int dimension() const { return static_cast<int>(lo.size()); }
  long long count(int i) const { return hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)] + 1; }
  unsigned long long cardinality() const;
};

/// Perturbed node s_k = ((k_i + alpha) / (n + beta))_i; alpha = beta = 0
/// gives k_i / n exactly.
Point perturbed_node(std::span<const long long> k, int n, const StancuParams& p);

/// Guaranteed per-coordinate enclosure of every perturbed node over the
/// index set: [a_i - beta a_i/(n+beta), b_i + beta/(n+beta)].
struct NodeEnclosure {
  std::vector<double> lower;
  std::vector<double> upper;
};
NodeEnclosure node_bounds(const DomainBox& domain, int n, const StancuParams& p);

/// C1 with max_k |(k_i+alpha)/(n+beta) - k_i/n| <= C1/n over the index set,
/// uniformly in n: C1 = max(alpha, alpha + beta * max_i max(|a_i|, |b_i|)).
double node_shift_constant(const DomainBox& domain, const StancuParams& p);

/// The function being approximated: either an analytic map evaluated at the
/// perturbed nodes (optionally clamped into the domain first), or sampled
/// values bound to lattice indices. For sampled data the stored y_k is used
/// for index k whatever (alpha, beta) are; the perturbation relabels where
/// the sample is assumed to sit, it does not move the data.
class FunctionSource {
 public:
  enum class Extension { kDirect, kClampToDomain };

  static FunctionSource analytic(std::function<double(std::span<const double>)> f,
                                 Extension ext = Extension::kDirect);
  static FunctionSource analytic1d(std::function<double(double)> f,
                                   Extension ext = Extension::kDirect);
  /// Row-major values over the integer box [k_lo[i], k_hi[i]].
  static FunctionSource sampled(std::vector<double> values,
                                std::vector<long long> k_lo,
                                std::vector<long long> k_hi);
  static FunctionSource sampled1d(std::vector<double> values, long long k_lo);

  bool is_sampled() const { return sampled_; }
  bool covers(const IndexSet& idx) const;

 private:
  friend double evaluate(const struct OperatorSpec&, std::span<const double>);
  FunctionSource() = default;

  std::function<double(std::span<const double>)> fn_;
  Extension ext_ = Extension::kDirect;
  bool sampled_ = false;
  std::vector<double> values_;
  std::vector<long long> klo_, khi_;
};

/// One fully specified operator instance. Immutable after construction;
/// evaluation is pure and safe for concurrent calls.
struct OperatorSpec {
  DomainBox domain;
  ActivationKernel kernel;
  int n;
  StancuParams params;
  FunctionSource source;
  /// Per-coordinate summation window: indices with |n s_i - k_i| <= window
  /// (intersected with the index set). <= 0 sums the whole index set.
  /// Logistic mass beyond the default 40 is below 5e-18.
  int window = 40;

  OperatorSpec(DomainBox domain, ActivationKernel kernel, int n,
               StancuParams params, FunctionSource source, int window = 40);

  const IndexSet& index_set() const { return index_set_; }

 private:
  IndexSet index_set_;
};

/// F_n(f; s): the ratio of kernel-weighted node samples to the kernel mass.
/// The denominator is bounded below by sigma(1)^d. Numerator and denominator
/// are accumulated with compensated sums in lexicographic index order.
double evaluate(const OperatorSpec& spec, std::span<const double> s);
double evaluate1d(const OperatorSpec& spec, double s);

/// Pointwise evaluate over a grid; order-preserving and bitwise equal to the
/// sequential loop (points are independent; STANCU_NNO_THREADS caps threads).
std::vector<double> evaluate_grid(const OperatorSpec& spec,
                                  std::span<const Point> grid);
std::vector<double> evaluate_grid(const OperatorSpec& spec,
                                  std::span<const double> grid_1d);

/// (M_0 / sigma(1))^d with the truncated M_0 over the unit period grid.
double boundedness_constant(const ActivationKernel& kernel, int truncation = 40);

}  // namespace stancu

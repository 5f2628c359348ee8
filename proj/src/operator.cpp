#include "stancu/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "stancu/detail/compensated.hpp"
#include "stancu/detail/parallel.hpp"
#include "stancu/errors.hpp"

namespace stancu {

DomainBox::DomainBox(std::vector<double> lo, std::vector<double> up)
    : lower(std::move(lo)), upper(std::move(up)) {
  if (lower.empty() || lower.size() != upper.size()) {
    throw ArgumentError("domain box needs matching nonempty bounds");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) {
      throw ArgumentError("domain box needs a_i < b_i in every coordinate");
    }
  }
}

DomainBox DomainBox::interval(double a, double b) { return DomainBox({a}, {b}); }

DomainBox DomainBox::unit_cube(int dimension) {
  if (dimension < 1) throw ArgumentError("dimension must be >= 1");
  return DomainBox(std::vector<double>(static_cast<std::size_t>(dimension), 0.0),
                   std::vector<double>(static_cast<std::size_t>(dimension), 1.0));
}

bool DomainBox::contains(std::span<const double> s) const {
  if (s.size() != lower.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < lower[i] || s[i] > upper[i]) return false;
  }
  return true;
}

Point DomainBox::clamp(std::span<const double> s) const {
  Point out(s.begin(), s.end());
  for (std::size_t i = 0; i < out.size() && i < lower.size(); ++i) {
    out[i] = std::clamp(out[i], lower[i], upper[i]);
  }
  return out;
}

double DomainBox::max_abs_coordinate() const {
  double m = 0.0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    m = std::max({m, std::abs(lower[i]), std::abs(upper[i])});
  }
  return m;
}

StancuParams::StancuParams(double a, double b) : alpha(a), beta(b) {
  if (!(alpha >= 0.0) || !(beta >= alpha)) {
    throw ArgumentError("Stancu parameters need 0 <= alpha <= beta");
  }
}

IndexSet IndexSet::build(const DomainBox& domain, int n) {
  if (n < 1) throw ArgumentError("resolution n must be >= 1");
  IndexSet idx;
  idx.n = n;
  const int d = domain.dimension();
  idx.lo.resize(static_cast<std::size_t>(d));
  idx.hi.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    idx.lo[ui] = static_cast<long long>(std::ceil(n * domain.lower[ui]));
    idx.hi[ui] = static_cast<long long>(std::floor(n * domain.upper[ui]));
    if (idx.hi[ui] < idx.lo[ui]) {
      throw ResolutionError("empty index range in coordinate " +
                            std::to_string(i) + " at n = " + std::to_string(n));
    }
  }
  return idx;
}

unsigned long long IndexSet::cardinality() const {
  unsigned long long c = 1;
  for (int i = 0; i < dimension(); ++i) {
    c *= static_cast<unsigned long long>(count(i));
  }
  return c;
}

Point perturbed_node(std::span<const long long> k, int n, const StancuParams& p) {
  Point node(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (p.alpha == 0.0 && p.beta == 0.0) {
      node[i] = static_cast<double>(k[i]) / static_cast<double>(n);
    } else {
      node[i] = (static_cast<double>(k[i]) + p.alpha) /
                (static_cast<double>(n) + p.beta);
    }
  }
  return node;
}

NodeEnclosure node_bounds(const DomainBox& domain, int n, const StancuParams& p) {
  NodeEnclosure enc;
  const double shift = p.beta / (static_cast<double>(n) + p.beta);
  const int d = domain.dimension();
  enc.lower.resize(static_cast<std::size_t>(d));
  enc.upper.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    enc.lower[ui] = domain.lower[ui] - shift * domain.lower[ui];
    enc.upper[ui] = domain.upper[ui] + shift;
  }
  return enc;
}

double node_shift_constant(const DomainBox& domain, const StancuParams& p) {
  return std::max(p.alpha, p.alpha + p.beta * domain.max_abs_coordinate());
}

FunctionSource FunctionSource::analytic(
    std::function<double(std::span<const double>)> f, Extension ext) {
  if (!f) throw ArgumentError("analytic source needs a callable");
  FunctionSource src;
  src.fn_ = std::move(f);
  src.ext_ = ext;
  return src;
}

FunctionSource FunctionSource::analytic1d(std::function<double(double)> f,
                                          Extension ext) {
  if (!f) throw ArgumentError("analytic source needs a callable");
  return analytic([fn = std::move(f)](std::span<const double> s) { return fn(s[0]); },
                  ext);
}

FunctionSource FunctionSource::sampled(std::vector<double> values,
                                       std::vector<long long> k_lo,
                                       std::vector<long long> k_hi) {
  if (k_lo.empty() || k_lo.size() != k_hi.size()) {
    throw ArgumentError("sampled source needs matching index bounds");
  }
  unsigned long long expect = 1;
  for (std::size_t i = 0; i < k_lo.size(); ++i) {
    if (k_hi[i] < k_lo[i]) throw ArgumentError("sampled source has empty index range");
    expect *= static_cast<unsigned long long>(k_hi[i] - k_lo[i] + 1);
  }
  if (expect != values.size()) {
    throw DataError("sampled source holds " + std::to_string(values.size()) +
                    " values, index box needs " + std::to_string(expect));
  }
  FunctionSource src;
  src.sampled_ = true;
  src.values_ = std::move(values);
  src.klo_ = std::move(k_lo);
  src.khi_ = std::move(k_hi);
  return src;
}

FunctionSource FunctionSource::sampled1d(std::vector<double> values, long long k_lo) {
  if (values.empty()) throw ArgumentError("sampled source needs values");
  const long long hi = k_lo + static_cast<long long>(values.size()) - 1;
  return sampled(std::move(values), {k_lo}, {hi});
}

bool FunctionSource::covers(const IndexSet& idx) const {
  if (!sampled_) return true;
  if (klo_.size() != idx.lo.size()) return false;
  for (std::size_t i = 0; i < klo_.size(); ++i) {
    if (klo_[i] > idx.lo[i] || khi_[i] < idx.hi[i]) return false;
  }
  return true;
}

OperatorSpec::OperatorSpec(DomainBox domain_, ActivationKernel kernel_, int n_,
                           StancuParams params_, FunctionSource source_,
                           int window_)
    : domain(std::move(domain_)),
      kernel(std::move(kernel_)),
      n(n_),
      params(params_),
      source(std::move(source_)),
      window(window_),
      index_set_(IndexSet::build(domain, n_)) {
  if (kernel.dimension() != domain.dimension()) {
    throw ArgumentError("kernel dimension does not match the domain");
  }
  if (!source.covers(index_set_)) {
    throw DataError("sampled source does not cover the index set at n = " +
                    std::to_string(n));
  }
}

double evaluate(const OperatorSpec& spec, std::span<const double> s) {
  const int d = spec.domain.dimension();
  if (static_cast<int>(s.size()) != d) {
    throw ArgumentError("evaluation point has wrong dimension");
  }
  if (!spec.domain.contains(s)) {
    throw ArgumentError("evaluation point lies outside the domain box");
  }

  const IndexSet& idx = spec.index_set();
  const auto ud = static_cast<std::size_t>(d);

  // Per-coordinate windows and weight rows.
  std::vector<long long> klo(ud), khi(ud);
  std::vector<std::vector<double>> rows(ud);
  for (std::size_t i = 0; i < ud; ++i) {
    const double x = spec.n * s[i];
    long long lo = idx.lo[i];
    long long hi = idx.hi[i];
    if (spec.window > 0) {
      lo = std::max(lo, static_cast<long long>(std::ceil(x)) - spec.window);
      hi = std::min(hi, static_cast<long long>(std::floor(x)) + spec.window);
    }
    klo[i] = lo;
    khi[i] = hi;
    rows[i].resize(static_cast<std::size_t>(hi - lo + 1));
    spec.kernel.weight_row(x, lo, rows[i]);
  }

  // Denominator factors over coordinates.
  double denominator = 1.0;
  for (std::size_t i = 0; i < ud; ++i) {
    detail::NeumaierSum acc;
    for (double w : rows[i]) acc.add(w);
    denominator *= acc.value();
  }

  const bool sampled = spec.source.is_sampled();
  std::vector<long long> k(klo);
  std::vector<long long> strides;
  if (sampled) {
    strides.assign(ud, 1);
    for (std::size_t i = ud; i-- > 1;) {
      strides[i - 1] =
          strides[i] * (spec.source.khi_[i] - spec.source.klo_[i] + 1);
    }
  }

  // Numerator over the windowed index box, lexicographic order.
  detail::NeumaierSum numerator;
  Point node(ud);
  for (;;) {
    double weight = 1.0;
    for (std::size_t i = 0; i < ud; ++i) {
      weight *= rows[i][static_cast<std::size_t>(k[i] - klo[i])];
    }

    double value;
    if (sampled) {
      long long flat = 0;
      for (std::size_t i = 0; i < ud; ++i) {
        flat += (k[i] - spec.source.klo_[i]) * strides[i];
      }
      value = spec.source.values_[static_cast<std::size_t>(flat)];
    } else {
      node = perturbed_node(k, spec.n, spec.params);
      if (spec.source.ext_ == FunctionSource::Extension::kClampToDomain) {
        node = spec.domain.clamp(node);
      }
      value = spec.source.fn_(node);
    }
    numerator.add(weight * value);

    std::size_t i = ud;
    while (i-- > 0) {
      if (++k[i] <= khi[i]) break;
      k[i] = klo[i];
      if (i == 0) return numerator.value() / denominator;
    }
  }
}

double evaluate1d(const OperatorSpec& spec, double s) {
  return evaluate(spec, std::span<const double>(&s, 1));
}

std::vector<double> evaluate_grid(const OperatorSpec& spec,
                                  std::span<const Point> grid) {
  std::vector<double> out(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t i) {
    out[i] = evaluate(spec, grid[i]);
  });
  return out;
}

std::vector<double> evaluate_grid(const OperatorSpec& spec,
                                  std::span<const double> grid_1d) {
  std::vector<double> out(grid_1d.size());
  detail::parallel_for(grid_1d.size(), [&](std::size_t i) {
    out[i] = evaluate1d(spec, grid_1d[i]);
  });
  return out;
}

double boundedness_constant(const ActivationKernel& kernel, int truncation) {
  const auto grid = unit_period_grid();
  const double m0 = discrete_moment(kernel, 0.0, truncation, grid);
  return std::pow(m0 / kernel.sigma_at_one(), kernel.dimension());
}

}  // namespace stancu

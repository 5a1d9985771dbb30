#include "hierq/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "facial_set.hpp"
#include "hierq/errors.hpp"

namespace hierq {

namespace {

std::vector<double> to_vector(const JointDistribution& p) {
  return {p.probabilities().begin(), p.probabilities().end()};
}

void check_subset(const JointDistribution& p, std::span<const std::size_t> subset) {
  std::vector<bool> seen(p.variables(), false);
  for (std::size_t v : subset) {
    if (v >= p.variables()) {
      throw InvalidArgument("variable index " + std::to_string(v) + " out of range for " +
                            std::to_string(p.variables()) + " variables");
    }
    if (seen[v]) throw InvalidArgument("duplicate variable index " + std::to_string(v));
    seen[v] = true;
  }
}

std::vector<detail::MarginIndex> order_k_margins(const JointDistribution& p, std::size_t k) {
  std::vector<detail::MarginIndex> margins;
  for (const auto& subset : interaction_subsets(p.variables(), k)) {
    margins.push_back(detail::build_margin_index(p.alphabet_sizes(), subset));
  }
  return margins;
}

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

}  // namespace

JointDistribution marginalize(const JointDistribution& p, std::span<const std::size_t> subset) {
  check_subset(p, subset);
  if (subset.empty()) throw InvalidArgument("marginalize: empty variable subset");
  const std::vector<std::size_t> vars(subset.begin(), subset.end());
  const auto index = detail::build_margin_index(p.alphabet_sizes(), vars);
  std::vector<std::size_t> sizes;
  for (std::size_t v : vars) sizes.push_back(p.alphabet_sizes()[v]);
  return JointDistribution::from_weights(std::move(sizes), detail::margin_of(to_vector(p), index));
}

double shannon_entropy(const JointDistribution& p) {
  double h = 0.0;
  for (double x : p.probabilities()) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double kl_divergence(const JointDistribution& p, const JointDistribution& q) {
  if (!p.same_shape(q)) throw InvalidArgument("kl_divergence: distributions differ in shape");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    if (pi <= 0.0) continue;
    if (q[i] <= 0.0) return kInfiniteDivergence;
    d += pi * std::log2(pi / q[i]);
  }
  return d;
}

double multi_information(const JointDistribution& p) {
  double sum = 0.0;
  for (std::size_t v = 0; v < p.variables(); ++v) {
    const std::size_t single[] = {v};
    sum += shannon_entropy(marginalize(p, single));
  }
  return sum - shannon_entropy(p);
}

double max_entropy_bits(const JointDistribution& p) {
  double bits = 0.0;
  for (std::size_t s : p.alphabet_sizes()) bits += std::log2(static_cast<double>(s));
  return bits;
}

std::vector<VariableSubset> interaction_subsets(std::size_t n, std::size_t k) {
  std::vector<VariableSubset> out;
  if (k == 0 || k > n) return out;
  VariableSubset current(k);
  std::iota(current.begin(), current.end(), std::size_t{0});
  for (;;) {
    out.push_back(current);
    std::size_t i = k;
    while (i-- > 0) {
      if (current[i] < n - k + i) break;
      if (i == 0) return out;
    }
    ++current[i];
    for (std::size_t j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
}

double max_marginal_mismatch(const JointDistribution& p, const JointDistribution& q,
                             std::size_t k) {
  if (!p.same_shape(q)) throw InvalidArgument("max_marginal_mismatch: shape mismatch");
  if (k == 0 || k > p.variables()) throw InvalidArgument("max_marginal_mismatch: invalid order");
  const auto pv = to_vector(p);
  const auto qv = to_vector(q);
  double worst = 0.0;
  for (const auto& m : order_k_margins(p, k)) {
    worst = std::max(worst, l1_distance(detail::margin_of(pv, m), detail::margin_of(qv, m)));
  }
  return worst;
}

ProjectionResult ipf_project(const JointDistribution& p, std::size_t k,
                             const IpfOptions& options) {
  const std::size_t n = p.variables();
  if (k < 1 || k > n) {
    throw InvalidArgument("ipf_project: order " + std::to_string(k) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  if (!(options.tolerance > 0.0)) throw InvalidArgument("ipf_project: tolerance must be positive");

  if (k == n) {
    const auto support = static_cast<std::size_t>(
        std::count_if(p.probabilities().begin(), p.probabilities().end(),
                      [](double x) { return x > 0.0; }));
    return ProjectionResult{p, k, 0, 0.0, support};
  }

  const auto margins = order_k_margins(p, k);
  const auto target_table = to_vector(p);
  std::vector<std::vector<double>> targets;
  targets.reserve(margins.size());
  for (const auto& m : margins) targets.push_back(detail::margin_of(target_table, m));

  // Order 1 always projects onto the full product support; higher orders may
  // need the LP.
  std::vector<bool> support;
  if (k == 1) {
    support.assign(p.size(), true);
    for (std::size_t mi = 0; mi < margins.size(); ++mi) {
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (targets[mi][margins[mi].cell_to_margin[x]] <= 0.0) support[x] = false;
      }
    }
  } else {
    support = detail::projection_support(p, margins);
  }
  const auto support_size = static_cast<std::size_t>(std::count(support.begin(), support.end(), true));

  std::vector<double> q(p.size(), 0.0);
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (support[x]) q[x] = 1.0 / static_cast<double>(support_size);
  }

  auto mismatch = [&] {
    double worst = 0.0;
    for (std::size_t mi = 0; mi < margins.size(); ++mi) {
      worst = std::max(worst, l1_distance(detail::margin_of(q, margins[mi]), targets[mi]));
    }
    return worst;
  };

  std::vector<double> ratio;
  double residual = mismatch();
  std::size_t cycles = 0;
  while (residual > options.tolerance) {
    if (cycles == options.max_cycles) {
      throw ConvergenceFailure("ipf_project: order " + std::to_string(k) + " did not converge in " +
                                   std::to_string(options.max_cycles) +
                                   " cycles (marginal mismatch " + scientific(residual) + ")",
                               residual);
    }
    for (std::size_t mi = 0; mi < margins.size(); ++mi) {
      const auto& m = margins[mi];
      ratio = detail::margin_of(q, m);
      for (std::size_t cell = 0; cell < ratio.size(); ++cell) {
        ratio[cell] = ratio[cell] > 0.0 ? targets[mi][cell] / ratio[cell] : 0.0;
      }
      for (std::size_t x = 0; x < q.size(); ++x) q[x] *= ratio[m.cell_to_margin[x]];
    }
    const double total = std::accumulate(q.begin(), q.end(), 0.0);
    for (double& v : q) v /= total;
    ++cycles;
    residual = mismatch();
  }

  return ProjectionResult{JointDistribution::from_weights(p.alphabet_sizes(), std::move(q)), k,
                          cycles, residual, support_size};
}

double HierarchySpectrum::total() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

double HierarchySpectrum::max_residual() const {
  double worst = 0.0;
  for (const auto& l : levels) worst = std::max(worst, l.residual);
  return worst;
}

bool HierarchySpectrum::any_infinite() const {
  return std::any_of(levels.begin(), levels.end(), [](const auto& l) { return l.infinite; });
}

HierarchySpectrum hierarchy_spectrum(const JointDistribution& p, const IpfOptions& options) {
  const std::size_t n = p.variables();
  HierarchySpectrum spectrum;
  spectrum.variables = n;
  spectrum.projections.reserve(n + 1);
  spectrum.projections.push_back(JointDistribution::uniform(p.alphabet_sizes()));

  for (std::size_t k = 1; k <= n; ++k) {
    ProjectionResult projection = ipf_project(p, k, options);
    const double value = kl_divergence(projection.distribution, spectrum.projections.back());
    spectrum.values.push_back(value);
    spectrum.levels.push_back(LevelDiagnostics{k, projection.iterations,
                                               projection.max_marginal_mismatch,
                                               is_infinite_divergence(value)});
    spectrum.projections.push_back(std::move(projection.distribution));
  }
  return spectrum;
}

}  // namespace hierq

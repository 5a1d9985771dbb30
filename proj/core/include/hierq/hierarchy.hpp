#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "hierq/distribution.hpp"

// Hierarchical decomposition of the correlations in a joint distribution.
//
// The order-k model family is the closure of the exponential family whose
// log-probabilities are sums of interaction terms on at most k variables.
// The information projection of p onto it is the maximum-entropy
// distribution sharing every size-k marginal of p; it is computed here by
// iterative proportional fitting (IPF) started from the uniform distribution,
// restricted to the support the projection is known to have.
//
// Level k of the spectrum is D(p^(k) || p^(k-1)) in bits, with p^(0) uniform
// and p^(n) = p. The levels telescope to sum_i log2|X_i| - H(p).
namespace hierq {

using VariableSubset = std::vector<std::size_t>;

struct IpfOptions {
  double tolerance = 1e-12;       // max L1 marginal mismatch over all subsets
  std::size_t max_cycles = 10000; // full sweeps over the subset list
};

// Divergences with a support violation are +infinity.
inline constexpr double kInfiniteDivergence = std::numeric_limits<double>::infinity();
inline bool is_infinite_divergence(double d) noexcept { return d == kInfiniteDivergence; }

// Sum over the variables outside `subset`. The result's variables follow the
// order given in `subset`. Throws InvalidArgument on duplicate or
// out-of-range indices.
JointDistribution marginalize(const JointDistribution& p, std::span<const std::size_t> subset);

// Entropy in bits, 0 log 0 = 0.
double shannon_entropy(const JointDistribution& p);

// D(p || q) in bits, or kInfiniteDivergence when q(x) = 0 < p(x) somewhere.
// Throws InvalidArgument for mismatched shapes.
double kl_divergence(const JointDistribution& p, const JointDistribution& q);

// sum_i H(X_i) - H(p)
double multi_information(const JointDistribution& p);

// sum_i log2 |X_i|, the entropy of the uniform distribution.
double max_entropy_bits(const JointDistribution& p);

// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<VariableSubset> interaction_subsets(std::size_t n, std::size_t k);

// Largest L1 distance between corresponding size-k marginals of p and q.
double max_marginal_mismatch(const JointDistribution& p, const JointDistribution& q,
                             std::size_t k);

struct ProjectionResult {
  JointDistribution distribution;
  std::size_t order = 0;
  std::size_t iterations = 0;         // full IPF cycles performed
  double max_marginal_mismatch = 0.0;  // at termination
  std::size_t support_size = 0;        // cells the projection may occupy
};

// Information projection of p onto the order-k family. k == n returns p.
// Throws InvalidArgument for k outside [1, n] or tolerance <= 0, and
// ConvergenceFailure (carrying the final mismatch) if max_cycles runs out.
ProjectionResult ipf_project(const JointDistribution& p, std::size_t k,
                             const IpfOptions& options = {});

struct LevelDiagnostics {
  std::size_t order = 0;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool infinite = false;
};

struct HierarchySpectrum {
  std::size_t variables = 0;
  std::vector<double> values;  // values[k-1] = I^(k), bits
  std::vector<LevelDiagnostics> levels;
  std::vector<JointDistribution> projections;  // p^(0) .. p^(n)

  double level(std::size_t k) const { return values.at(k - 1); }
  double total() const;
  double max_residual() const;
  bool any_infinite() const;
};

HierarchySpectrum hierarchy_spectrum(const JointDistribution& p, const IpfOptions& options = {});

}  // namespace hierq

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hierq/distribution.hpp"
#include "hierq/hierarchy.hpp"

// Invariant audits for hierarchy spectra. Marginals and divergences are
// recomputed here by brute force rather than through the library's own
// index tables.
namespace hierq::selfcheck {

// Largest L1 gap between matching size-k marginals of p and q.
double marginal_match_residual(const JointDistribution& p, const JointDistribution& q,
                               std::size_t k);

// max_k |D(p||p^(k-1)) - D(p||p^(k)) - I^(k)|
double pythagorean_residual(const JointDistribution& p, const HierarchySpectrum& spectrum);

// |sum_k I^(k) - (sum_i log2|X_i| - H(p))|
double sum_rule_residual(const JointDistribution& p, const HierarchySpectrum& spectrum);

// max_k over all projections p^(k), 1 <= k < n, of marginal_match_residual.
double projection_marginal_residual(const JointDistribution& p, const HierarchySpectrum& spectrum);

// Largest increase along D(p||p^(1)) >= D(p||p^(2)) >= ... >= 0.
double refinement_violation(const JointDistribution& p, const HierarchySpectrum& spectrum);

// Distance of p^(1) from the product of the single-variable marginals.
double product_form_residual(const JointDistribution& p, const HierarchySpectrum& spectrum);

// Random distributions on {0,1}^3 (flat Dirichlet weights). The first
// `with_zero_cells` of them get one or two cells set to zero.
std::vector<JointDistribution> random_binary3(std::size_t count, std::uint64_t seed,
                                              std::size_t with_zero_cells);

struct Audit {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Oracle equivalence plus the invariant audits over random distributions and
// both state families; used by `hierq selftest`.
std::vector<Audit> run_selftest(std::uint64_t seed = 20240601);

}  // namespace hierq::selfcheck

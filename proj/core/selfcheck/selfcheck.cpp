#include "selfcheck.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "hierq/errors.hpp"
#include "hierq/measurement.hpp"
#include "hierq/quantum_state.hpp"
#include "maxent_oracle.hpp"

namespace hierq::selfcheck {

namespace {

double divergence_bits(const JointDistribution& p, const JointDistribution& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
    d += p[i] * std::log(p[i] / q[i]);
  }
  return d / std::log(2.0);
}

double entropy_bits(const JointDistribution& p) {
  double h = 0.0;
  for (double v : p.probabilities()) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h / std::log(2.0);
}

std::map<std::vector<std::size_t>, double> margin_map(const JointDistribution& p,
                                                      const std::vector<std::size_t>& vars) {
  std::map<std::vector<std::size_t>, double> out;
  for (std::size_t flat = 0; flat < p.size(); ++flat) {
    const auto full = p.outcome(flat);
    std::vector<std::size_t> key;
    for (std::size_t v : vars) key.push_back(full[v]);
    out[key] += p[flat];
  }
  return out;
}

}  // namespace

double marginal_match_residual(const JointDistribution& p, const JointDistribution& q,
                               std::size_t k) {
  const std::size_t n = p.variables();
  double worst = 0.0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask & (1U << v)) vars.push_back(v);
    }
    auto mp = margin_map(p, vars);
    auto mq = margin_map(q, vars);
    double l1 = 0.0;
    for (const auto& [key, value] : mp) l1 += std::abs(value - mq[key]);
    worst = std::max(worst, l1);
  }
  return worst;
}

double pythagorean_residual(const JointDistribution& p, const HierarchySpectrum& s) {
  double worst = 0.0;
  for (std::size_t k = 1; k <= s.variables; ++k) {
    const double outer = divergence_bits(p, s.projections[k - 1]);
    const double inner = divergence_bits(p, s.projections[k]);
    worst = std::max(worst, std::abs(outer - inner - s.level(k)));
  }
  return worst;
}

double sum_rule_residual(const JointDistribution& p, const HierarchySpectrum& s) {
  double log_volume = 0.0;
  for (std::size_t a : p.alphabet_sizes()) log_volume += std::log2(static_cast<double>(a));
  return std::abs(s.total() - (log_volume - entropy_bits(p)));
}

double projection_marginal_residual(const JointDistribution& p, const HierarchySpectrum& s) {
  double worst = 0.0;
  for (std::size_t k = 1; k < s.variables; ++k) {
    worst = std::max(worst, marginal_match_residual(p, s.projections[k], k));
  }
  return worst;
}

double refinement_violation(const JointDistribution& p, const HierarchySpectrum& s) {
  double worst = 0.0;
  double previous = divergence_bits(p, s.projections[1]);
  for (std::size_t k = 2; k <= s.variables; ++k) {
    const double current = divergence_bits(p, s.projections[k]);
    worst = std::max(worst, current - previous);
    previous = current;
  }
  return std::max(worst, -previous);
}

double product_form_residual(const JointDistribution& p, const HierarchySpectrum& s) {
  const std::size_t n = p.variables();
  std::vector<std::map<std::vector<std::size_t>, double>> singles;
  for (std::size_t v = 0; v < n; ++v) singles.push_back(margin_map(p, {v}));
  double worst = 0.0;
  for (std::size_t flat = 0; flat < p.size(); ++flat) {
    const auto x = p.outcome(flat);
    double product = 1.0;
    for (std::size_t v = 0; v < n; ++v) product *= singles[v][{x[v]}];
    worst = std::max(worst, std::abs(product - s.projections[1][flat]));
  }
  return worst;
}

std::vector<JointDistribution> random_binary3(std::size_t count, std::uint64_t seed,
                                              std::size_t with_zero_cells) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> weight(1.0);
  std::uniform_int_distribution<int> cell(0, 7);
  std::vector<JointDistribution> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> w(8);
    for (double& v : w) v = weight(rng);
    if (i < with_zero_cells) {
      w[static_cast<std::size_t>(cell(rng))] = 0.0;
      if (i % 2 == 1) w[static_cast<std::size_t>(cell(rng))] = 0.0;
    }
    out.push_back(JointDistribution::from_weights({2, 2, 2}, std::move(w)));
  }
  return out;
}

std::vector<Audit> run_selftest(std::uint64_t seed) {
  const auto randoms = random_binary3(20, seed, 4);

  std::vector<JointDistribution> corpus = randoms;
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    for (const auto& psi : {ghz_state(3), w_state(3)}) {
      const auto rho = mix_with_maximally_mixed(pure_to_density(psi), alpha);
      corpus.push_back(born_statistics(rho, computational_basis_projectors()));
    }
  }

  double oracle_tv = 0.0;
  for (const auto& p : randoms) {
    std::array<double, 8> cells{};
    std::copy(p.probabilities().begin(), p.probabilities().end(), cells.begin());
    const auto reference = oracle::pairwise_maxent_binary3(cells);
    const auto projected = ipf_project(p, 2);
    oracle_tv = std::max(oracle_tv, oracle::total_variation(reference, projected.distribution.probabilities()));
  }

  double pythagoras = 0.0, sum_rule = 0.0, negativity = 0.0, marginals = 0.0, refinement = 0.0,
         product = 0.0, permutation = 0.0;
  for (const auto& p : corpus) {
    const auto s = hierarchy_spectrum(p);
    pythagoras = std::max(pythagoras, pythagorean_residual(p, s));
    sum_rule = std::max(sum_rule, sum_rule_residual(p, s));
    for (double v : s.values) negativity = std::max(negativity, -v);
    marginals = std::max(marginals, projection_marginal_residual(p, s));
    refinement = std::max(refinement, refinement_violation(p, s));
    product = std::max(product, product_form_residual(p, s));

    // Relabel variables (x0, x1, x2) -> (x2, x0, x1).
    std::vector<double> permuted(8);
    for (std::size_t flat = 0; flat < 8; ++flat) {
      const auto x = p.outcome(flat);
      const std::size_t y[] = {x[2], x[0], x[1]};
      permuted[p.flat_index(y)] = p[flat];
    }
    const auto sp = hierarchy_spectrum(JointDistribution({2, 2, 2}, permuted));
    for (std::size_t k = 1; k <= 3; ++k) {
      permutation = std::max(permutation, std::abs(sp.level(k) - s.level(k)));
    }
  }

  auto audit = [](const char* name, double worst, double tol) {
    return Audit{name, worst, tol, worst <= tol};
  };
  return {
      audit("oracle_equivalence_tv", oracle_tv, 1e-6),
      audit("pythagorean_chain", pythagoras, 1e-7),
      audit("sum_rule", sum_rule, 1e-9),
      audit("nonnegative_levels", negativity, 1e-9),
      audit("projection_marginals", marginals, 1e-10),
      audit("monotone_refinement", refinement, 1e-9),
      audit("order1_product_form", product, 1e-10),
      audit("permutation_equivariance", permutation, 1e-10),
  };
}

}  // namespace hierq::selfcheck

#include "hierq/distribution.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "hierq/errors.hpp"

namespace hierq {

namespace {

std::size_t table_size(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) {
    throw InvalidArgument("distribution needs at least one variable");
  }
  std::size_t total = 1;
  for (std::size_t s : sizes) {
    if (s == 0) throw InvalidArgument("alphabet sizes must be positive");
    if (total > (std::size_t{1} << 40) / s) throw InvalidArgument("outcome table too large");
    total *= s;
  }
  return total;
}

}  // namespace

JointDistribution::JointDistribution(std::vector<std::size_t> alphabet_sizes,
                                     std::vector<double> probabilities)
    : sizes_(std::move(alphabet_sizes)), probs_(std::move(probabilities)) {
  const std::size_t expected = table_size(sizes_);
  if (probs_.size() != expected) {
    throw InvalidArgument("probability table has " + std::to_string(probs_.size()) +
                          " entries, alphabet sizes require " + std::to_string(expected));
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InvalidArgument("probabilities must be finite and nonnegative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw InvalidArgument("probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

JointDistribution JointDistribution::from_weights(std::vector<std::size_t> alphabet_sizes,
                                                  std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgument("weights must be finite and nonnegative");
    }
    total += w;
  }
  if (!(total > 0.0)) throw InvalidArgument("weights sum to zero");
  for (double& w : weights) w /= total;
  return JointDistribution(std::move(alphabet_sizes), std::move(weights));
}

JointDistribution JointDistribution::uniform(std::vector<std::size_t> alphabet_sizes) {
  const std::size_t n = table_size(alphabet_sizes);
  return JointDistribution(std::move(alphabet_sizes),
                           std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

JointDistribution JointDistribution::uniform_binary(std::size_t n) {
  return uniform(std::vector<std::size_t>(n, 2));
}

std::size_t JointDistribution::flat_index(std::span<const std::size_t> outcome) const {
  if (outcome.size() != sizes_.size()) {
    throw InvalidArgument("outcome tuple length does not match variable count");
  }
  std::size_t flat = 0;
  for (std::size_t v = 0; v < sizes_.size(); ++v) {
    if (outcome[v] >= sizes_[v]) throw InvalidArgument("outcome symbol out of range");
    flat = flat * sizes_[v] + outcome[v];
  }
  return flat;
}

std::vector<std::size_t> JointDistribution::outcome(std::size_t flat) const {
  if (flat >= probs_.size()) throw InvalidArgument("flat index out of range");
  std::vector<std::size_t> out(sizes_.size());
  for (std::size_t v = sizes_.size(); v-- > 0;) {
    out[v] = flat % sizes_[v];
    flat /= sizes_[v];
  }
  return out;
}

}  // namespace hierq

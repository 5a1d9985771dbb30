#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hierq {

inline constexpr double kNormalizationTolerance = 1e-12;

// Probability table over a product alphabet X_0 x ... x X_{n-1}, stored flat
// with variable 0 as the most significant digit (matches the qubit ordering
// of quantum_state.hpp).
class JointDistribution {
 public:
  // Throws InvalidArgument if any alphabet is empty, the table length does
  // not match the product of alphabet sizes, an entry is negative or
  // non-finite, or the entries do not sum to 1 within kNormalizationTolerance.
  JointDistribution(std::vector<std::size_t> alphabet_sizes, std::vector<double> probabilities);

  // Rescales nonnegative weights to sum to one.
  static JointDistribution from_weights(std::vector<std::size_t> alphabet_sizes,
                                        std::vector<double> weights);
  static JointDistribution uniform(std::vector<std::size_t> alphabet_sizes);
  static JointDistribution uniform_binary(std::size_t n);

  std::size_t variables() const noexcept { return sizes_.size(); }
  const std::vector<std::size_t>& alphabet_sizes() const noexcept { return sizes_; }
  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probabilities() const noexcept { return probs_; }
  double operator[](std::size_t flat) const { return probs_[flat]; }

  std::size_t flat_index(std::span<const std::size_t> outcome) const;
  std::vector<std::size_t> outcome(std::size_t flat) const;

  bool same_shape(const JointDistribution& other) const noexcept {
    return sizes_ == other.sizes_;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<double> probs_;
};

}  // namespace hierq

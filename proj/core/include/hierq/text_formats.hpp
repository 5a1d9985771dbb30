#pragma once

#include <filesystem>
#include <iosfwd>

#include "hierq/distribution.hpp"
#include "hierq/quantum_state.hpp"

// Plain-text inputs. Blank lines and lines starting with '#' are ignored.
//
// Distribution file:
//   n s_1 ... s_n          variable count and alphabet sizes
//   p_0                    one probability per line, flat index order
//   ...                    (variable 0 most significant)
// The probabilities must sum to 1 within 1e-9 and are renormalized.
//
// State file:
//   n                      qubit count
//   re [im]                one amplitude per line, 2^n lines
// The amplitudes must be normalized within 1e-9 and are renormalized.
namespace hierq {

inline constexpr double kTextInputTolerance = 1e-9;

JointDistribution read_distribution(std::istream& in);
JointDistribution read_distribution(const std::filesystem::path& path);
void write_distribution(const JointDistribution& p, std::ostream& out);

StateVector read_state(std::istream& in);
StateVector read_state(const std::filesystem::path& path);

}  // namespace hierq

#pragma once

#include <array>
#include <span>

// Reference solver for the pairwise maximum-entropy problem on three binary
// variables, independent of the IPF projection.
//
// Two distributions on {0,1}^3 share all pairwise marginals exactly when
// they differ by a multiple of the parity function chi(x) = (-1)^{|x|}, so
// the feasible set is the segment {p + t chi} clipped to the simplex and the
// maximum-entropy point is found by bisecting on the derivative of the
// (concave) entropy along it.
namespace hierq::oracle {

using Table8 = std::array<double, 8>;

// Cells in flat order, variable 0 most significant.
Table8 pairwise_maxent_binary3(std::span<const double, 8> p);

// Entropy in bits along the segment, for inspection.
double entropy_bits(std::span<const double, 8> q);

double total_variation(std::span<const double> a, std::span<const double> b);

}  // namespace hierq::oracle

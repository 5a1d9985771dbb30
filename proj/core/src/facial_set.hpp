#pragma once

#include <cstddef>
#include <vector>

#include "hierq/distribution.hpp"

namespace hierq::detail {

// Flat-cell to marginal-cell lookup for one ordered variable subset.
struct MarginIndex {
  std::vector<std::size_t> variables;
  std::vector<std::size_t> cell_to_margin;
  std::size_t margin_cells = 0;
};

MarginIndex build_margin_index(const std::vector<std::size_t>& alphabet_sizes,
                               const std::vector<std::size_t>& variables);

std::vector<double> margin_of(const std::vector<double>& table, const MarginIndex& index);

// Support of the information projection of p onto the family fixed by the
// given marginals: the cells some distribution with those marginals puts
// mass on. Found with one linear program when the marginals alone do not
// settle it.
std::vector<bool> projection_support(const JointDistribution& p,
                                     const std::vector<MarginIndex>& margins);

// Maximizes c.x subject to A x <= b, x >= 0, for b >= 0 (the origin is
// feasible). Dense tableau with Bland's rule. Returns the optimal x.
// Throws NumericalFailure if the problem is unbounded.
std::vector<double> simplex_maximize(const std::vector<std::vector<double>>& a,
                                     const std::vector<double>& b, const std::vector<double>& c);

}  // namespace hierq::detail

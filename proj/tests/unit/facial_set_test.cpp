#include "doctest.h"
#include "facial_set.hpp"
#include "hierq/errors.hpp"
#include "hierq/hierarchy.hpp"

using namespace hierq;

namespace {

std::vector<detail::MarginIndex> pair_margins(const JointDistribution& p) {
  std::vector<detail::MarginIndex> out;
  for (const auto& s : interaction_subsets(p.variables(), 2)) {
    out.push_back(detail::build_margin_index(p.alphabet_sizes(), s));
  }
  return out;
}

}  // namespace

TEST_CASE("simplex solves a textbook LP") {
  // max 3x + 2y  s.t.  x + y <= 4,  x + 3y <= 6,  x <= 3
  const auto x = detail::simplex_maximize({{1, 1}, {1, 3}, {1, 0}}, {4, 6, 3}, {3, 2});
  CHECK(x[0] == doctest::Approx(3.0));
  CHECK(x[1] == doctest::Approx(1.0));
}

TEST_CASE("simplex terminates on degenerate zero right-hand sides") {
  // max x + y  s.t.  x - y <= 0,  y - x <= 0,  x <= 1
  const auto x = detail::simplex_maximize({{1, -1}, {-1, 1}, {1, 0}}, {0, 0, 1}, {1, 1});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(1.0));
}

TEST_CASE("simplex reports unbounded problems") {
  CHECK_THROWS_AS(detail::simplex_maximize({{1, -1}}, {1}, {0, 1}), NumericalFailure);
}

TEST_CASE("margin index maps cells most-significant first") {
  const auto idx = detail::build_margin_index({2, 3, 2}, {2, 0});
  CHECK(idx.margin_cells == 4);
  // flat 7 = (1, 0, 1): margin digits (x2, x0) = (1, 1) -> 3
  CHECK(idx.cell_to_margin[7] == 3);
  // flat 4 = (0, 2, 0): (0, 0) -> 0
  CHECK(idx.cell_to_margin[4] == 0);
}

TEST_CASE("projection support") {
  SUBCASE("full-support input keeps every cell") {
    const auto p = JointDistribution::from_weights({2, 2, 2}, {1, 2, 3, 4, 5, 6, 7, 8});
    const auto s = detail::projection_support(p, pair_margins(p));
    CHECK(std::count(s.begin(), s.end(), true) == 8);
  }
  SUBCASE("a zero cell not forced by the marginals is refilled") {
    const auto p = JointDistribution::from_weights({2, 2, 2}, {1, 2, 3, 0, 5, 6, 7, 8});
    const auto s = detail::projection_support(p, pair_margins(p));
    CHECK(std::count(s.begin(), s.end(), true) == 8);
  }
  SUBCASE("pure W: cell 000 is forced to zero by the pairwise marginals") {
    const auto p = JointDistribution::from_weights({2, 2, 2}, {0, 1, 1, 0, 1, 0, 0, 0});
    const auto s = detail::projection_support(p, pair_margins(p));
    const std::vector<bool> expected = {false, true, true, false, true, false, false, false};
    CHECK(s == expected);
  }
  SUBCASE("parity-even support is its own projection support") {
    // Uniform on even-weight strings has uniform pair marginals; adding the
    // parity direction reaches the odd cells, so everything is supportable.
    const auto p = JointDistribution::from_weights({2, 2, 2}, {1, 0, 0, 1, 0, 1, 1, 0});
    const auto s = detail::projection_support(p, pair_margins(p));
    CHECK(std::count(s.begin(), s.end(), true) == 8);
  }
}

#include <cmath>

#include "doctest.h"
#include "hierq/errors.hpp"
#include "hierq/sweep.hpp"

using namespace hierq;

namespace {

FamilySpec spec_for(Family f) {
  FamilySpec spec;
  spec.family = f;
  return spec;
}

SweepTable synthetic(const std::vector<double>& level1) {
  SweepTable t;
  t.family_label = "synthetic";
  t.variables = 1;
  for (std::size_t i = 0; i < level1.size(); ++i) {
    SweepRow r;
    r.alpha = static_cast<double>(i) / static_cast<double>(level1.size());
    r.spectrum.variables = 1;
    r.spectrum.values = {level1[i]};
    t.rows.push_back(r);
  }
  return t;
}

}  // namespace

TEST_CASE("grids") {
  const auto g = default_grid();
  REQUIRE(g.size() == 101);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[37] == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(uniform_grid(0.2, 0.4, 1) == std::vector<double>{0.2});
  CHECK(uniform_grid(0.0, 1.0, 0).empty());
}

TEST_CASE("GHZ endpoints") {
  const std::vector<double> grid = {0.0, 1.0};
  const auto t = run_sweep(spec_for(Family::Ghz), grid);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.family_label == "GHZ");
  for (double v : t.rows[0].spectrum.values) CHECK(std::abs(v) <= 1e-12);
  CHECK(t.rows[0].entropy_bits == doctest::Approx(3.0));
  CHECK(std::abs(t.rows[1].spectrum.level(1)) <= 1e-12);
  CHECK(std::abs(t.rows[1].spectrum.level(2) - 2.0) <= 1e-9);
  CHECK(std::abs(t.rows[1].spectrum.level(3)) <= 1e-9);
  for (const auto& r : t.rows) CHECK(r.sum_residual <= 1e-9);
}

TEST_CASE("W at alpha 0 is flat") {
  const std::vector<double> grid = {0.0};
  const auto t = run_sweep(spec_for(Family::W), grid);
  for (double v : t.rows[0].spectrum.values) CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("sweep rows equal direct single-alpha evaluations") {
  const auto spec = spec_for(Family::W);
  const std::vector<double> grid = {0.15, 0.5, 0.95};
  const auto t = run_sweep(spec, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto p = family_distribution(spec, grid[i]);
    const auto s = hierarchy_spectrum(p);
    for (std::size_t k = 1; k <= 3; ++k) CHECK(std::abs(t.rows[i].spectrum.level(k) - s.level(k)) <= 1e-12);
    CHECK(std::abs(t.rows[i].entropy_bits - shannon_entropy(p)) <= 1e-12);
  }
}

TEST_CASE("parallel sweep matches sequential") {
  const auto spec = spec_for(Family::W);
  const auto grid = uniform_grid(0.0, 1.0, 21);
  const auto seq = run_sweep(spec, grid);
  const auto par = run_sweep(spec, grid, {IpfOptions{}, 4});
  REQUIRE(seq.rows.size() == par.rows.size());
  for (std::size_t i = 0; i < seq.rows.size(); ++i) {
    CHECK(seq.rows[i].alpha == par.rows[i].alpha);
    CHECK(seq.rows[i].spectrum.values == par.rows[i].spectrum.values);
  }
}

TEST_CASE("sweep errors") {
  const auto spec = spec_for(Family::W);
  const std::vector<double> outside = {0.5, 1.5};
  const std::vector<double> unsorted = {0.5, 0.4};
  const std::vector<double> repeated = {0.5, 0.5};
  CHECK_THROWS_AS(run_sweep(spec, outside), InvalidArgument);
  CHECK_THROWS_AS(run_sweep(spec, unsorted), InvalidArgument);
  CHECK_THROWS_AS(run_sweep(spec, repeated), InvalidArgument);

  FamilySpec custom;
  custom.family = Family::Custom;
  CHECK_THROWS_AS(run_sweep(custom, std::vector<double>{0.5}), InvalidArgument);

  FamilySpec wrong_sites = spec_for(Family::Ghz);
  wrong_sites.measurement.site_unitaries.assign(2, SiteMatrix::Identity());
  CHECK_THROWS_AS(run_sweep(wrong_sites, std::vector<double>{0.5}), InvalidArgument);

  const std::vector<double> grid = {0.2, 0.95};
  try {
    run_sweep(spec, grid, {IpfOptions{1e-15, 2}, 1});
    FAIL("expected ConvergenceFailure");
  } catch (const ConvergenceFailure& e) {
    REQUIRE(e.alpha().has_value());
    CHECK(*e.alpha() == 0.2);
  }
}

TEST_CASE("custom states and rotated measurements") {
  FamilySpec spec;
  spec.family = Family::Custom;
  spec.custom_state = ghz_state(3);
  const std::vector<double> grid = {0.4};
  const auto custom = run_sweep(spec, grid);
  const auto ghz = run_sweep(spec_for(Family::Ghz), grid);
  CHECK(custom.family_label == "custom");
  for (std::size_t k = 1; k <= 3; ++k) {
    CHECK(custom.rows[0].spectrum.level(k) == doctest::Approx(ghz.rows[0].spectrum.level(k)));
  }

  // X-basis readout of GHZ: only even-parity outcomes, a genuine 3-body
  // correlation invisible to pairs.
  FamilySpec rotated = spec_for(Family::Ghz);
  SiteMatrix h;
  h << 1.0, 1.0, 1.0, -1.0;
  rotated.measurement.site_unitaries = {h / std::sqrt(2.0)};
  const auto x = run_sweep(rotated, std::vector<double>{1.0});
  CHECK(std::abs(x.rows[0].spectrum.level(1)) <= 1e-10);
  CHECK(std::abs(x.rows[0].spectrum.level(2)) <= 1e-10);
  CHECK(std::abs(x.rows[0].spectrum.level(3) - 1.0) <= 1e-9);
}

TEST_CASE("find_interior_maximum") {
  SUBCASE("monotone series peaks at the end") {
    const auto m = find_interior_maximum(synthetic({0.0, 0.1, 0.2, 0.3}), 1);
    CHECK(m.row == 3);
    CHECK_FALSE(m.interior);
  }
  SUBCASE("ties go to smaller alpha") {
    const auto m = find_interior_maximum(synthetic({0.0, 0.5, 0.5, 0.1}), 1);
    CHECK(m.row == 1);
    CHECK(m.interior);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(find_interior_maximum(synthetic({}), 1), InvalidArgument);
    CHECK_THROWS_AS(find_interior_maximum(synthetic({1.0}), 2), InvalidArgument);
  }
  SUBCASE("GHZ level 3 stays flat") {
    const auto t = run_sweep(spec_for(Family::Ghz), uniform_grid(0.0, 1.0, 11));
    CHECK(find_interior_maximum(t, 3).value <= 1e-8);
  }
  SUBCASE("W level 3 has an interior peak") {
    const auto t = run_sweep(spec_for(Family::W), default_grid());
    const auto m = find_interior_maximum(t, 3);
    CHECK(m.interior);
    CHECK(m.value > t.rows.back().spectrum.level(3));
    // mpmath oracle places the grid maximum at alpha = 0.73.
    CHECK(m.alpha == doctest::Approx(0.73));
    CHECK(std::abs(m.value - 0.17630526838272055) <= 1e-8);
  }
}

TEST_CASE("check_monotone") {
  CHECK(check_monotone(synthetic({0.0, 0.0, 0.0}), 1, 1e-9).monotone);
  CHECK(check_monotone(synthetic({0.0, 0.1, 0.1 - 1e-12}), 1, 1e-9).monotone);
  const auto r = check_monotone(synthetic({0.0, 0.3, 0.2, 0.1}), 1, 1e-9);
  CHECK_FALSE(r.monotone);
  REQUIRE(r.first_violation.has_value());
  CHECK(*r.first_violation == 2);
  CHECK(r.drop == doctest::Approx(0.1));

  const auto w = run_sweep(spec_for(Family::W), default_grid());
  CHECK(check_monotone(w, 1, 1e-9).monotone);
  CHECK(check_monotone(w, 2, 1e-9).monotone);
  const auto level3 = check_monotone(w, 3, 1e-9);
  CHECK_FALSE(level3.monotone);
  REQUIRE(level3.first_violation.has_value());
  CHECK(w.rows[*level3.first_violation].alpha > 0.73 - 1e-12);
}

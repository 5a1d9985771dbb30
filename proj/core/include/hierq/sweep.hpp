#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hierq/hierarchy.hpp"
#include "hierq/measurement.hpp"
#include "hierq/quantum_state.hpp"

namespace hierq {

enum class Family { Ghz, W, Custom };

// Local measurement settings. No unitaries means the computational basis on
// every site; one unitary is applied on every site; otherwise one per site.
struct MeasurementSpec {
  std::vector<SiteMatrix> site_unitaries;

  std::vector<LocalProjectorBasis> bases(std::size_t qubits) const;
};

// rho(alpha) = alpha |psi><psi| + (1 - alpha) I / 2^n for psi chosen by the
// family tag, measured locally.
struct FamilySpec {
  Family family = Family::W;
  std::size_t qubits = 3;
  std::optional<StateVector> custom_state;  // required for Family::Custom
  MeasurementSpec measurement;

  // Throws InvalidArgument on an inconsistent spec.
  void validate() const;
  StateVector state() const;
  std::string label() const;  // "GHZ", "W" or "custom"
};

// The single-alpha pipeline: build the mixed state and measure it.
DensityOperator family_density(const FamilySpec& spec, double alpha);
JointDistribution family_distribution(const FamilySpec& spec, double alpha);

struct SweepOptions {
  IpfOptions ipf;
  std::size_t workers = 1;  // >1 evaluates grid points on a thread pool
};

struct SweepRow {
  double alpha = 0.0;
  HierarchySpectrum spectrum;
  double entropy_bits = 0.0;
  double sum_residual = 0.0;         // |sum_k I^(k) - (sum_i log2|X_i| - H(p))|
  double projection_residual = 0.0;  // worst marginal mismatch over levels
};

struct SweepTable {
  std::string family_label;
  std::size_t variables = 0;
  std::vector<SweepRow> rows;
};

// alpha_i = start + (stop - start) * i / (points - 1).
std::vector<double> uniform_grid(double start, double stop, std::size_t points);
// 0.00, 0.01, ..., 1.00
std::vector<double> default_grid();

// Rows come back in grid order whatever the worker count. Throws
// InvalidArgument for grids outside [0, 1] or not strictly increasing, and
// rethrows ConvergenceFailure tagged with the offending alpha.
SweepTable run_sweep(const FamilySpec& spec, std::span<const double> grid,
                     const SweepOptions& options = {});

// Fills the diagnostics columns of a row from its spectrum and distribution.
SweepRow make_row(double alpha, const JointDistribution& p, HierarchySpectrum spectrum);

struct InteriorMaximum {
  std::size_t row = 0;
  double alpha = 0.0;
  double value = 0.0;
  bool interior = false;  // argmax is at neither end of the grid
};

// Grid argmax of I^(level); ties go to the smaller alpha.
InteriorMaximum find_interior_maximum(const SweepTable& table, std::size_t level);

struct MonotoneReport {
  bool monotone = true;
  std::optional<std::size_t> first_violation;  // row index where the drop occurs
  double drop = 0.0;                            // size of that drop
};

// Nondecreasing in alpha up to `slack`.
MonotoneReport check_monotone(const SweepTable& table, std::size_t level, double slack);

}  // namespace hierq

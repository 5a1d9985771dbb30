#include "hierq/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "hierq/errors.hpp"

namespace hierq {

std::vector<LocalProjectorBasis> MeasurementSpec::bases(std::size_t qubits) const {
  if (site_unitaries.empty()) {
    return std::vector<LocalProjectorBasis>(qubits, computational_basis_projectors());
  }
  if (site_unitaries.size() == 1) {
    return std::vector<LocalProjectorBasis>(qubits, rotated_basis_projectors(site_unitaries[0]));
  }
  if (site_unitaries.size() != qubits) {
    throw InvalidArgument("measurement spec has " + std::to_string(site_unitaries.size()) +
                          " site unitaries for " + std::to_string(qubits) + " qubits");
  }
  std::vector<LocalProjectorBasis> out;
  out.reserve(qubits);
  for (const auto& u : site_unitaries) out.push_back(rotated_basis_projectors(u));
  return out;
}

void FamilySpec::validate() const {
  if (family == Family::Custom) {
    if (!custom_state) throw InvalidArgument("custom family needs a state");
    if (custom_state->qubits() < 2) throw InvalidArgument("custom state needs at least 2 qubits");
  } else if (qubits < 2 || qubits > kMaxQubits) {
    throw InvalidArgument("qubit count must lie in [2, " + std::to_string(kMaxQubits) + "]");
  }
  measurement.bases(family == Family::Custom ? custom_state->qubits() : qubits);
}

StateVector FamilySpec::state() const {
  switch (family) {
    case Family::Ghz:
      return ghz_state(qubits);
    case Family::W:
      return w_state(qubits);
    case Family::Custom:
      if (!custom_state) throw InvalidArgument("custom family needs a state");
      return *custom_state;
  }
  throw InvalidArgument("unknown family");
}

std::string FamilySpec::label() const {
  switch (family) {
    case Family::Ghz:
      return "GHZ";
    case Family::W:
      return "W";
    case Family::Custom:
      return "custom";
  }
  return "unknown";
}

DensityOperator family_density(const FamilySpec& spec, double alpha) {
  return mix_with_maximally_mixed(pure_to_density(spec.state()), alpha);
}

JointDistribution family_distribution(const FamilySpec& spec, double alpha) {
  const DensityOperator rho = family_density(spec, alpha);
  const auto bases = spec.measurement.bases(rho.qubits());
  return born_statistics(rho, std::span<const LocalProjectorBasis>(bases));
}

std::vector<double> uniform_grid(double start, double stop, std::size_t points) {
  if (points == 0) return {};
  if (points == 1) return {start};
  std::vector<double> grid(points);
  const double span = stop - start;
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = start + span * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  grid.back() = stop;
  return grid;
}

std::vector<double> default_grid() { return uniform_grid(0.0, 1.0, 101); }

SweepRow make_row(double alpha, const JointDistribution& p, HierarchySpectrum spectrum) {
  SweepRow row;
  row.alpha = alpha;
  row.entropy_bits = shannon_entropy(p);
  row.sum_residual = std::abs(spectrum.total() - (max_entropy_bits(p) - row.entropy_bits));
  row.projection_residual = spectrum.max_residual();
  row.spectrum = std::move(spectrum);
  return row;
}

namespace {

void check_grid(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
      throw InvalidArgument("grid value " + std::to_string(grid[i]) + " outside [0, 1]");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw InvalidArgument("grid must be strictly increasing");
    }
  }
}

SweepRow evaluate(const FamilySpec& spec, double alpha, const IpfOptions& ipf) {
  try {
    const JointDistribution p = family_distribution(spec, alpha);
    return make_row(alpha, p, hierarchy_spectrum(p, ipf));
  } catch (const ConvergenceFailure& e) {
    throw ConvergenceFailure(std::string(e.what()) + " at alpha = " + std::to_string(alpha),
                             e.residual(), alpha);
  }
}

}  // namespace

SweepTable run_sweep(const FamilySpec& spec, std::span<const double> grid,
                     const SweepOptions& options) {
  spec.validate();
  check_grid(grid);

  SweepTable table;
  table.family_label = spec.label();
  table.variables = spec.family == Family::Custom ? spec.custom_state->qubits() : spec.qubits;
  table.rows.resize(grid.size());

  const std::size_t workers = std::min(std::max<std::size_t>(options.workers, 1), grid.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) table.rows[i] = evaluate(spec, grid[i], options.ipf);
    return table;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failure_index = grid.size();
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
          try {
            table.rows[i] = evaluate(spec, grid[i], options.ipf);
          } catch (...) {
            // Report the failure at the smallest alpha, as a sequential run would.
            std::lock_guard lock(failure_mutex);
            if (i < failure_index) {
              failure_index = i;
              failure = std::current_exception();
            }
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

namespace {

void check_level(const SweepTable& table, std::size_t level) {
  if (level < 1 || level > table.variables) {
    throw InvalidArgument("level " + std::to_string(level) + " outside [1, " +
                          std::to_string(table.variables) + "]");
  }
}

}  // namespace

InteriorMaximum find_interior_maximum(const SweepTable& table, std::size_t level) {
  if (table.rows.empty()) throw InvalidArgument("find_interior_maximum: empty table");
  check_level(table, level);
  InteriorMaximum best;
  best.value = table.rows[0].spectrum.level(level);
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const double v = table.rows[i].spectrum.level(level);
    if (v > best.value) {
      best.value = v;
      best.row = i;
    }
  }
  best.alpha = table.rows[best.row].alpha;
  best.interior = best.row != 0 && best.row + 1 != table.rows.size();
  return best;
}

MonotoneReport check_monotone(const SweepTable& table, std::size_t level, double slack) {
  if (table.rows.empty()) throw InvalidArgument("check_monotone: empty table");
  check_level(table, level);
  MonotoneReport report;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const double drop = table.rows[i - 1].spectrum.level(level) - table.rows[i].spectrum.level(level);
    if (drop > slack) {
      report.monotone = false;
      report.first_violation = i;
      report.drop = drop;
      break;
    }
  }
  return report;
}

}  // namespace hierq

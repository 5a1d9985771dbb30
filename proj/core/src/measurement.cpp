#include "hierq/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hierq/errors.hpp"

namespace hierq {

namespace {

double max_abs(const SiteMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

LocalProjectorBasis computational_basis_projectors() {
  SiteMatrix p0 = SiteMatrix::Zero();
  SiteMatrix p1 = SiteMatrix::Zero();
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return LocalProjectorBasis({p0, p1});
}

double unitarity_residual(const SiteMatrix& u) {
  return max_abs(u.adjoint() * u - SiteMatrix::Identity());
}

LocalProjectorBasis rotated_basis_projectors(const SiteMatrix& u) {
  const double residual = unitarity_residual(u);
  if (!(residual <= kUnitaryTolerance)) {
    throw InvalidArgument("rotated_basis_projectors: matrix is not unitary (residual " +
                          std::to_string(residual) + ")");
  }
  std::vector<SiteMatrix> projectors;
  projectors.reserve(2);
  for (int i = 0; i < 2; ++i) {
    const Eigen::Vector2cd column = u.col(i);
    projectors.push_back(column * column.adjoint());
  }
  return LocalProjectorBasis(std::move(projectors));
}

SiteMatrix unitary_from_angles(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  SiteMatrix u;
  u(0, 0) = c;
  u(0, 1) = -std::polar(1.0, lambda) * s;
  u(1, 0) = std::polar(1.0, phi) * s;
  u(1, 1) = std::polar(1.0, phi + lambda) * c;
  return u;
}

ValidationReport validate_projector_set(const LocalProjectorBasis& basis) {
  double idempotent = 0.0;
  double hermitian = 0.0;
  double rank_one = 0.0;
  double orthogonal = 0.0;
  SiteMatrix sum = SiteMatrix::Zero();

  const auto& ps = basis.projectors();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const SiteMatrix& p = ps[i];
    idempotent = std::max(idempotent, max_abs(p * p - p));
    hermitian = std::max(hermitian, max_abs(p - p.adjoint()));
    rank_one = std::max(rank_one, std::abs(p.trace() - Complex(1.0, 0.0)));
    sum += p;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i != j) orthogonal = std::max(orthogonal, max_abs(p * ps[j]));
    }
  }
  const double complete = max_abs(sum - SiteMatrix::Identity());

  auto check = [](const char* name, double r) {
    return CheckResult{name, r, kProjectorTolerance, r <= kProjectorTolerance};
  };
  ValidationReport report;
  report.checks = {check("idempotent", idempotent), check("hermitian", hermitian),
                   check("rank_one", rank_one), check("complete", complete),
                   check("orthogonal", orthogonal)};
  return report;
}

bool is_computational_basis(const LocalProjectorBasis& basis) {
  const auto reference = computational_basis_projectors();
  if (basis.outcomes() != reference.outcomes()) return false;
  for (std::size_t i = 0; i < reference.outcomes(); ++i) {
    if (basis[i] != reference[i]) return false;
  }
  return true;
}

namespace {

std::vector<double> trace_readout(const ComplexMatrix& rho,
                                  std::span<const LocalProjectorBasis> bases) {
  const std::size_t n = bases.size();
  const std::size_t dim = static_cast<std::size_t>(rho.rows());
  std::size_t outcomes = 1;
  for (const auto& b : bases) outcomes *= b.outcomes();

  std::vector<double> probs(outcomes, 0.0);
  std::vector<std::size_t> label(n, 0);
  for (std::size_t flat = 0; flat < outcomes; ++flat) {
    std::size_t rest = flat;
    for (std::size_t q = n; q-- > 0;) {
      label[q] = rest % bases[q].outcomes();
      rest /= bases[q].outcomes();
    }
    // Tr(rho P) = sum_{r,c} rho(r,c) P(c,r), P(c,r) = prod_q P_q(c_q, r_q).
    Complex acc(0.0, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        Complex entry(1.0, 0.0);
        for (std::size_t q = 0; q < n; ++q) {
          const std::size_t shift = n - 1 - q;
          entry *= bases[q][label[q]]((c >> shift) & 1U, (r >> shift) & 1U);
        }
        acc += rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * entry;
      }
    }
    probs[flat] = acc.real();
  }
  return probs;
}

std::vector<double> diagonal_readout(const ComplexMatrix& rho) {
  std::vector<double> probs(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) probs[static_cast<std::size_t>(i)] = rho(i, i).real();
  return probs;
}

}  // namespace

JointDistribution born_statistics(const DensityOperator& rho,
                                  std::span<const LocalProjectorBasis> bases, BornMethod method) {
  const std::size_t n = rho.qubits();
  if (bases.size() != n) {
    throw InvalidArgument("born_statistics: " + std::to_string(bases.size()) +
                          " measurement bases for " + std::to_string(n) + " qubits");
  }
  bool all_computational = true;
  for (std::size_t q = 0; q < n; ++q) {
    const auto report = validate_projector_set(bases[q]);
    if (!report.passed()) {
      throw InvalidArgument("born_statistics: basis for site " + std::to_string(q) +
                            " is not a rank-1 projective measurement");
    }
    all_computational = all_computational && is_computational_basis(bases[q]);
  }
  if (method == BornMethod::Diagonal && !all_computational) {
    throw InvalidArgument("born_statistics: diagonal readout requires computational bases");
  }
  const bool diagonal =
      method == BornMethod::Diagonal || (method == BornMethod::Automatic && all_computational);

  std::vector<double> probs =
      diagonal ? diagonal_readout(rho.matrix()) : trace_readout(rho.matrix(), bases);

  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < -kNegativeProbabilityTolerance) {
      throw NumericalFailure("born_statistics: outcome " + std::to_string(i) +
                             " has probability " + std::to_string(probs[i]) +
                             "; the density operator is not valid");
    }
    if (probs[i] < 0.0) probs[i] = 0.0;
  }
  return JointDistribution::from_weights(std::vector<std::size_t>(n, 2), std::move(probs));
}

JointDistribution born_statistics(const DensityOperator& rho, const LocalProjectorBasis& basis,
                                  BornMethod method) {
  const std::vector<LocalProjectorBasis> bases(rho.qubits(), basis);
  return born_statistics(rho, std::span<const LocalProjectorBasis>(bases), method);
}

}  // namespace hierq

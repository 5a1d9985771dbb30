#include "hierq/quantum_state.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "hierq/errors.hpp"

namespace hierq {

std::size_t qubits_for_dimension(Eigen::Index dim) {
  if (dim < 2) {
    throw InvalidArgument("dimension must be a power of two >= 2, got " + std::to_string(dim));
  }
  const auto udim = static_cast<std::size_t>(dim);
  if (!std::has_single_bit(udim)) {
    throw InvalidArgument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(udim));
  if (n > kMaxQubits) {
    throw InvalidArgument("register of " + std::to_string(n) + " qubits exceeds the dense limit of " +
                          std::to_string(kMaxQubits));
  }
  return n;
}

StateVector::StateVector(ComplexVector amplitudes)
    : qubits_(qubits_for_dimension(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
  const double norm2 = amplitudes_.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kStateNormTolerance) {
    throw InvalidArgument("state vector is not normalized (squared norm " + std::to_string(norm2) +
                          ")");
  }
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : qubits_(0), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw InvalidArgument("density operator must be square");
  }
  qubits_ = qubits_for_dimension(matrix_.rows());
}

namespace {

void require_register(std::size_t n, const char* what) {
  if (n < 2) {
    throw InvalidArgument(std::string(what) + " needs at least 2 qubits, got " + std::to_string(n));
  }
  if (n > kMaxQubits) {
    throw InvalidArgument(std::string(what) + " limited to " + std::to_string(kMaxQubits) +
                          " qubits");
  }
}

}  // namespace

StateVector ghz_state(std::size_t n) {
  require_register(n, "ghz_state");
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexVector amps = ComplexVector::Zero(dim);
  amps[0] = amps[dim - 1] = Complex(1.0 / std::sqrt(2.0), 0.0);
  return StateVector(std::move(amps));
}

StateVector w_state(std::size_t n) {
  require_register(n, "w_state");
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexVector amps = ComplexVector::Zero(dim);
  const Complex a(1.0 / std::sqrt(static_cast<double>(n)), 0.0);
  for (std::size_t q = 0; q < n; ++q) {
    amps[Eigen::Index{1} << q] = a;
  }
  return StateVector(std::move(amps));
}

DensityOperator pure_to_density(const StateVector& psi) {
  const auto& v = psi.amplitudes();
  return DensityOperator(v * v.adjoint());
}

DensityOperator maximally_mixed(std::size_t n) {
  if (n < 1 || n > kMaxQubits) {
    throw InvalidArgument("maximally_mixed: unsupported qubit count " + std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  return DensityOperator(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityOperator mix_with_maximally_mixed(const DensityOperator& rho, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("mixing weight alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  const Eigen::Index dim = rho.dimension();
  ComplexMatrix out = alpha * rho.matrix();
  out.diagonal().array() += Complex((1.0 - alpha) / static_cast<double>(dim), 0.0);
  return DensityOperator(std::move(out));
}

ValidationReport validate_density(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument("validate_density: matrix is not square");
  }
  qubits_for_dimension(m.rows());

  ValidationReport report;

  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  report.checks.push_back({"hermitian", herm, kHermitianTolerance, herm <= kHermitianTolerance});

  const Complex tr = m.trace();
  const double trace_residual = std::abs(tr - Complex(1.0, 0.0));
  report.checks.push_back(
      {"unit_trace", trace_residual, kTraceTolerance, trace_residual <= kTraceTolerance});

  const ComplexMatrix hermitian_part = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part, Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues().minCoeff();
  // Residual is the amount of negativity, zero for PSD input.
  const double negativity = min_eig < 0.0 ? -min_eig : 0.0;
  report.checks.push_back({"psd", negativity, kPsdTolerance, min_eig >= -kPsdTolerance});

  return report;
}

ValidationReport validate_density(const DensityOperator& rho) { return validate_density(rho.matrix()); }

}  // namespace hierq

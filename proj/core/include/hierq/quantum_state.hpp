#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "hierq/validation.hpp"

// Pure states and density operators for small qubit registers.
//
// Basis indices are most-significant-qubit first: qubit 0 is the leftmost
// symbol of the ket, so |001> is index 1 and |100> is index 4.
namespace hierq {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kStateNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

// Largest register the dense representation accepts.
inline constexpr std::size_t kMaxQubits = 12;

// Returns log2(dim) for a power-of-two dimension >= 2, throws otherwise.
std::size_t qubits_for_dimension(Eigen::Index dim);

class StateVector {
 public:
  // Throws InvalidArgument unless the length is 2^n (n >= 1) and the vector
  // is normalized within kStateNormTolerance.
  explicit StateVector(ComplexVector amplitudes);

  std::size_t qubits() const noexcept { return qubits_; }
  Eigen::Index dimension() const noexcept { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

 private:
  std::size_t qubits_;
  ComplexVector amplitudes_;
};

// A square matrix on a qubit register. Construction only checks the shape;
// use validate_density() to audit Hermiticity, trace and positivity.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix);

  std::size_t qubits() const noexcept { return qubits_; }
  Eigen::Index dimension() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  std::size_t qubits_;
  ComplexMatrix matrix_;
};

// (|0...0> + |1...1>)/sqrt(2). Throws InvalidArgument for n < 2.
StateVector ghz_state(std::size_t n);

// Uniform superposition of the n single-excitation basis states.
// Throws InvalidArgument for n < 2.
StateVector w_state(std::size_t n);

DensityOperator pure_to_density(const StateVector& psi);

DensityOperator maximally_mixed(std::size_t n);

// alpha * rho + (1 - alpha) / 2^n * I. alpha must lie in [0, 1].
DensityOperator mix_with_maximally_mixed(const DensityOperator& rho, double alpha);

// Checks "hermitian", "unit_trace" and "psd" (smallest eigenvalue of the
// Hermitian part). Throws InvalidArgument for non-square or
// non-power-of-two matrices.
ValidationReport validate_density(const ComplexMatrix& matrix);
ValidationReport validate_density(const DensityOperator& rho);

}  // namespace hierq

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hierq/distribution.hpp"
#include "hierq/quantum_state.hpp"
#include "hierq/validation.hpp"

namespace hierq {

using SiteMatrix = Eigen::Matrix2cd;

inline constexpr double kProjectorTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;
// Born probabilities in [-kNegativeProbabilityTolerance, 0) are rounding and
// get clamped; anything below is reported as NumericalFailure.
inline constexpr double kNegativeProbabilityTolerance = 1e-12;

// Ordered single-qubit projectors, one per outcome label. Only 2x2 operators
// can be stored; whether they form a rank-1 von Neumann measurement is
// audited by validate_projector_set() and enforced by born_statistics().
class LocalProjectorBasis {
 public:
  LocalProjectorBasis() = default;
  explicit LocalProjectorBasis(std::vector<SiteMatrix> projectors)
      : projectors_(std::move(projectors)) {}

  std::size_t outcomes() const noexcept { return projectors_.size(); }
  const SiteMatrix& operator[](std::size_t i) const { return projectors_[i]; }
  const std::vector<SiteMatrix>& projectors() const noexcept { return projectors_; }

 private:
  std::vector<SiteMatrix> projectors_;
};

// {|0><0|, |1><1|}
LocalProjectorBasis computational_basis_projectors();

// {u|0><0|u^dagger, u|1><1|u^dagger}; throws InvalidArgument when u is not
// unitary within kUnitaryTolerance.
LocalProjectorBasis rotated_basis_projectors(const SiteMatrix& u);

// Standard three-angle single-qubit unitary
//   [[cos(t/2), -e^{i l} sin(t/2)], [e^{i p} sin(t/2), e^{i(p+l)} cos(t/2)]].
SiteMatrix unitary_from_angles(double theta, double phi, double lambda);

double unitarity_residual(const SiteMatrix& u);

// Residual checks "idempotent", "hermitian", "rank_one", "complete" and
// "orthogonal". Never throws; an empty basis fails completeness.
ValidationReport validate_projector_set(const LocalProjectorBasis& basis);

enum class BornMethod {
  Automatic,  // diagonal readout when every site is computational, else Trace
  Trace,      // p(i) = Tr(rho (P_i1 x ... x P_in)) evaluated entrywise
  Diagonal,   // p(i) = rho_ii; only valid for computational bases
};

// Outcome distribution of local measurements, one basis per qubit, with
// outcome tuples flattened most-significant-site first.
//
// Throws InvalidArgument when the basis count differs from the qubit count,
// a basis fails validation, or Diagonal is requested for a non-computational
// basis. Throws NumericalFailure when a probability falls below
// -kNegativeProbabilityTolerance.
JointDistribution born_statistics(const DensityOperator& rho,
                                  std::span<const LocalProjectorBasis> bases,
                                  BornMethod method = BornMethod::Automatic);

// Same basis on every site.
JointDistribution born_statistics(const DensityOperator& rho, const LocalProjectorBasis& basis,
                                  BornMethod method = BornMethod::Automatic);

bool is_computational_basis(const LocalProjectorBasis& basis);

}  // namespace hierq

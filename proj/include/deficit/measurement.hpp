#pragma once

#include "deficit/complex_matrix.hpp"
#include "deficit/state.hpp"

#include <vector>

namespace deficit {

/// Complete rank-1 projective measurement on Alice's side, stored as the
/// orthonormal basis vectors (columns of a unitary).
class ProjectiveMeasurement {
 public:
  /// Validates orthonormality to 1e-9.
  explicit ProjectiveMeasurement(std::vector<std::vector<Complex>> basis);

  /// Basis from the columns of a unitary matrix.
  static ProjectiveMeasurement from_unitary(const ComplexMatrix& u);
  /// Computational basis in dimension d.
  static ProjectiveMeasurement computational(std::size_t d);
  /// Eigenbasis of a Hermitian operator (descending eigenvalues).
  static ProjectiveMeasurement eigenbasis(const ComplexMatrix& hermitian);
  /// Qubit basis {cos(t/2)|0> + e^{ip} sin(t/2)|1>, and its orthocomplement}.
  static ProjectiveMeasurement qubit(double theta, double phi);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<Complex>>& basis() const { return basis_; }
  /// Projector |e_i><e_i|.
  ComplexMatrix projector(std::size_t i) const;

 private:
  std::vector<std::vector<Complex>> basis_;
};

/// One branch of a measurement on A: outcome probability and Bob's
/// conditional post-measurement state.
struct MeasurementBranch {
  double probability = 0.0;
  DensityMatrix state;
};

/// Applies (P_i tensor I) rho (P_i tensor I) branch by branch; branches with
/// probability < 1e-14 are dropped.
std::vector<MeasurementBranch> measure_alice(const DensityMatrix& rho,
                                             const ProjectiveMeasurement& m);

/// sum_i (P_i tensor I) rho (P_i tensor I): the state after the measurement
/// with outcomes forgotten.
DensityMatrix dephase_alice(const DensityMatrix& rho, const ProjectiveMeasurement& m);

/// Generalized measurement on A: positive elements summing to the identity.
class Povm {
 public:
  /// Validates positivity (eigenvalues >= -1e-9) and completeness to 1e-9.
  explicit Povm(std::vector<ComplexMatrix> elements);

  std::size_t dim() const { return elements_[0].rows(); }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }

 private:
  std::vector<ComplexMatrix> elements_;
};

/// Bob's conditional states p_i, rho_B|i = Tr_A((M_i tensor I) rho) / p_i.
std::vector<MeasurementBranch> measure_alice(const DensityMatrix& rho, const Povm& m);

/// The outcome branches of measure_alice packaged as an ensemble on Bob.
Ensemble outcome_ensemble(const DensityMatrix& rho, const ProjectiveMeasurement& m);
Ensemble outcome_ensemble(const DensityMatrix& rho, const Povm& m);

/// Refines a projective measurement with possibly rank > 1 projectors to a
/// rank-1 one: each block is split along the eigenbasis of P_i rho_A P_i.
/// Validates that the projectors are Hermitian, idempotent, mutually
/// orthogonal and complete (all to 1e-9).
ProjectiveMeasurement refine(const std::vector<ComplexMatrix>& projectors,
                             const DensityMatrix& rho_ab);

}  // namespace deficit

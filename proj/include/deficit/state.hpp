#pragma once

#include "deficit/complex_matrix.hpp"

#include <cstddef>
#include <vector>

namespace deficit {

/// Subsystem dimensions of a bipartite state; d_B = 1 marks a single system.
struct Dims {
  std::size_t a = 1;
  std::size_t b = 1;
  std::size_t total() const { return a * b; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Subsystem { A, B };

/// Bipartite density matrix. Construction validates Hermiticity, unit trace
/// and positivity (eigenvalues >= -1e-9).
class DensityMatrix {
 public:
  DensityMatrix(Dims dims, ComplexMatrix matrix);

  /// Single-system state (dims {n, 1}).
  static DensityMatrix single(ComplexMatrix matrix);

  const Dims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  Dims dims_;
  ComplexMatrix mat_;
};

/// Bipartite pure state as an amplitude vector of unit norm.
class PureState {
 public:
  PureState(Dims dims, std::vector<Complex> amplitudes);

  const Dims& dims() const { return dims_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  DensityMatrix to_density() const;

 private:
  Dims dims_;
  std::vector<Complex> amp_;
};

/// Weighted list of same-shaped density matrices.
struct Ensemble {
  std::vector<double> weights;
  std::vector<DensityMatrix> members;

  /// Validates weight normalization and member shapes; returns the average state.
  DensityMatrix average() const;
};

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Von Neumann entropy in bits. Eigenvalues in [-1e-9, 0) are clipped to 0.
double entropy(const DensityMatrix& rho);

/// log2(d) - S(rho); the qubit count N may be fractional for non-power-of-two d.
double information_content(const DensityMatrix& rho);

/// S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const DensityMatrix& rho);

/// |psi_AB> = sum_i sqrt(p_i) |i>|psi_i>, with the Alice dimension equal to
/// the number of ensemble members and {|i>} the computational basis.
PureState state_from_ensemble(const std::vector<double>& weights,
                              const std::vector<PureState>& states);

/// chi = S(avg) - sum_k p_k S(rho_k).
double holevo_chi(const Ensemble& ensemble);

}  // namespace deficit

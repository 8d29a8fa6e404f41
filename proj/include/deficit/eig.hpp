#pragma once

#include "deficit/complex_matrix.hpp"

#include <vector>

namespace deficit {

/// Spectral decomposition of a Hermitian matrix. Eigenvalues are sorted
/// descending; column k of `eigenvectors` is the unit eigenvector for
/// eigenvalues[k].
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi diagonalization for Hermitian matrices. Throws
/// std::invalid_argument if the input is not Hermitian within `hermitian_tol`
/// and std::runtime_error if the off-diagonal norm has not dropped below
/// 1e-13 after 100 sweeps.
HermitianEigen hermitian_eig(const ComplexMatrix& h, double hermitian_tol = 1e-9);

/// exp(i*H) for Hermitian H, via the spectral decomposition.
ComplexMatrix unitary_exp(const ComplexMatrix& h);

}  // namespace deficit

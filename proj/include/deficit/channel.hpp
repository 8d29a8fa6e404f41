#pragma once

#include "deficit/complex_matrix.hpp"
#include "deficit/state.hpp"

#include <array>
#include <vector>

namespace deficit {

/// Completely positive trace-preserving qubit map. Two concrete encodings are
/// supported: a Kraus-operator list, and a Bloch-affine description
/// (r -> diag(s) r + t) extended linearly to arbitrary 2x2 blocks.
class QubitChannel {
 public:
  /// Kraus form; validates sum_k K_k^dag K_k = I to 1e-10.
  static QubitChannel from_kraus(std::vector<ComplexMatrix> kraus);
  /// Bloch-affine form with diagonal scaling s and offset t.
  static QubitChannel from_bloch_affine(const std::array<double, 3>& scale,
                                        const std::array<double, 3>& offset);

  /// Applies the map to an arbitrary 2x2 block (linear extension for the
  /// affine form: X -> (tr X / 2)(I + t.sigma) + (1/2) sum_k s_k tr(X sigma_k) sigma_k).
  ComplexMatrix apply_block(const ComplexMatrix& x) const;

  /// Applies the map to a single-qubit density matrix.
  DensityMatrix apply(const DensityMatrix& rho) const;

  /// (I_A tensor Lambda)(rho_AB); Bob must be a qubit.
  DensityMatrix apply_to_bob(const DensityMatrix& rho) const;

 private:
  QubitChannel() = default;

  bool use_kraus_ = false;
  std::vector<ComplexMatrix> kraus_;
  std::array<double, 3> scale_{};
  std::array<double, 3> offset_{};
};

/// Amplitude damping with gamma = 1/2:
/// A1 = diag(1, sqrt(1/2)), A2 = sqrt(1/2) |0><1|.
QubitChannel make_damping_channel();

/// Bloch-affine map with scale (0.6, 0.6, 0.5) and offset (0, 0, 0.5).
QubitChannel make_shifted_contraction_channel();

}  // namespace deficit

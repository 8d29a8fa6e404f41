#pragma once

#include "deficit/measures.hpp"

#include <cstdint>

namespace deficit {

enum class Objective { ClassicalCorrelation, ClassicalDeficit };

struct OptimizeOptions {
  std::size_t starts = 24;
  std::size_t max_iterations = 600;  // Nelder-Mead iterations per start
  double tolerance = 1e-11;          // simplex spread at which a start stops
  std::uint64_t seed = 20240901;
  /// Subdivisions of theta for the coarse qubit seeding grid (phi gets twice
  /// as many); only used when the optimized block is two-dimensional.
  std::size_t grid_points = 24;
  /// Restrict candidate bases to the support of rho_A (kernel vectors are
  /// appended unchanged to complete the basis).
  bool support_restricted = false;
  /// 0 = read DEFICIT_LAB_THREADS, falling back to 1.
  std::size_t threads = 0;
};

struct OptimizeResult {
  double value = 0.0;
  ProjectiveMeasurement measurement = ProjectiveMeasurement::computational(1);
  MeasuredQuantities quantities;
  std::size_t best_start = 0;
  std::size_t evaluations = 0;
  bool converged = false;  // winning start hit the simplex-spread tolerance
};

/// Maximizes the chosen objective over complete rank-1 projective measurements
/// on A. Deterministic for a fixed seed: each start draws from its own RNG
/// stream and ties are broken by start index, so the result does not depend on
/// the thread count.
OptimizeResult maximize(const DensityMatrix& rho, Objective objective,
                        const OptimizeOptions& options = {});

/// Minimizes the one-way quantum deficit. The deficit and the classical
/// deficit share the landscape with opposite sign (their sum is the mutual
/// information at every measurement), so this maximizes the classical deficit
/// and reports the deficit at the same measurement.
OptimizeResult minimize_quantum_deficit(const DensityMatrix& rho,
                                        const OptimizeOptions& options = {});

struct QubitGridResult {
  double value = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Brute-force scan over qubit measurement bases (theta, phi); Alice must be a
/// qubit. theta runs over [0, pi], phi over [0, 2 pi).
QubitGridResult qubit_grid_maximize(const DensityMatrix& rho, Objective objective,
                                    std::size_t theta_steps, std::size_t phi_steps);

}  // namespace deficit

#pragma once

#include "deficit/measurement.hpp"
#include "deficit/state.hpp"

#include <vector>

namespace deficit {

/// Quantities attached to one fixed measurement on A. All entropies in bits.
/// Identities: classical_deficit = classical_correlation - alice_entropy_cost,
/// and quantum_deficit + classical_deficit = mutual_information (exactly, up
/// to the arithmetic used to form them).
struct MeasuredQuantities {
  double classical_correlation = 0.0;  // c_HV = S(rho_B) - sum_i p_i S(rho_B|i)
  double classical_deficit = 0.0;      // S(rho_A) - S(rho'_A) + c_HV
  double quantum_deficit = 0.0;        // sum_i p_i S(rho_B|i) + S(rho'_A) - S(rho_AB)
  double mutual_information = 0.0;     // classical_deficit + quantum_deficit
  double alice_entropy_cost = 0.0;     // S(rho'_A) - S(rho_A), >= 0
  std::vector<double> outcome_weights;
  std::vector<double> outcome_entropies;  // S(rho_B|i), aligned with weights
};

/// Evaluates all per-measurement quantities for a projective measurement on A.
/// rho'_A is Alice's reduction of the dephased state.
MeasuredQuantities evaluate_measurement(const DensityMatrix& rho,
                                        const ProjectiveMeasurement& m);

/// Shorthands for single figures of merit.
double classical_correlation(const DensityMatrix& rho, const ProjectiveMeasurement& m);
double classical_deficit(const DensityMatrix& rho, const ProjectiveMeasurement& m);

/// c_HV for a general POVM: S(rho_B) - sum_i p_i S(rho_B|i). The deficit is
/// not defined for POVMs here.
double classical_correlation(const DensityMatrix& rho, const Povm& m);

/// Information extractable by global operations, log2(d_A d_B) - S(rho_AB).
double i_go(const DensityMatrix& rho);
/// Information extractable by purely local operations,
/// log2(d_A) - S(rho_A) + log2(d_B) - S(rho_B).
double i_lo(const DensityMatrix& rho);

}  // namespace deficit

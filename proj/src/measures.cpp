#include "deficit/measures.hpp"

#include <cmath>

namespace deficit {

MeasuredQuantities evaluate_measurement(const DensityMatrix& rho,
                                        const ProjectiveMeasurement& m) {
  const double s_a = entropy(partial_trace(rho, Subsystem::A));
  const double s_b = entropy(partial_trace(rho, Subsystem::B));
  const double s_ab = entropy(rho);

  MeasuredQuantities q;
  double residual = 0.0;  // sum_i p_i S(rho_B|i)
  for (const auto& branch : measure_alice(rho, m)) {
    const double s = entropy(branch.state);
    residual += branch.probability * s;
    q.outcome_weights.push_back(branch.probability);
    q.outcome_entropies.push_back(s);
  }
  const double s_a_dephased = entropy(partial_trace(dephase_alice(rho, m), Subsystem::A));

  q.classical_correlation = s_b - residual;
  q.classical_deficit = s_a - s_a_dephased + q.classical_correlation;
  q.quantum_deficit = residual + s_a_dephased - s_ab;
  q.mutual_information = q.classical_deficit + q.quantum_deficit;
  q.alice_entropy_cost = s_a_dephased - s_a;
  return q;
}

double classical_correlation(const DensityMatrix& rho, const ProjectiveMeasurement& m) {
  return evaluate_measurement(rho, m).classical_correlation;
}

double classical_deficit(const DensityMatrix& rho, const ProjectiveMeasurement& m) {
  return evaluate_measurement(rho, m).classical_deficit;
}

double classical_correlation(const DensityMatrix& rho, const Povm& m) {
  double residual = 0.0;
  for (const auto& branch : measure_alice(rho, m)) {
    residual += branch.probability * entropy(branch.state);
  }
  return entropy(partial_trace(rho, Subsystem::B)) - residual;
}

double i_go(const DensityMatrix& rho) {
  return std::log2(static_cast<double>(rho.dim())) - entropy(rho);
}

double i_lo(const DensityMatrix& rho) {
  return information_content(partial_trace(rho, Subsystem::A)) +
         information_content(partial_trace(rho, Subsystem::B));
}

}  // namespace deficit

#include "deficit/scenarios.hpp"

#include "deficit/eig.hpp"
#include "deficit/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace deficit {

namespace {

ScenarioCheck two_sided(std::string description, double expected, double actual,
                        double tolerance) {
  return {std::move(description), expected, actual, tolerance,
          std::abs(actual - expected) <= tolerance};
}

ScenarioCheck at_most(std::string description, double bound, double actual, double slack) {
  return {std::move(description), bound, actual, slack, actual <= bound + slack};
}

ScenarioCheck strictly_below(std::string description, double bound, double actual) {
  return {std::move(description), bound, actual, 0.0, actual < bound};
}

double block_entropy(const ComplexMatrix& m) {
  double s = 0.0;
  for (double lambda : hermitian_eig(m).eigenvalues) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace

WeightedPureStates sw99_ensemble() {
  const double r = std::sqrt(0.5);
  return {{0.5, 0.5},
          {PureState(Dims{2, 1}, {Complex{r, 0.0}, Complex{r, 0.0}}),
           PureState(Dims{2, 1}, {Complex{0.8, 0.0}, Complex{-0.6, 0.0}})}};
}

DensityMatrix build_sw99_state() {
  const WeightedPureStates e = sw99_ensemble();
  return make_damping_channel().apply_to_bob(
      state_from_ensemble(e.weights, e.states).to_density());
}

WeightedPureStates knr01_ensemble() {
  const double a_raw = 0.5701579;
  const double b_raw = 0.821535;
  const double norm = std::sqrt(a_raw * a_raw + b_raw * b_raw);
  const double a = a_raw / norm;
  const double b = b_raw / norm;
  return {{0.4023, 0.29885, 0.29885},
          {PureState(Dims{2, 1}, {Complex{1.0, 0.0}, Complex{0.0, 0.0}}),
           PureState(Dims{2, 1}, {Complex{a, 0.0}, Complex{b, 0.0}}),
           PureState(Dims{2, 1}, {Complex{a, 0.0}, Complex{-b, 0.0}})}};
}

DensityMatrix build_knr01_state() {
  const WeightedPureStates e = knr01_ensemble();
  return make_shifted_contraction_channel().apply_to_bob(
      state_from_ensemble(e.weights, e.states).to_density());
}

ScenarioReport sw99_report(const OptimizeOptions&) {
  const DensityMatrix rho = build_sw99_state();
  const DensityMatrix rho_a = partial_trace(rho, Subsystem::A);
  const auto comp = evaluate_measurement(rho, ProjectiveMeasurement::computational(2));
  const auto eig =
      evaluate_measurement(rho, ProjectiveMeasurement::eigenbasis(rho_a.matrix()));

  ScenarioReport report{"sw99", {}, {}};
  report.quantities = {
      {"S_A", entropy(rho_a)},
      {"S_B", entropy(partial_trace(rho, Subsystem::B))},
      {"S_AB", entropy(rho)},
      {"I_M", mutual_information(rho)},
      {"c_hv_computational", comp.classical_correlation},
      {"c_hv_eigenbasis", eig.classical_correlation},
      {"delta_cl_computational", comp.classical_deficit},
      {"delta_cl_eigenbasis", eig.classical_deficit},
  };
  report.checks.push_back(
      two_sided("c_hv in {|0>,|1>} basis", 0.45667, comp.classical_correlation, 5e-4));
  report.checks.push_back(
      two_sided("c_hv in eigenbasis of rho_A", 0.3356, eig.classical_correlation, 5e-4));
  ScenarioCheck strict{"computational c_hv strictly exceeds eigenbasis c_hv", 0.0,
                       comp.classical_correlation - eig.classical_correlation, 0.0,
                       comp.classical_correlation > eig.classical_correlation};
  report.checks.push_back(strict);
  return report;
}

ScenarioReport knr01_report(const OptimizeOptions& options) {
  const DensityMatrix rho = build_knr01_state();
  const DensityMatrix rho_a = partial_trace(rho, Subsystem::A);
  const auto comp = evaluate_measurement(rho, ProjectiveMeasurement::computational(3));
  const auto eig =
      evaluate_measurement(rho, ProjectiveMeasurement::eigenbasis(rho_a.matrix()));

  OptimizeOptions restricted = options;
  restricted.support_restricted = true;
  const OptimizeResult best_restricted =
      maximize(rho, Objective::ClassicalCorrelation, restricted);
  OptimizeOptions full = options;
  full.support_restricted = false;
  const OptimizeResult best_full = maximize(rho, Objective::ClassicalCorrelation, full);

  const auto a_eigen = hermitian_eig(rho_a.matrix());

  ScenarioReport report{"knr01", {}, {}};
  report.quantities = {
      {"S_A", entropy(rho_a)},
      {"S_B", entropy(partial_trace(rho, Subsystem::B))},
      {"S_AB", entropy(rho)},
      {"rho_A_eigenvalue_smallest", a_eigen.eigenvalues.back()},
      {"c_hv_computational", comp.classical_correlation},
      {"c_hv_eigenbasis", eig.classical_correlation},
      {"delta_cl_computational", comp.classical_deficit},
      {"delta_cl_eigenbasis", eig.classical_deficit},
      {"max_c_hv_support_restricted", best_restricted.value},
      {"max_c_hv_full_space", best_full.value},
  };
  report.checks.push_back(
      two_sided("c_hv in {|0>,|1>,|2>} basis", 0.32499, comp.classical_correlation, 5e-4));
  report.checks.push_back(
      two_sided("c_hv in eigenbasis of rho_A", 0.321915, eig.classical_correlation, 5e-4));
  report.checks.push_back(at_most("support-restricted max c_hv bound", 0.321915,
                                  best_restricted.value, 1e-3));
  report.checks.push_back(at_most("rank of rho_A is 2 (smallest eigenvalue ~ 0)", 0.0,
                                  a_eigen.eigenvalues.back(), 1e-9));
  report.checks.push_back(strictly_below("delta_cl in {|0>,|1>,|2>} basis is negative", 0.0,
                                         comp.classical_deficit));
  return report;
}

ScenarioReport lemma1_report(const DensityMatrix& rho, const OptimizeOptions& options) {
  const DensityMatrix rho_a = partial_trace(rho, Subsystem::A);
  const OptimizeResult best_chv = maximize(rho, Objective::ClassicalCorrelation, options);
  const OptimizeResult best_dcl = maximize(rho, Objective::ClassicalDeficit, options);
  const double gap = best_chv.value - best_dcl.value;
  const double eig_chv =
      classical_correlation(rho, ProjectiveMeasurement::eigenbasis(rho_a.matrix()));

  // Largest entry of [P_i, rho_A] over the best C_HV measurement's projectors.
  double commutator = 0.0;
  for (std::size_t i = 0; i < best_chv.measurement.dim(); ++i) {
    const ComplexMatrix p = best_chv.measurement.projector(i);
    commutator = std::max(commutator, (p * rho_a.matrix() - rho_a.matrix() * p).max_abs());
  }

  ScenarioReport report{"lemma1", {}, {}};
  report.quantities = {
      {"C_HV", best_chv.value},
      {"Delta_cl", best_dcl.value},
      {"gap", gap},
      {"c_hv_eigenbasis", eig_chv},
      {"commutator_norm", commutator},
  };
  report.checks.push_back(
      at_most("Delta_cl does not exceed C_HV", best_chv.value, best_dcl.value, 1e-6));
  return report;
}

ScenarioReport lemma1_sw99_report(const OptimizeOptions& options) {
  ScenarioReport report = lemma1_report(build_sw99_state(), options);
  report.name = "lemma1(sw99)";
  double gap = 0.0;
  double commutator = 0.0;
  for (const auto& [label, value] : report.quantities) {
    if (label == "gap") gap = value;
    if (label == "commutator_norm") commutator = value;
  }
  ScenarioCheck positive_gap{"gap is strictly positive", 0.0, gap, 1e-4, gap > 1e-4};
  report.checks.push_back(positive_gap);
  ScenarioCheck noncommuting{"best C_HV basis does not commute with rho_A", 0.0, commutator,
                             1e-6, commutator > 1e-6};
  report.checks.push_back(noncommuting);
  return report;
}

ScenarioReport lemma2_demo(const DensityMatrix& rho, const ProjectiveMeasurement& m,
                           const OptimizeOptions& options) {
  const DensityMatrix dephased = dephase_alice(rho, m);
  const double chv_before = maximize(rho, Objective::ClassicalCorrelation, options).value;
  const double dcl_before = maximize(rho, Objective::ClassicalDeficit, options).value;
  const double chv_after = maximize(dephased, Objective::ClassicalCorrelation, options).value;
  const double dcl_after = maximize(dephased, Objective::ClassicalDeficit, options).value;

  ScenarioReport report{"lemma2", {}, {}};
  report.quantities = {
      {"C_HV_before", chv_before},
      {"Delta_cl_before", dcl_before},
      {"C_HV_after", chv_after},
      {"Delta_cl_after", dcl_after},
      {"Delta_cl_increase", dcl_after - dcl_before},
  };
  report.checks.push_back(
      two_sided("C_HV unchanged by the dephasing", chv_before, chv_after, 2e-3));
  report.checks.push_back(
      two_sided("dephased state saturates Delta_cl = C_HV", chv_after, dcl_after, 2e-3));
  ScenarioCheck no_decrease{"Delta_cl does not decrease", dcl_before, dcl_after, 1e-9,
                            dcl_after >= dcl_before - 1e-9};
  report.checks.push_back(no_decrease);
  if (chv_before - dcl_before > 2e-3) {
    ScenarioCheck increase{"Delta_cl strictly increases (started below C_HV)", dcl_before,
                           dcl_after, 0.0, dcl_after > dcl_before};
    report.checks.push_back(increase);
  }
  return report;
}

ScenarioReport diagram_check(const WeightedPureStates& ensemble, const QubitChannel& channel) {
  const std::size_t n = ensemble.states.size();
  const DensityMatrix joint =
      channel.apply_to_bob(state_from_ensemble(ensemble.weights, ensemble.states).to_density());
  const auto branches = measure_alice(joint, ProjectiveMeasurement::computational(n));

  double weight_dev = 0.0;
  double member_dev = 0.0;
  if (branches.size() != n) {
    weight_dev = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const DensityMatrix direct = channel.apply(ensemble.states[i].to_density());
      weight_dev = std::max(weight_dev, std::abs(branches[i].probability - ensemble.weights[i]));
      member_dev = std::max(member_dev,
                            (branches[i].state.matrix() - direct.matrix()).max_abs());
    }
  }

  ScenarioReport report{"diagram", {}, {}};
  report.quantities = {
      {"max_weight_deviation", weight_dev},
      {"max_member_deviation", member_dev},
  };
  report.checks.push_back(at_most("weights agree", 0.0, weight_dev, 1e-10));
  report.checks.push_back(at_most("members agree", 0.0, member_dev, 1e-9));
  return report;
}

double orthogonal_ensemble_scan(const QubitChannel& channel, std::size_t theta_steps,
                                std::size_t phi_steps, std::size_t weight_steps) {
  if (theta_steps < 2 || phi_steps < 1 || weight_steps < 2) {
    throw std::invalid_argument("orthogonal_ensemble_scan: grid too small");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t ti = 0; ti < theta_steps; ++ti) {
    const double theta = std::numbers::pi * static_cast<double>(ti) /
                         static_cast<double>(theta_steps - 1);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    for (std::size_t pi_i = 0; pi_i < phi_steps; ++pi_i) {
      const double phi =
          2.0 * std::numbers::pi * static_cast<double>(pi_i) / static_cast<double>(phi_steps);
      const Complex phase = std::polar(1.0, phi);
      const ComplexMatrix r0 =
          channel.apply_block(ComplexMatrix::outer({Complex{c, 0.0}, s * phase}));
      const ComplexMatrix r1 = channel.apply_block(
          ComplexMatrix::outer({Complex{-s, 0.0} * std::conj(phase), Complex{c, 0.0}}));
      const double s0 = block_entropy(r0);
      const double s1 = block_entropy(r1);
      for (std::size_t qi = 0; qi < weight_steps; ++qi) {
        const double q = static_cast<double>(qi) / static_cast<double>(weight_steps - 1);
        const double chi =
            block_entropy(q * r0 + (1.0 - q) * r1) - q * s0 - (1.0 - q) * s1;
        best = std::max(best, chi);
      }
    }
  }
  return best;
}

ScenarioReport chi_scan_report() {
  const double chi_max = orthogonal_ensemble_scan(make_damping_channel(), 64, 128, 41);
  ScenarioReport report{"chi-scan", {}, {}};
  report.quantities = {{"chi_max_orthogonal", chi_max}};
  report.checks.push_back(
      strictly_below("orthogonal-ensemble chi stays below the optimal value", 0.45667, chi_max));
  return report;
}

}  // namespace deficit

#pragma once

#include "deficit/channel.hpp"
#include "deficit/measurement.hpp"
#include "deficit/optimize.hpp"
#include "deficit/state.hpp"

#include <string>
#include <utility>
#include <vector>

namespace deficit {

/// One self-checked assertion inside a scenario. `expected` is the target (or
/// bound) and `tolerance` the allowed margin; `pass` is computed by the
/// scenario, which may interpret the pair as a two-sided or one-sided check.
struct ScenarioCheck {
  std::string description;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ScenarioReport {
  std::string name;
  std::vector<std::pair<std::string, double>> quantities;
  std::vector<ScenarioCheck> checks;

  bool overall() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Pure-state ensemble on Bob with the weights kept separate, as fed to
/// state_from_ensemble and to diagram_check.
struct WeightedPureStates {
  std::vector<double> weights;
  std::vector<PureState> states;
};

/// The SW99 construction: the equal-weight ensemble {(|0>+|1>)/sqrt(2),
/// (4/5)|0> - (3/5)|1>} correlated with Alice's basis, then the damping
/// channel on Bob's side.
WeightedPureStates sw99_ensemble();
DensityMatrix build_sw99_state();

/// The KNR01 construction: weights {0.4023, 0.29885, 0.29885} on |0> and
/// a|0> +/- b|1| with (a, b) = (0.5701579, 0.821535) normalized, then the
/// shifted-contraction channel on Bob's side. 3x2.
WeightedPureStates knr01_ensemble();
DensityMatrix build_knr01_state();

/// Named-value reproduction reports for the two constructions.
ScenarioReport sw99_report(const OptimizeOptions& options = {});
ScenarioReport knr01_report(const OptimizeOptions& options = {});

/// Equality C_HV = Delta_cl holds iff a measurement commuting with rho_A is
/// optimal for both; reports both optima, their gap, the eigenbasis value and
/// how far the best C_HV basis is from commuting with rho_A.
ScenarioReport lemma1_report(const DensityMatrix& rho, const OptimizeOptions& options = {});

/// lemma1_report on the SW99 state, with the additional expectations that the
/// gap is strictly positive and the best C_HV basis does not commute with
/// rho_A.
ScenarioReport lemma1_sw99_report(const OptimizeOptions& options = {});

/// Dephasing in the given (presumed C_HV-optimal) basis: C_HV is unchanged,
/// the dephased state has Delta_cl = C_HV, and Delta_cl increases whenever it
/// started strictly below C_HV.
ScenarioReport lemma2_demo(const DensityMatrix& rho, const ProjectiveMeasurement& m,
                           const OptimizeOptions& options = {});

/// Checks that pushing each ensemble member through the channel matches
/// measuring the channel-on-Bob joint state in Alice's computational basis
/// (weights to 1e-10, members to 1e-9).
ScenarioReport diagram_check(const WeightedPureStates& ensemble, const QubitChannel& channel);

/// Max Holevo chi over orthogonal two-state output ensembles
/// {q, L(|v><v|); 1-q, L(|v_perp><v_perp|)} on a (theta, phi, q) grid.
/// theta over [0, pi] inclusive, phi over [0, 2 pi) exclusive, q over [0, 1]
/// inclusive.
double orthogonal_ensemble_scan(const QubitChannel& channel, std::size_t theta_steps,
                                std::size_t phi_steps, std::size_t weight_steps);

/// chi-scan report for the damping channel on the default 64 x 128 x 41 grid.
ScenarioReport chi_scan_report();

}  // namespace deficit

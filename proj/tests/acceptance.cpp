// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Tolerances are pinned here and intentionally not configurable.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deficit/eig.hpp"
#include "deficit/measures.hpp"
#include "deficit/optimize.hpp"
#include "deficit/scenarios.hpp"

using namespace deficit;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %d [%s] %s  (%s)\n", index, pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

DensityMatrix random_state(std::size_t da, std::size_t db, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const std::size_t d = da * db;
  ComplexMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = Complex{unif(rng), unif(rng)};
  ComplexMatrix m = g * g.adjoint();
  m *= Complex{1.0 / m.trace().real(), 0.0};
  return DensityMatrix(Dims{da, db}, std::move(m));
}

ProjectiveMeasurement random_basis(std::size_t d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> params(d * d);
  for (auto& p : params) p = unif(rng) * 3.14159265358979;
  ComplexMatrix h(d, d);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d; ++i) h(i, i) = Complex{params[idx++], 0.0};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      h(i, j) = Complex{params[idx], params[idx + 1]};
      h(j, i) = std::conj(h(i, j));
      idx += 2;
    }
  return ProjectiveMeasurement::from_unitary(unitary_exp(h));
}

OptimizeOptions fast_options(std::uint64_t seed = 20240901) {
  OptimizeOptions o;
  o.starts = 8;
  o.max_iterations = 400;
  o.seed = seed;
  return o;
}

std::string serialize(const OptimizeResult& r) {
  std::ostringstream out;
  out.precision(17);
  out << r.value << '|' << r.best_start << '|' << r.evaluations << '|' << r.converged;
  for (const auto& v : r.measurement.basis())
    for (const auto& z : v) out << '|' << z.real() << ',' << z.imag();
  return out.str();
}

void criterion1() {
  const DensityMatrix rho = build_sw99_state();
  const double comp =
      classical_correlation(rho, ProjectiveMeasurement::computational(2));
  const double eig = classical_correlation(
      rho, ProjectiveMeasurement::eigenbasis(partial_trace(rho, Subsystem::A).matrix()));
  const bool comp_ok = std::abs(comp - 0.45667) <= 5e-4;
  const bool eig_ok = std::abs(eig - 0.3356) <= 5e-4;
  const bool strict_ok = comp > eig;
  report(1, "SW99 reproduction", comp_ok && eig_ok && strict_ok,
         "c_hv{|0>,|1>}=" + fmt(comp) + " target 0.45667+-5e-4 " +
             (comp_ok ? "ok" : "MISS") + "; eigenbasis=" + fmt(eig) +
             " target 0.3356+-5e-4 " + (eig_ok ? "ok" : "MISS") +
             "; strict comp>eig " + (strict_ok ? "ok" : "MISS"));
}

void criterion2() {
  const DensityMatrix rho = build_knr01_state();
  const double comp =
      classical_correlation(rho, ProjectiveMeasurement::computational(3));
  const double eig = classical_correlation(
      rho, ProjectiveMeasurement::eigenbasis(partial_trace(rho, Subsystem::A).matrix()));
  OptimizeOptions o = fast_options();
  o.support_restricted = true;
  const double restricted = maximize(rho, Objective::ClassicalCorrelation, o).value;
  const bool comp_ok = std::abs(comp - 0.32499) <= 5e-4;
  const bool bound_ok = restricted <= 0.321915 + 1e-3;
  const bool eig_ok = std::abs(eig - 0.321915) <= 5e-4;
  report(2, "KNR01 reproduction", comp_ok && bound_ok && eig_ok,
         "c_hv{|0>,|1>,|2>}=" + fmt(comp) + "; support-restricted max=" + fmt(restricted) +
             "; eigenbasis=" + fmt(eig));
}

void criterion3() {
  const double dcl = classical_deficit(build_knr01_state(),
                                       ProjectiveMeasurement::computational(3));
  report(3, "delta_cl negative on KNR01 computational basis", dcl < 0.0,
         "delta_cl=" + fmt(dcl));
}

void criterion4() {
  const DensityMatrix rho = build_sw99_state();
  const DensityMatrix dephased =
      dephase_alice(rho, ProjectiveMeasurement::computational(2));
  const OptimizeOptions o = fast_options();
  const double dcl_before = maximize(rho, Objective::ClassicalDeficit, o).value;
  const double dcl_after = maximize(dephased, Objective::ClassicalDeficit, o).value;
  const double chv_before = maximize(rho, Objective::ClassicalCorrelation, o).value;
  const double chv_after = maximize(dephased, Objective::ClassicalCorrelation, o).value;
  const bool increase_ok = dcl_after - dcl_before >= 0.05;
  const bool chv_stable_ok = std::abs(chv_after - chv_before) <= 2e-3;
  const bool saturation_ok = std::abs(dcl_after - chv_after) <= 2e-3;
  report(4, "Lemma 2 demonstration", increase_ok && chv_stable_ok && saturation_ok,
         "dcl " + fmt(dcl_before) + " -> " + fmt(dcl_after) + " (increase " +
             fmt(dcl_after - dcl_before) + ", need >= 0.05 " +
             (increase_ok ? "ok" : "MISS") + "); |chv' - chv|=" +
             fmt(std::abs(chv_after - chv_before)) + " <= 2e-3 " +
             (chv_stable_ok ? "ok" : "MISS") + "; |dcl' - chv'|=" +
             fmt(std::abs(dcl_after - chv_after)) + " <= 2e-3 " +
             (saturation_ok ? "ok" : "MISS"));
}

void criterion5() {
  std::mt19937_64 rng(20240905);
  bool ok = true;
  double worst_identity = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t da = (trial % 2 == 0) ? 2 : 3;
    const DensityMatrix rho = random_state(da, 2, rng);
    const ProjectiveMeasurement m = random_basis(da, rng);
    const auto q = evaluate_measurement(rho, m);
    const double identity =
        std::abs(q.quantum_deficit + q.classical_deficit - mutual_information(rho));
    worst_identity = std::max(worst_identity, identity);
    if (identity > 1e-9) ok = false;
    if (q.classical_deficit > q.classical_correlation + 1e-10) ok = false;
    if (q.classical_correlation < -1e-10) ok = false;
    if (q.alice_entropy_cost < -1e-9) ok = false;  // S(rho'_A) >= S(rho_A)
  }
  report(5, "identity suite on 200 random states", ok,
         "worst |deficit_q + delta_cl - I_M| = " + fmt(worst_identity));
}

void criterion6() {
  const ScenarioReport sw = diagram_check(sw99_ensemble(), make_damping_channel());
  const ScenarioReport knr =
      diagram_check(knr01_ensemble(), make_shifted_contraction_channel());
  double dev = 0.0;
  for (const auto& [label, value] : sw.quantities) dev = std::max(dev, value);
  for (const auto& [label, value] : knr.quantities) dev = std::max(dev, value);
  report(6, "commuting diagram for both ensembles", sw.overall() && knr.overall(),
         "max deviation " + fmt(dev));
}

void criterion7() {
  const double chi = orthogonal_ensemble_scan(make_damping_channel(), 64, 128, 41);
  report(7, "orthogonal-ensemble chi scan below 0.45667", chi < 0.45667,
         "chi_max=" + fmt(chi));
}

void criterion8() {
  std::mt19937_64 rng(20240908);
  bool agree_ok = true;
  bool reeval_ok = true;
  double worst_gap = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = random_state(2, 2, rng);
    OptimizeOptions o = fast_options();
    o.starts = 6;
    const OptimizeResult r = maximize(rho, Objective::ClassicalCorrelation, o);
    const double grid =
        qubit_grid_maximize(rho, Objective::ClassicalCorrelation, 61, 120).value;
    worst_gap = std::max(worst_gap, std::abs(r.value - grid));
    if (std::abs(r.value - grid) > 1e-3) agree_ok = false;
    if (std::abs(classical_correlation(rho, r.measurement) - r.value) > 1e-10)
      reeval_ok = false;
  }
  // Byte-level determinism of a fixed-seed run.
  std::mt19937_64 rng2(1);
  const DensityMatrix rho = random_state(2, 2, rng2);
  OptimizeOptions oa = fast_options(7);
  oa.threads = 1;
  OptimizeOptions ob = fast_options(7);
  ob.threads = 3;
  const bool deterministic_ok =
      serialize(maximize(rho, Objective::ClassicalCorrelation, oa)) ==
      serialize(maximize(rho, Objective::ClassicalCorrelation, ob));
  report(8, "optimizer soundness", agree_ok && reeval_ok && deterministic_ok,
         "worst |opt - grid| = " + fmt(worst_gap) + "; re-eval " +
             (reeval_ok ? "ok" : "MISS") + "; fixed-seed identical " +
             (deterministic_ok ? "ok" : "MISS"));
}

void criterion9() {
  std::mt19937_64 rng(20240909);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  bool ok = true;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    // eigendecomposition reconstruction
    ComplexMatrix h(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      h(i, i) = Complex{unif(rng), 0.0};
      for (std::size_t j = i + 1; j < d; ++j) {
        h(i, j) = Complex{unif(rng), unif(rng)};
        h(j, i) = std::conj(h(i, j));
      }
    }
    const HermitianEigen e = hermitian_eig(h);
    ComplexMatrix diag(d, d);
    for (std::size_t i = 0; i < d; ++i) diag(i, i) = Complex{e.eigenvalues[i], 0.0};
    if (!(e.eigenvectors * diag * e.eigenvectors.adjoint()).approx_equal(h, 1e-10)) ok = false;

    // unitary invariance of entropy
    const DensityMatrix rho = random_state(2, 2, rng);
    const ComplexMatrix u = unitary_exp(h.rows() == 4 ? h : ComplexMatrix::identity(4));
    if (u.rows() == 4) {
      const DensityMatrix rotated(Dims{2, 2}, u * rho.matrix() * u.adjoint());
      if (std::abs(entropy(rotated) - entropy(rho)) > 1e-9) ok = false;
    }

    // trace/positivity preservation of dephasing and channel application
    const ProjectiveMeasurement m = random_basis(2, rng);
    const DensityMatrix dephased = dephase_alice(rho, m);
    if (std::abs(dephased.matrix().trace().real() - 1.0) > 1e-10) ok = false;
    const DensityMatrix mapped = make_damping_channel().apply_to_bob(rho);
    if (std::abs(mapped.matrix().trace().real() - 1.0) > 1e-10) ok = false;
    for (const DensityMatrix* s : {&dephased, &mapped}) {
      for (double lambda : hermitian_eig(s->matrix()).eigenvalues) {
        if (lambda < -1e-9) ok = false;
      }
    }
  }
  report(9, "entropy/linalg property suite", ok, "40 randomized trials");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures != 0) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

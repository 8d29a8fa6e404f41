#include "deficit/optimize.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace deficit;

namespace {

DensityMatrix bell_state() {
  std::vector<Complex> amp = {Complex{std::sqrt(0.5), 0.0}, {}, {}, Complex{std::sqrt(0.5), 0.0}};
  return PureState(Dims{2, 2}, amp).to_density();
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

OptimizeOptions quick_options() {
  OptimizeOptions o;
  o.starts = 6;
  o.max_iterations = 300;
  return o;
}

}  // namespace

TEST_CASE("Bell state maxima are 1") {
  const DensityMatrix rho = bell_state();
  CHECK(maximize(rho, Objective::ClassicalCorrelation, quick_options()).value ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(maximize(rho, Objective::ClassicalDeficit, quick_options()).value ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(minimize_quantum_deficit(rho, quick_options()).value ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("product state maxima are 0") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{0.6, 0.1}, {0.1, 0.4}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{0.8, 0}, {0, 0.2}});
  const DensityMatrix rho(Dims{2, 2}, tensor(a, b));
  CHECK(std::abs(maximize(rho, Objective::ClassicalCorrelation, quick_options()).value) < 1e-9);
  CHECK(std::abs(minimize_quantum_deficit(rho, quick_options()).value) < 1e-7);
}

TEST_CASE("result value matches re-evaluation at the reported measurement") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    const DensityMatrix rho = random_state(2, 2, rng);
    for (Objective obj : {Objective::ClassicalCorrelation, Objective::ClassicalDeficit}) {
      const OptimizeResult r = maximize(rho, obj, quick_options());
      const auto q = evaluate_measurement(rho, r.measurement);
      const double re = obj == Objective::ClassicalCorrelation ? q.classical_correlation
                                                               : q.classical_deficit;
      CHECK(std::abs(r.value - re) < 1e-10);
    }
  }
}

TEST_CASE("fixed seed is deterministic and thread-count independent") {
  std::mt19937_64 rng(67);
  const DensityMatrix rho = random_state(2, 2, rng);
  OptimizeOptions a = quick_options();
  a.seed = 7;
  a.threads = 1;
  OptimizeOptions b = a;
  b.threads = 4;
  const OptimizeResult ra = maximize(rho, Objective::ClassicalCorrelation, a);
  const OptimizeResult rb = maximize(rho, Objective::ClassicalCorrelation, b);
  CHECK(ra.value == rb.value);
  CHECK(ra.best_start == rb.best_start);
  CHECK(ra.evaluations == rb.evaluations);
  for (std::size_t i = 0; i < ra.measurement.dim(); ++i) {
    for (std::size_t k = 0; k < ra.measurement.dim(); ++k) {
      CHECK(ra.measurement.basis()[i][k] == rb.measurement.basis()[i][k]);
    }
  }
}

TEST_CASE("optimizer agrees with the qubit grid oracle") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 12; ++trial) {
    const DensityMatrix rho = random_state(2, 2, rng);
    const double opt =
        maximize(rho, Objective::ClassicalCorrelation, quick_options()).value;
    const double grid =
        qubit_grid_maximize(rho, Objective::ClassicalCorrelation, 65, 128).value;
    CHECK(opt >= grid - 1e-10);  // the grid is a subset of the search space
    CHECK(std::abs(opt - grid) <= 1e-3);
  }
}

TEST_CASE("more restarts never hurt") {
  std::mt19937_64 rng(73);
  const DensityMatrix rho = random_state(3, 2, rng);
  OptimizeOptions few = quick_options();
  few.starts = 4;
  OptimizeOptions many = few;
  many.starts = 8;
  const double v_few = maximize(rho, Objective::ClassicalCorrelation, few).value;
  const double v_many = maximize(rho, Objective::ClassicalCorrelation, many).value;
  CHECK(v_many >= v_few - 1e-12);
}

TEST_CASE("delta_cl maximum never exceeds c_hv maximum") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 6; ++trial) {
    const DensityMatrix rho = random_state(2, 2, rng);
    const double chv = maximize(rho, Objective::ClassicalCorrelation, quick_options()).value;
    const double dcl = maximize(rho, Objective::ClassicalDeficit, quick_options()).value;
    CHECK(dcl <= chv + 1e-6);
  }
}

TEST_CASE("deficit and classical deficit split the mutual information") {
  std::mt19937_64 rng(83);
  const DensityMatrix rho = random_state(2, 2, rng);
  const OptimizeResult dcl = maximize(rho, Objective::ClassicalDeficit, quick_options());
  const OptimizeResult dq = minimize_quantum_deficit(rho, quick_options());
  CHECK(std::abs(dcl.value + dq.value - mutual_information(rho)) < 2e-6);
}

TEST_CASE("support-restricted search stays inside the support") {
  // A state whose rho_A has a kernel direction: |psi> on a 3x2 system with
  // Alice support {|0>, |1>}.
  const PureState psi(Dims{3, 2}, {Complex{std::sqrt(0.5), 0.0}, Complex{0, 0}, Complex{0, 0},
                                   Complex{std::sqrt(0.5), 0.0}, Complex{0, 0}, Complex{0, 0}});
  const DensityMatrix rho = psi.to_density();
  OptimizeOptions o = quick_options();
  o.support_restricted = true;
  const OptimizeResult r = maximize(rho, Objective::ClassicalCorrelation, o);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
  // The optimum over the 2-dimensional support equals the full-space optimum
  // for this state.
  o.support_restricted = false;
  CHECK(maximize(rho, Objective::ClassicalCorrelation, o).value ==
        doctest::Approx(r.value).epsilon(1e-6));
}

TEST_CASE("grid scan rejects non-qubit Alice") {
  const PureState psi(Dims{3, 2}, {Complex{1, 0}, {}, {}, {}, {}, {}});
  CHECK_THROWS(qubit_grid_maximize(psi.to_density(), Objective::ClassicalCorrelation, 8, 8));
}

#include "deficit/optimize.hpp"

#include "deficit/eig.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace deficit {

namespace {

constexpr double kSupportCutoff = 1e-9;

std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("DEFICIT_LAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

/// Hermitian matrix from n^2 real parameters: n diagonal entries followed by
/// (re, im) pairs for the strict upper triangle.
ComplexMatrix hermitian_from_params(std::size_t n, const std::vector<double>& x) {
  ComplexMatrix h(n, n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) h(i, i) = Complex{x[idx++], 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double re = x[idx++];
      const double im = x[idx++];
      h(i, j) = Complex{re, im};
      h(j, i) = Complex{re, -im};
    }
  }
  return h;
}

/// Objective landscape shared by all starts. Parameters live in the tangent
/// space at a base unitary: U(x) = B0 * exp(i H(x)) acts on the (possibly
/// support-restricted) n-dimensional block, after which kernel columns are
/// appended to complete the Alice basis.
struct Landscape {
  const DensityMatrix& rho;
  Objective objective;
  std::size_t n;                // optimized block dimension
  ComplexMatrix base;           // n x n unitary, incumbent for refinement
  ComplexMatrix embed;          // d_A x n isometry onto the optimized block
  ComplexMatrix kernel;         // d_A x (d_A - n) isometry onto the rest

  ProjectiveMeasurement measurement_at(const std::vector<double>& x) const {
    const ComplexMatrix u = base * unitary_exp(hermitian_from_params(n, x));
    const std::size_t da = rho.dims().a;
    std::vector<std::vector<Complex>> basis;
    basis.reserve(da);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Complex> v(da, Complex{0.0, 0.0});
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < n; ++k) v[i] += embed(i, k) * u(k, j);
      basis.push_back(std::move(v));
    }
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
      std::vector<Complex> v(da);
      for (std::size_t i = 0; i < da; ++i) v[i] = kernel(i, j);
      basis.push_back(std::move(v));
    }
    return ProjectiveMeasurement(std::move(basis));
  }

  double value_at(const std::vector<double>& x) const {
    const MeasuredQuantities q = evaluate_measurement(rho, measurement_at(x));
    return objective == Objective::ClassicalCorrelation ? q.classical_correlation
                                                        : q.classical_deficit;
  }
};

struct StartResult {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> params;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Standard Nelder-Mead (reflect 1, expand 2, contract 1/2, shrink 1/2) on
/// -landscape.value_at; stops when the simplex value spread drops below tol.
StartResult nelder_mead(const Landscape& land, std::vector<double> x0, double step,
                        std::size_t max_iterations, double tol) {
  const std::size_t dim = x0.size();
  struct Vertex {
    std::vector<double> x;
    double f;
  };
  StartResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return -land.value_at(x);
  };

  std::vector<Vertex> simplex;
  simplex.push_back({x0, eval(x0)});
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<double> x = x0;
    x[k] += step;
    simplex.push_back({x, eval(x)});
  }
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex.back().f - simplex.front().f < tol) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[v].x[k] / dim;

    auto point = [&](double coeff) {
      std::vector<double> x(dim);
      for (std::size_t k = 0; k < dim; ++k)
        x[k] = centroid[k] + coeff * (centroid[k] - simplex.back().x[k]);
      return x;
    };

    const std::vector<double> xr = point(1.0);
    const double fr = eval(xr);
    if (fr < simplex.front().f) {
      const std::vector<double> xe = point(2.0);
      const double fe = eval(xe);
      simplex.back() = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < simplex[dim - 1].f) {
      simplex.back() = {xr, fr};
    } else {
      const std::vector<double> xc = point(fr < simplex.back().f ? 0.5 : -0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, simplex.back().f)) {
        simplex.back() = {xc, fc};
      } else {
        for (std::size_t v = 1; v <= dim; ++v) {
          for (std::size_t k = 0; k < dim; ++k)
            simplex[v].x[k] = 0.5 * (simplex[v].x[k] + simplex[0].x[k]);
          simplex[v].f = eval(simplex[v].x);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  result.value = -simplex.front().f;
  result.params = simplex.front().x;
  return result;
}

}  // namespace

OptimizeResult maximize(const DensityMatrix& rho, Objective objective,
                        const OptimizeOptions& options) {
  const std::size_t da = rho.dims().a;
  if (rho.dims().b < 2) throw std::invalid_argument("maximize: state must be bipartite");

  // Select the optimized block of Alice's space.
  const HermitianEigen a_eig = hermitian_eig(partial_trace(rho, Subsystem::A).matrix());
  std::size_t n = da;
  ComplexMatrix embed = ComplexMatrix::identity(da);
  ComplexMatrix kernel(da, 0);
  if (options.support_restricted) {
    std::vector<std::size_t> support, rest;
    for (std::size_t k = 0; k < da; ++k) {
      (a_eig.eigenvalues[k] > kSupportCutoff ? support : rest).push_back(k);
    }
    n = support.size();
    if (n == 0) throw std::invalid_argument("maximize: rho_A has empty support");
    embed = ComplexMatrix(da, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < da; ++i) embed(i, j) = a_eig.eigenvectors(i, support[j]);
    kernel = ComplexMatrix(da, rest.size());
    for (std::size_t j = 0; j < rest.size(); ++j)
      for (std::size_t i = 0; i < da; ++i) kernel(i, j) = a_eig.eigenvectors(i, rest[j]);
  }

  Landscape land{rho, objective, n, ComplexMatrix::identity(n), embed, kernel};
  const std::size_t param_count = n * n;

  // Coarse qubit seed: when the optimized block is two-dimensional the global
  // structure is cheap to scan, and refinement then starts from the incumbent.
  std::size_t grid_evaluations = 0;
  if (n == 2 && options.grid_points >= 2) {
    const std::size_t gt = options.grid_points;
    double best = -std::numeric_limits<double>::infinity();
    ComplexMatrix best_u = ComplexMatrix::identity(2);
    for (std::size_t ti = 0; ti <= gt; ++ti) {
      const double theta = std::numbers::pi * static_cast<double>(ti) / static_cast<double>(gt);
      for (std::size_t pi_i = 0; pi_i < 2 * gt; ++pi_i) {
        const double phi =
            std::numbers::pi * static_cast<double>(pi_i) / static_cast<double>(gt);
        const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
        const Complex phase = std::polar(1.0, phi);
        ComplexMatrix u = ComplexMatrix::from_rows(
            {{Complex{c, 0.0}, Complex{-s, 0.0}}, {s * phase, c * phase}});
        Landscape probe{rho, objective, n, u, embed, kernel};
        const double v = probe.value_at(std::vector<double>(param_count, 0.0));
        ++grid_evaluations;
        if (v > best) {
          best = v;
          best_u = u;
        }
      }
    }
    land.base = best_u;
  }

  // Multistart: start 0 refines the incumbent (zero offset, small simplex);
  // the rest draw random Hermitian generators from per-start streams.
  const std::size_t starts = std::max<std::size_t>(options.starts, 1);
  std::vector<StartResult> results(starts);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t s = next.fetch_add(1); s < starts; s = next.fetch_add(1)) {
      std::vector<double> x0(param_count, 0.0);
      double step = 0.05;
      if (s > 0) {
        std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * s);
        std::uniform_real_distribution<double> unif(-std::numbers::pi, std::numbers::pi);
        for (auto& v : x0) v = unif(rng);
        step = 0.5;
      }
      results[s] = nelder_mead(land, std::move(x0), step, options.max_iterations,
                               options.tolerance);
    }
  };
  const std::size_t thread_count = std::min(resolve_threads(options.threads), starts);
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::size_t best = 0;
  for (std::size_t s = 1; s < starts; ++s) {
    if (results[s].value > results[best].value) best = s;
  }

  OptimizeResult out;
  out.value = results[best].value;
  out.measurement = land.measurement_at(results[best].params);
  out.quantities = evaluate_measurement(rho, out.measurement);
  out.best_start = best;
  out.converged = results[best].converged;
  out.evaluations = grid_evaluations;
  for (const auto& r : results) out.evaluations += r.evaluations;
  return out;
}

OptimizeResult minimize_quantum_deficit(const DensityMatrix& rho,
                                        const OptimizeOptions& options) {
  OptimizeResult out = maximize(rho, Objective::ClassicalDeficit, options);
  out.value = out.quantities.quantum_deficit;
  return out;
}

QubitGridResult qubit_grid_maximize(const DensityMatrix& rho, Objective objective,
                                    std::size_t theta_steps, std::size_t phi_steps) {
  if (rho.dims().a != 2) throw std::invalid_argument("qubit_grid_maximize: Alice must be a qubit");
  if (theta_steps < 2 || phi_steps < 1) {
    throw std::invalid_argument("qubit_grid_maximize: grid too small");
  }
  QubitGridResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::size_t ti = 0; ti < theta_steps; ++ti) {
    const double theta = std::numbers::pi * static_cast<double>(ti) /
                         static_cast<double>(theta_steps - 1);
    for (std::size_t pi_i = 0; pi_i < phi_steps; ++pi_i) {
      const double phi =
          2.0 * std::numbers::pi * static_cast<double>(pi_i) / static_cast<double>(phi_steps);
      const MeasuredQuantities q =
          evaluate_measurement(rho, ProjectiveMeasurement::qubit(theta, phi));
      const double v = objective == Objective::ClassicalCorrelation ? q.classical_correlation
                                                                    : q.classical_deficit;
      if (v > best.value) best = {v, theta, phi};
    }
  }
  return best;
}

}  // namespace deficit

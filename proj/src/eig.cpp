#include "deficit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace deficit {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagThreshold = 1e-13;

double off_diagonal_norm(const ComplexMatrix& h) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) sum += std::norm(h(i, j));
  return std::sqrt(sum);
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& h, double hermitian_tol) {
  if (!h.square()) throw std::invalid_argument("hermitian_eig: matrix not square");
  if (!h.is_hermitian(hermitian_tol)) {
    throw std::invalid_argument("hermitian_eig: matrix not Hermitian within tolerance");
  }

  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  // Symmetrize exactly so roundoff in the input cannot bias the rotations.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex{a(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  int sweep = 0;
  while (off_diagonal_norm(a) > kOffDiagThreshold) {
    if (++sweep > kMaxSweeps) {
      throw std::runtime_error("hermitian_eig: Jacobi iteration did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Rotation angle zeroing the (p,q) element: t solves t^2 + 2*tau*t = 1
        // with tau = (app - aqq) / (2|apq|); smaller root for stability.
        const double tau = (app - aqq) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns: col_p <- c*col_p + s*conj(phase)*col_q,
        //          col_q <- -s*phase*col_p + c*col_q  (and rows by adjoint).
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip + s * std::conj(phase) * aiq;
          a(i, q) = -s * phase * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj + s * phase * aqj;
          a(q, j) = -s * std::conj(phase) * apj + c * aqj;
        }
        a(p, q) = Complex{0.0, 0.0};
        a(q, p) = Complex{0.0, 0.0};
        a(p, p) = Complex{a(p, p).real(), 0.0};
        a(q, q) = Complex{a(q, q).real(), 0.0};

        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip + s * std::conj(phase) * viq;
          v(i, q) = -s * phase * vip + c * viq;
        }
      }
    }
  }

  // Stable descending sort; ties keep first-occurrence order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix unitary_exp(const ComplexMatrix& h) {
  const HermitianEigen eig = hermitian_eig(h);
  const std::size_t n = h.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::exp(Complex{0.0, eig.eigenvalues[k]});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += phase * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  }
  return out;
}

}  // namespace deficit

#include "deficit/state.hpp"

#include "deficit/eig.hpp"

#include <cmath>
#include <stdexcept>

namespace deficit {

namespace {

constexpr double kEigenvalueFloor = -1e-9;

void validate_density(const Dims& dims, const ComplexMatrix& m) {
  if (!m.square() || m.rows() != dims.total()) {
    throw std::invalid_argument("DensityMatrix: matrix dimension does not match dims");
  }
  if (!m.is_hermitian(1e-9)) {
    throw std::invalid_argument("DensityMatrix: matrix not Hermitian");
  }
  if (std::abs(m.trace() - Complex{1.0, 0.0}) > 1e-9) {
    throw std::invalid_argument("DensityMatrix: trace not 1");
  }
  const HermitianEigen eig = hermitian_eig(m);
  for (double lambda : eig.eigenvalues) {
    if (lambda < kEigenvalueFloor) {
      throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
    }
  }
}

}  // namespace

DensityMatrix::DensityMatrix(Dims dims, ComplexMatrix matrix)
    : dims_(dims), mat_(std::move(matrix)) {
  validate_density(dims_, mat_);
}

DensityMatrix DensityMatrix::single(ComplexMatrix matrix) {
  const std::size_t n = matrix.rows();
  return DensityMatrix(Dims{n, 1}, std::move(matrix));
}

PureState::PureState(Dims dims, std::vector<Complex> amplitudes)
    : dims_(dims), amp_(std::move(amplitudes)) {
  if (amp_.size() != dims_.total()) {
    throw std::invalid_argument("PureState: amplitude count does not match dims");
  }
  double norm2 = 0.0;
  for (const auto& a : amp_) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
    throw std::invalid_argument("PureState: amplitudes not normalized");
  }
}

DensityMatrix PureState::to_density() const {
  return DensityMatrix(dims_, ComplexMatrix::outer(amp_));
}

DensityMatrix Ensemble::average() const {
  if (weights.size() != members.size() || members.empty()) {
    throw std::invalid_argument("Ensemble: weight/member count mismatch");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("Ensemble: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("Ensemble: weights do not sum to 1");
  ComplexMatrix avg(members[0].dim(), members[0].dim());
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k].dims() != members[0].dims()) {
      throw std::invalid_argument("Ensemble: members have mixed dims");
    }
    avg += weights[k] * members[k].matrix();
  }
  return DensityMatrix(members[0].dims(), std::move(avg));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  const std::size_t da = rho.dims().a;
  const std::size_t db = rho.dims().b;
  const ComplexMatrix& m = rho.matrix();
  if (keep == Subsystem::A) {
    ComplexMatrix out(da, da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return DensityMatrix::single(std::move(out));
  }
  ComplexMatrix out(db, db);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return DensityMatrix::single(std::move(out));
}

double entropy(const DensityMatrix& rho) {
  const HermitianEigen eig = hermitian_eig(rho.matrix());
  double s = 0.0;
  for (double lambda : eig.eigenvalues) {
    if (lambda <= 0.0) continue;  // clipped; validation already bounded the noise
    s -= lambda * std::log2(lambda);
  }
  return s;
}

double information_content(const DensityMatrix& rho) {
  return std::log2(static_cast<double>(rho.dim())) - entropy(rho);
}

double mutual_information(const DensityMatrix& rho) {
  return entropy(partial_trace(rho, Subsystem::A)) + entropy(partial_trace(rho, Subsystem::B)) -
         entropy(rho);
}

PureState state_from_ensemble(const std::vector<double>& weights,
                              const std::vector<PureState>& states) {
  if (weights.size() != states.size() || states.empty()) {
    throw std::invalid_argument("state_from_ensemble: weight/state count mismatch");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("state_from_ensemble: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("state_from_ensemble: weights do not sum to 1");
  }
  const std::size_t da = states.size();
  const std::size_t db = states[0].dims().total();
  std::vector<Complex> amp(da * db, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < da; ++i) {
    if (states[i].dims().total() != db) {
      throw std::invalid_argument("state_from_ensemble: states have mixed dimension");
    }
    const double root = std::sqrt(weights[i]);
    for (std::size_t k = 0; k < db; ++k) amp[i * db + k] = root * states[i].amplitudes()[k];
  }
  return PureState(Dims{da, db}, std::move(amp));
}

double holevo_chi(const Ensemble& ensemble) {
  double avg_member_entropy = 0.0;
  for (std::size_t k = 0; k < ensemble.members.size(); ++k) {
    avg_member_entropy += ensemble.weights[k] * entropy(ensemble.members[k]);
  }
  return entropy(ensemble.average()) - avg_member_entropy;
}

}  // namespace deficit

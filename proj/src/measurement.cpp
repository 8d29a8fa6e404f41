#include "deficit/measurement.hpp"

#include "deficit/eig.hpp"

#include <cmath>
#include <stdexcept>

namespace deficit {

namespace {

constexpr double kBranchCutoff = 1e-14;

}  // namespace

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<std::vector<Complex>> basis)
    : basis_(std::move(basis)) {
  const std::size_t d = basis_.size();
  if (d == 0) throw std::invalid_argument("ProjectiveMeasurement: empty basis");
  for (const auto& v : basis_) {
    if (v.size() != d) throw std::invalid_argument("ProjectiveMeasurement: vector of wrong length");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Complex ip{0.0, 0.0};
      for (std::size_t k = 0; k < d; ++k) ip += std::conj(basis_[i][k]) * basis_[j][k];
      const Complex expected = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(ip - expected) > 1e-9) {
        throw std::invalid_argument("ProjectiveMeasurement: basis not orthonormal");
      }
    }
  }
}

ProjectiveMeasurement ProjectiveMeasurement::from_unitary(const ComplexMatrix& u) {
  if (!u.square()) throw std::invalid_argument("ProjectiveMeasurement: unitary must be square");
  const std::size_t d = u.rows();
  std::vector<std::vector<Complex>> basis(d, std::vector<Complex>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) basis[j][i] = u(i, j);
  return ProjectiveMeasurement(std::move(basis));
}

ProjectiveMeasurement ProjectiveMeasurement::computational(std::size_t d) {
  std::vector<std::vector<Complex>> basis(d, std::vector<Complex>(d, Complex{0.0, 0.0}));
  for (std::size_t i = 0; i < d; ++i) basis[i][i] = Complex{1.0, 0.0};
  return ProjectiveMeasurement(std::move(basis));
}

ProjectiveMeasurement ProjectiveMeasurement::eigenbasis(const ComplexMatrix& hermitian) {
  return from_unitary(hermitian_eig(hermitian).eigenvectors);
}

ProjectiveMeasurement ProjectiveMeasurement::qubit(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex phase = std::polar(1.0, phi);
  return ProjectiveMeasurement({{Complex{c, 0.0}, s * phase}, {Complex{-s, 0.0}, c * phase}});
}

ComplexMatrix ProjectiveMeasurement::projector(std::size_t i) const {
  return ComplexMatrix::outer(basis_.at(i));
}

std::vector<MeasurementBranch> measure_alice(const DensityMatrix& rho,
                                             const ProjectiveMeasurement& m) {
  const std::size_t da = rho.dims().a;
  const std::size_t db = rho.dims().b;
  if (m.dim() != da) throw std::invalid_argument("measure_alice: measurement dimension mismatch");
  const ComplexMatrix& mat = rho.matrix();
  std::vector<MeasurementBranch> branches;
  for (std::size_t i = 0; i < da; ++i) {
    const auto& e = m.basis()[i];
    // <e_i| rho |e_i> on the A factor: a db x db block.
    ComplexMatrix block(db, db);
    for (std::size_t p = 0; p < da; ++p)
      for (std::size_t q = 0; q < da; ++q) {
        const Complex w = std::conj(e[p]) * e[q];
        if (w == Complex{0.0, 0.0}) continue;
        for (std::size_t r = 0; r < db; ++r)
          for (std::size_t c = 0; c < db; ++c) block(r, c) += w * mat(p * db + r, q * db + c);
      }
    const double prob = block.trace().real();
    if (prob < kBranchCutoff) continue;
    block *= Complex{1.0 / prob, 0.0};
    branches.push_back({prob, DensityMatrix::single(std::move(block))});
  }
  return branches;
}

Povm::Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("Povm: empty element list");
  const std::size_t d = elements_[0].rows();
  ComplexMatrix sum(d, d);
  for (const auto& e : elements_) {
    if (e.rows() != d || e.cols() != d) throw std::invalid_argument("Povm: mixed element shapes");
    for (double lambda : hermitian_eig(e).eigenvalues) {
      if (lambda < -1e-9) throw std::invalid_argument("Povm: element not positive semidefinite");
    }
    sum += e;
  }
  if (!sum.approx_equal(ComplexMatrix::identity(d), 1e-9)) {
    throw std::invalid_argument("Povm: elements do not sum to identity");
  }
}

std::vector<MeasurementBranch> measure_alice(const DensityMatrix& rho, const Povm& m) {
  const std::size_t da = rho.dims().a;
  const std::size_t db = rho.dims().b;
  if (m.dim() != da) throw std::invalid_argument("measure_alice: measurement dimension mismatch");
  const ComplexMatrix& mat = rho.matrix();
  std::vector<MeasurementBranch> branches;
  for (const auto& e : m.elements()) {
    // Tr_A((M tensor I) rho): only the Alice factor is affected, so the Bob
    // block is sum_{p,q} M(q, p) rho[p-block, q-block].
    ComplexMatrix block(db, db);
    for (std::size_t p = 0; p < da; ++p)
      for (std::size_t q = 0; q < da; ++q) {
        const Complex w = e(q, p);
        if (w == Complex{0.0, 0.0}) continue;
        for (std::size_t r = 0; r < db; ++r)
          for (std::size_t c = 0; c < db; ++c) block(r, c) += w * mat(p * db + r, q * db + c);
      }
    const double prob = block.trace().real();
    if (prob < kBranchCutoff) continue;
    block *= Complex{1.0 / prob, 0.0};
    branches.push_back({prob, DensityMatrix::single(std::move(block))});
  }
  return branches;
}

namespace {

Ensemble branches_to_ensemble(std::vector<MeasurementBranch> branches) {
  Ensemble out;
  for (auto& b : branches) {
    out.weights.push_back(b.probability);
    out.members.push_back(std::move(b.state));
  }
  // Dropped near-zero branches leave the weights fractionally short of 1;
  // rescale so the ensemble invariant holds exactly.
  double total = 0.0;
  for (double w : out.weights) total += w;
  for (double& w : out.weights) w /= total;
  return out;
}

}  // namespace

Ensemble outcome_ensemble(const DensityMatrix& rho, const ProjectiveMeasurement& m) {
  return branches_to_ensemble(measure_alice(rho, m));
}

Ensemble outcome_ensemble(const DensityMatrix& rho, const Povm& m) {
  return branches_to_ensemble(measure_alice(rho, m));
}

ProjectiveMeasurement refine(const std::vector<ComplexMatrix>& projectors,
                             const DensityMatrix& rho_ab) {
  if (projectors.empty()) throw std::invalid_argument("refine: empty projector list");
  const std::size_t d = projectors[0].rows();
  ComplexMatrix sum(d, d);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const ComplexMatrix& p = projectors[i];
    if (p.rows() != d || p.cols() != d) throw std::invalid_argument("refine: mixed shapes");
    if (!p.is_hermitian(1e-9) || !(p * p).approx_equal(p, 1e-9)) {
      throw std::invalid_argument("refine: element is not a projector");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if ((p * projectors[j]).max_abs() > 1e-9) {
        throw std::invalid_argument("refine: projectors not mutually orthogonal");
      }
    }
    sum += p;
  }
  if (!sum.approx_equal(ComplexMatrix::identity(d), 1e-9)) {
    throw std::invalid_argument("refine: projectors not complete");
  }

  const ComplexMatrix rho_a = partial_trace(rho_ab, Subsystem::A).matrix();
  std::vector<std::vector<Complex>> basis;
  basis.reserve(d);
  for (const auto& p : projectors) {
    // Isometry onto the block: eigenvectors of P with eigenvalue 1.
    const HermitianEigen proj_eig = hermitian_eig(p);
    std::size_t rank = 0;
    for (double lambda : proj_eig.eigenvalues) {
      if (lambda > 0.5) ++rank;
    }
    ComplexMatrix v(d, rank);
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t i = 0; i < d; ++i) v(i, j) = proj_eig.eigenvectors(i, j);
    // Split the block along the eigenbasis of the compressed V^dag rho_A V.
    const ComplexMatrix vw = v * hermitian_eig(v.adjoint() * rho_a * v).eigenvectors;
    for (std::size_t j = 0; j < rank; ++j) {
      std::vector<Complex> col(d);
      for (std::size_t i = 0; i < d; ++i) col[i] = vw(i, j);
      basis.push_back(std::move(col));
    }
  }
  return ProjectiveMeasurement(std::move(basis));
}

DensityMatrix dephase_alice(const DensityMatrix& rho, const ProjectiveMeasurement& m) {
  const std::size_t da = rho.dims().a;
  const std::size_t db = rho.dims().b;
  if (m.dim() != da) throw std::invalid_argument("dephase_alice: measurement dimension mismatch");
  ComplexMatrix out(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i) {
    const ComplexMatrix pi = tensor(m.projector(i), ComplexMatrix::identity(db));
    out += pi * rho.matrix() * pi;
  }
  return DensityMatrix(rho.dims(), std::move(out));
}

}  // namespace deficit

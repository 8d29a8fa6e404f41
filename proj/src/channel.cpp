#include "deficit/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace deficit {

namespace {

const ComplexMatrix kPauli[3] = {
    ComplexMatrix::from_rows({{0, 1}, {1, 0}}),
    ComplexMatrix::from_rows({{0, Complex{0, -1}}, {Complex{0, 1}, 0}}),
    ComplexMatrix::from_rows({{1, 0}, {0, -1}}),
};

}  // namespace

QubitChannel QubitChannel::from_kraus(std::vector<ComplexMatrix> kraus) {
  if (kraus.empty()) throw std::invalid_argument("QubitChannel: empty Kraus list");
  ComplexMatrix sum(2, 2);
  for (const auto& k : kraus) {
    if (k.rows() != 2 || k.cols() != 2) {
      throw std::invalid_argument("QubitChannel: Kraus operators must be 2x2");
    }
    sum += k.adjoint() * k;
  }
  if (!sum.approx_equal(ComplexMatrix::identity(2), 1e-10)) {
    throw std::invalid_argument("QubitChannel: Kraus operators not trace preserving");
  }
  QubitChannel c;
  c.use_kraus_ = true;
  c.kraus_ = std::move(kraus);
  return c;
}

QubitChannel QubitChannel::from_bloch_affine(const std::array<double, 3>& scale,
                                             const std::array<double, 3>& offset) {
  QubitChannel c;
  c.use_kraus_ = false;
  c.scale_ = scale;
  c.offset_ = offset;
  return c;
}

ComplexMatrix QubitChannel::apply_block(const ComplexMatrix& x) const {
  if (x.rows() != 2 || x.cols() != 2) {
    throw std::invalid_argument("QubitChannel: block must be 2x2");
  }
  if (use_kraus_) {
    ComplexMatrix out(2, 2);
    for (const auto& k : kraus_) out += k * x * k.adjoint();
    return out;
  }
  const Complex half_tr = 0.5 * x.trace();
  ComplexMatrix out = half_tr * ComplexMatrix::identity(2);
  for (int k = 0; k < 3; ++k) {
    const Complex coeff = half_tr * offset_[k] + 0.5 * scale_[k] * (kPauli[k] * x).trace();
    out += coeff * kPauli[k];
  }
  return out;
}

DensityMatrix QubitChannel::apply(const DensityMatrix& rho) const {
  if (rho.dim() != 2) throw std::invalid_argument("QubitChannel: state must be a qubit");
  return DensityMatrix(rho.dims(), apply_block(rho.matrix()));
}

DensityMatrix QubitChannel::apply_to_bob(const DensityMatrix& rho) const {
  const std::size_t da = rho.dims().a;
  if (rho.dims().b != 2) throw std::invalid_argument("QubitChannel: Bob must be a qubit");
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(2 * da, 2 * da);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      ComplexMatrix block(2, 2);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) block(r, c) = m(i * 2 + r, j * 2 + c);
      const ComplexMatrix mapped = apply_block(block);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) out(i * 2 + r, j * 2 + c) = mapped(r, c);
    }
  }
  return DensityMatrix(rho.dims(), std::move(out));
}

QubitChannel make_damping_channel() {
  const double r = std::sqrt(0.5);
  return QubitChannel::from_kraus({
      ComplexMatrix::from_rows({{1, 0}, {0, r}}),
      ComplexMatrix::from_rows({{0, r}, {0, 0}}),
  });
}

QubitChannel make_shifted_contraction_channel() {
  return QubitChannel::from_bloch_affine({0.6, 0.6, 0.5}, {0.0, 0.0, 0.5});
}

}  // namespace deficit

#include "deficit/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace deficit;

TEST_CASE("kraus validation rejects non-trace-preserving sets") {
  CHECK_THROWS_AS(QubitChannel::from_kraus({ComplexMatrix::from_rows({{1, 0}, {0, 0.5}})}),
                  std::invalid_argument);
}

TEST_CASE("damping channel fixes |0> and shrinks |1>") {
  const QubitChannel ch = make_damping_channel();
  const DensityMatrix zero = DensityMatrix::single(ComplexMatrix::from_rows({{1, 0}, {0, 0}}));
  CHECK(ch.apply(zero).matrix().approx_equal(zero.matrix(), 1e-12));
  const DensityMatrix one = DensityMatrix::single(ComplexMatrix::from_rows({{0, 0}, {0, 1}}));
  const ComplexMatrix out = ch.apply(one).matrix();
  CHECK(out(0, 0).real() == doctest::Approx(0.5));
  CHECK(out(1, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("bloch affine form matches its own kraus-style action on the identity") {
  // The shifted contraction maps the maximally mixed state (r = 0) to the
  // state with Bloch vector t = (0, 0, 0.5).
  const QubitChannel ch = make_shifted_contraction_channel();
  const DensityMatrix mixed =
      DensityMatrix::single(ComplexMatrix::from_rows({{0.5, 0}, {0, 0.5}}));
  const ComplexMatrix out = ch.apply(mixed).matrix();
  CHECK(out(0, 0).real() == doctest::Approx(0.75));
  CHECK(out(1, 1).real() == doctest::Approx(0.25));
  CHECK(std::abs(out(0, 1)) == doctest::Approx(0.0));
}

TEST_CASE("bloch affine action on a general state") {
  // r = (1, 0, 0) -> (0.6, 0, 0.5)
  const QubitChannel ch = make_shifted_contraction_channel();
  const DensityMatrix plus =
      DensityMatrix::single(ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}));
  const ComplexMatrix out = ch.apply(plus).matrix();
  CHECK(out(0, 0).real() == doctest::Approx(0.75));   // (1 + 0.5) / 2
  CHECK(out(0, 1).real() == doctest::Approx(0.3));    // 0.6 / 2
  CHECK(out(0, 1).imag() == doctest::Approx(0.0));
}

TEST_CASE("apply_to_bob leaves Alice's reduction alone") {
  const PureState psi(Dims{2, 2}, {Complex{0.6, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
                                   Complex{0.8, 0.0}});
  const DensityMatrix rho = psi.to_density();
  const DensityMatrix before_a = partial_trace(rho, Subsystem::A);
  for (const QubitChannel& ch : {make_damping_channel(), make_shifted_contraction_channel()}) {
    const DensityMatrix mapped = ch.apply_to_bob(rho);
    CHECK(partial_trace(mapped, Subsystem::A).matrix().approx_equal(before_a.matrix(), 1e-10));
    CHECK(mapped.matrix().trace().real() == doctest::Approx(1.0));
  }
}

TEST_CASE("apply_to_bob with identity-like kraus is the identity") {
  const QubitChannel id = QubitChannel::from_kraus({ComplexMatrix::identity(2)});
  const PureState psi(Dims{3, 2}, {Complex{std::sqrt(1.0 / 3), 0.0}, Complex{0, 0},
                                   Complex{0, 0}, Complex{std::sqrt(1.0 / 3), 0.0},
                                   Complex{std::sqrt(1.0 / 3), 0.0}, Complex{0, 0}});
  const DensityMatrix rho = psi.to_density();
  CHECK(id.apply_to_bob(rho).matrix().approx_equal(rho.matrix(), 1e-12));
}

TEST_CASE("dimension checks") {
  const QubitChannel ch = make_damping_channel();
  const DensityMatrix qutrit = DensityMatrix::single(
      ComplexMatrix::from_rows({{0.4, 0, 0}, {0, 0.3, 0}, {0, 0, 0.3}}));
  CHECK_THROWS_AS(ch.apply(qutrit), std::invalid_argument);
  const DensityMatrix swapped(
      Dims{2, 3},
      tensor(ComplexMatrix::from_rows({{0.5, 0}, {0, 0.5}}), qutrit.matrix()));
  CHECK_THROWS_AS(ch.apply_to_bob(swapped), std::invalid_argument);
}

#include "deficit/complex_matrix.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace deficit;

TEST_CASE("identity and trace") {
  const ComplexMatrix id = ComplexMatrix::identity(3);
  CHECK(id(0, 0) == Complex{1.0, 0.0});
  CHECK(id(0, 1) == Complex{0.0, 0.0});
  CHECK(id.trace() == Complex{3.0, 0.0});
}

TEST_CASE("matmul agrees with a hand computation") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{1, 2}, {3, 4}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
  const ComplexMatrix c = a * b;
  CHECK(c(0, 0) == Complex{2.0, 0.0});
  CHECK(c(0, 1) == Complex{1.0, 0.0});
  CHECK(c(1, 0) == Complex{4.0, 0.0});
  CHECK(c(1, 1) == Complex{3.0, 0.0});
}

TEST_CASE("matmul rejects shape mismatch") {
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("adjoint conjugates and transposes") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{Complex{1, 2}, Complex{3, 4}},
                                                    {Complex{5, 6}, Complex{7, 8}}});
  const ComplexMatrix ad = a.adjoint();
  CHECK(ad(0, 1) == Complex{5, -6});
  CHECK(ad(1, 0) == Complex{3, -4});
}

TEST_CASE("outer product is a rank-1 Hermitian matrix") {
  const ComplexMatrix p = ComplexMatrix::outer({Complex{0.6, 0.0}, Complex{0.0, 0.8}});
  CHECK(p.is_hermitian());
  CHECK(p.trace().real() == doctest::Approx(1.0));
  CHECK((p * p).approx_equal(p, 1e-12));
}

TEST_CASE("tensor product ordering puts the first factor on the outer index") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{1, 0}, {0, 2}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{3, 0}, {0, 4}});
  const ComplexMatrix t = tensor(a, b);
  CHECK(t.rows() == 4);
  CHECK(t(0, 0) == Complex{3, 0});
  CHECK(t(1, 1) == Complex{4, 0});
  CHECK(t(2, 2) == Complex{6, 0});
  CHECK(t(3, 3) == Complex{8, 0});
}

TEST_CASE("hermiticity detection") {
  ComplexMatrix h = ComplexMatrix::from_rows({{1, Complex{0, 1}}, {Complex{0, -1}, 2}});
  CHECK(h.is_hermitian());
  h(0, 1) = Complex{0, 2};
  CHECK_FALSE(h.is_hermitian());
}

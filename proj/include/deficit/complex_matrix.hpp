#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace deficit {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for the small operators that show
/// up in bipartite-state work (dimension <= 16), so no attempt is made at
/// blocking or sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// |v><v| for a (not necessarily normalized) vector.
  static ComplexMatrix outer(const std::vector<Complex>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;

  bool approx_equal(const ComplexMatrix& other, double tol = 1e-10) const;
  bool is_hermitian(double tol = 1e-9) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Standard matrix product; throws std::invalid_argument on shape mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

/// Kronecker product with `a` on the left (Alice) factor. Both inputs square.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace deficit

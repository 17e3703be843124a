// Dense exact linear algebra over GF(p^k).
//
// Everything here is O(n^3) Gaussian elimination with first-nonzero
// pivoting, so results (kernel bases in particular) are reproducible.

#ifndef HOPF_FUSION_LINALG_HPP_
#define HOPF_FUSION_LINALG_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopf_fusion/field.hpp"

namespace hopf_fusion {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& a, FieldElement s);
FieldElement dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& a);
std::string to_string(const Vector& a);

class Matrix {
public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_columns(FieldPtr field, std::size_t rows, std::span<const Vector> cols);
  static Matrix from_rows(FieldPtr field, std::size_t cols, std::span<const Vector> rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(FieldElement s) const;
  Matrix transposed() const;
  Matrix pow(unsigned e) const;
  FieldElement trace() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

// Reduced row echelon form; pivots[i] is the pivot column of row i.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(Matrix a);

std::size_t rank(const Matrix& a);

// x with a*x == b, or nullopt when the system is inconsistent. When the
// solution is not unique the free variables are set to zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Basis of {x : a*x = 0}, one vector per free column in increasing order.
std::vector<Vector> kernel(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

// Basis (as columns) of the intersection of the kernels of count matrices,
// each with n columns, produced on demand by block(i). The basis is
// narrowed block by block, so later blocks act on a small subspace.
Matrix common_kernel(const FieldPtr& field, std::size_t n, std::size_t count,
                     const std::function<Matrix(std::size_t)>& block);

// Coordinates of v in the basis given by the columns of basis, assumed
// linearly independent; nullopt when v is outside their span.
std::optional<Vector> coordinates(const Matrix& basis, const Vector& v);

// Orthogonal idempotent decomposition of a commutative semisimple family.
// Every input matrix acts as a scalar on the image of each returned
// projector; the projectors sum to the identity. Throws
// SplittingFieldTooSmall when some eigenvalue lies outside the field and
// NotDiagonalizable when a minimal polynomial has a repeated factor.
std::vector<Matrix> split_commutative_algebra(std::span<const Matrix> ops, std::uint64_t seed = 1);

} // namespace hopf_fusion

#endif

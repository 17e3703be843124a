#include "hopf_fusion/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "hopf_fusion/errors.hpp"
#include "hopf_fusion/polynomial.hpp"

namespace hopf_fusion {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v(n, field.zero());
  v[i] = field.one();
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Vector& a, FieldElement s) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] * s;
  return r;
}

FieldElement dot(const Vector& a, const Vector& b) {
  assert(a.size() == b.size() && !a.empty());
  FieldElement acc = a[0].field()->zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += a[i] * b[i];
  return acc;
}

bool is_zero(const Vector& a) {
  return std::all_of(a.begin(), a.end(), [](FieldElement x) { return x.is_zero(); });
}

std::string to_string(const Vector& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i)
      s += ' ';
    s += a[i].to_string();
  }
  return s + "]";
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = m.field_->one();
  return m;
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, std::span<const Vector> cols) {
  Matrix m(std::move(field), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + std::ptrdiff_t(r * cols));
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + std::ptrdiff_t(r * cols_),
                data_.begin() + std::ptrdiff_t((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  assert(v.size() == rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = v[r];
}

Matrix Matrix::operator*(const Matrix& o) const {
  assert(cols_ == o.rows_);
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      FieldElement a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m(i, j) += a * o(k, j);
    }
  return m;
}

Vector Matrix::operator*(const Vector& v) const {
  assert(v.size() == cols_);
  Vector r(rows_, field_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      r[i] += (*this)(i, k) * v[k];
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m.data_[i] += o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m.data_[i] -= o.data_[i];
  return m;
}

Matrix Matrix::scaled(FieldElement s) const {
  Matrix m = *this;
  for (auto& x : m.data_)
    x *= s;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::pow(unsigned e) const {
  assert(rows_ == cols_);
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

FieldElement Matrix::trace() const {
  assert(rows_ == cols_);
  FieldElement t = field_->zero();
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElement x) { return x.is_zero(); });
}

Echelon rref(Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero())
      ++piv;
    if (piv == a.rows())
      continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a(piv, j), a(row, j));
    FieldElement inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j)
      a(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row)
        continue;
      FieldElement f = a(r, col);
      if (f.is_zero())
        continue;
      for (std::size_t j = col; j < a.cols(); ++j)
        a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  assert(b.size() == a.rows());
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols())
    return std::nullopt;
  Vector x = zero_vector(*a.field(), a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::vector<Vector> kernel(const Matrix& a) {
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots)
    is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vector v = unit_vector(*a.field(), a.cols(), f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n + i) = a.field()->one();
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix common_kernel(const FieldPtr& field, std::size_t n, std::size_t count,
                     const std::function<Matrix(std::size_t)>& block) {
  Matrix basis = Matrix::identity(field, n);
  for (std::size_t i = 0; i < count && basis.cols() > 0; ++i) {
    Matrix b = block(i);
    std::vector<Vector> coords = kernel(b * basis);
    if (coords.size() == basis.cols())
      continue;
    if (coords.empty())
      return Matrix(field, n, 0);
    basis = basis * Matrix::from_columns(field, basis.cols(), coords);
  }
  return basis;
}

std::optional<Vector> coordinates(const Matrix& basis, const Vector& v) {
  auto x = solve(basis, v);
  if (!x)
    return std::nullopt;
  return x;
}

namespace {

// Coordinates of op applied to each column of basis, in that basis.
Matrix restrict_to(const Matrix& op, const Matrix& basis) {
  Matrix image = op * basis;
  // Solve basis * R = image in one elimination.
  const std::size_t n = basis.rows(), d = basis.cols();
  Matrix aug(basis.field(), n, d + d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      aug(i, j) = basis(i, j);
      aug(i, d + j) = image(i, j);
    }
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() != d || (d > 0 && e.pivots[d - 1] != d - 1))
    throw InternalInconsistency("subspace is not invariant under a commuting operator");
  for (std::size_t r = d; r < n; ++r)
    for (std::size_t j = 0; j < d; ++j)
      if (!e.reduced(r, d + j).is_zero())
        throw InternalInconsistency("subspace is not invariant under a commuting operator");
  Matrix r(basis.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      r(i, j) = e.reduced(i, d + j);
  return r;
}

} // namespace

std::vector<Matrix> split_commutative_algebra(std::span<const Matrix> ops, std::uint64_t seed) {
  if (ops.empty())
    throw InvalidInput("split_commutative_algebra needs at least one operator");
  const FieldPtr& field = ops.front().field();
  const std::size_t n = ops.front().rows();
  for (const auto& op : ops)
    if (op.rows() != n || op.cols() != n)
      throw InvalidInput("operators must be square of equal size");

  std::vector<Matrix> spaces{Matrix::identity(field, n)};
  for (const auto& op : ops) {
    std::vector<Matrix> next;
    for (const auto& space : spaces) {
      Matrix restricted = restrict_to(op, space);
      Factorization fac = factor_poly(minimal_polynomial(restricted), seed);
      std::vector<FieldElement> roots;
      for (const auto& [f, mult] : fac.factors) {
        if (f.degree() > 1)
          throw SplittingFieldTooSmall("eigenvalue outside " + field->describe(),
                                       unsigned(f.degree()));
        if (mult > 1)
          throw NotDiagonalizable("minimal polynomial " + f.to_string() + " repeated");
        roots.push_back(-f.coeff(0));
      }
      if (roots.size() == 1) {
        next.push_back(space);
        continue;
      }
      std::sort(roots.begin(), roots.end());
      const std::size_t d = space.cols();
      for (FieldElement r : roots) {
        Matrix shifted = restricted - Matrix::identity(field, d).scaled(r);
        std::vector<Vector> ker = kernel(shifted);
        Matrix coords = Matrix::from_columns(field, d, ker);
        next.push_back(space * coords);
      }
    }
    spaces = std::move(next);
  }

  std::vector<Vector> all_cols;
  std::vector<std::size_t> offsets;
  for (const auto& s : spaces) {
    offsets.push_back(all_cols.size());
    for (std::size_t c = 0; c < s.cols(); ++c)
      all_cols.push_back(s.column(c));
  }
  if (all_cols.size() != n)
    throw NotDiagonalizable("joint eigenspaces do not span the space");
  Matrix b = Matrix::from_columns(field, n, all_cols);
  auto binv = inverse(b);
  if (!binv)
    throw InternalInconsistency("joint eigenspaces are not independent");

  std::vector<Matrix> projectors;
  for (std::size_t a = 0; a < spaces.size(); ++a) {
    const std::size_t d = spaces[a].cols();
    Matrix rows_part(field, d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rows_part(i, j) = (*binv)(offsets[a] + i, j);
    projectors.push_back(spaces[a] * rows_part);
  }
  return projectors;
}

} // namespace hopf_fusion

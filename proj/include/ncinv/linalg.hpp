#pragma once

// Exact linear algebra over Rationals and PrimeField: dense and sparse
// matrices, canonical (reduced row echelon) subspaces, rank and kernels.

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ncinv/field.hpp"

namespace ncinv {

template <class F>
using Vector = std::vector<typename F::Element>;

template <class F>
Vector<F> zero_vector(const F& field, std::size_t n) {
  return Vector<F>(n, field.zero());
}

template <class F>
Vector<F> unit_vector(const F& field, std::size_t n, std::size_t i) {
  Vector<F> v(n, field.zero());
  v[i] = field.one();
  return v;
}

template <class F>
bool is_zero_vector(const F& field, const Vector<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return field.is_zero(x); });
}

/// Dense row-major matrix.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix whose rows are the given vectors (all of length cols).
  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector<F> row_vector(std::size_t r) const { return Vector<F>(row(r).begin(), row(r).end()); }

  Vector<F> apply(const Vector<F>& v) const {
    Vector<F> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) field_.add_mul(out[r], (*this)(r, c), v[c]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <class F>
struct Entry {
  std::size_t row;
  typename F::Element value;
};

template <class F>
using SparseColumn = std::vector<Entry<F>>;

/// Collects (row, value) contributions into a normalized sparse column.
template <class F>
class ColumnBuilder {
 public:
  explicit ColumnBuilder(const F& field) : field_(field) {}

  void add(std::size_t row, const typename F::Element& value) {
    if (!field_.is_zero(value)) entries_.push_back({row, value});
  }

  /// Sorted by row, duplicates merged, zeros dropped. Leaves the builder empty.
  SparseColumn<F> finish() {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry<F>& a, const Entry<F>& b) { return a.row < b.row; });
    SparseColumn<F> out;
    out.reserve(entries_.size());
    for (auto& e : entries_) {
      if (!out.empty() && out.back().row == e.row) {
        out.back().value = field_.add(out.back().value, e.value);
        if (field_.is_zero(out.back().value)) out.pop_back();
      } else {
        out.push_back(std::move(e));
      }
    }
    entries_.clear();
    return out;
  }

 private:
  F field_;
  std::vector<Entry<F>> entries_;
};

/// Column-compressed sparse matrix. Columns are kept sorted with no zeros.
template <class F>
class SparseMatrix {
 public:
  using Element = typename F::Element;

  SparseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix identity(const F& field, std::size_t n) {
    SparseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, field.one()});
    return m;
  }

  static SparseMatrix from_dense(const Matrix<F>& dense);

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const SparseColumn<F>& column(std::size_t c) const { return columns_[c]; }
  /// The column must already be normalized (see ColumnBuilder::finish).
  void set_column(std::size_t c, SparseColumn<F> col) { columns_[c] = std::move(col); }

  std::size_t nnz() const;
  bool is_zero() const;
  Element at(std::size_t r, std::size_t c) const;
  Matrix<F> to_dense() const;
  SparseColumn<F> apply(const SparseColumn<F>& v) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t c = 0; c < a.cols_; ++c) {
      const auto& x = a.columns_[c];
      const auto& y = b.columns_[c];
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].row != y[i].row || !a.field_.equal(x[i].value, y[i].value)) return false;
    }
    return true;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseColumn<F>> columns_;
};

template <class F>
SparseMatrix<F> operator*(const SparseMatrix<F>& a, const SparseMatrix<F>& b);
template <class F>
SparseMatrix<F> operator+(const SparseMatrix<F>& a, const SparseMatrix<F>& b);
template <class F>
SparseMatrix<F> operator-(const SparseMatrix<F>& a, const SparseMatrix<F>& b);
template <class F>
SparseMatrix<F> scaled(const SparseMatrix<F>& a, const typename F::Element& c);
/// Kronecker product; the row/column index of (i, j) is i * b.dim + j.
template <class F>
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b);
/// Side-by-side concatenation; all blocks share the row count.
template <class F>
SparseMatrix<F> hstack(const std::vector<SparseMatrix<F>>& blocks, const F& field, std::size_t rows);

/// Exact rank. The matrix is split into the connected blocks of its
/// row/column incidence graph and each block is eliminated separately.
template <class F>
std::size_t rank(const SparseMatrix<F>& m);

/// Columns spanning the kernel (not canonical; use kernel() for that).
template <class F>
SparseMatrix<F> kernel_basis(const SparseMatrix<F>& m);

/// Subspace of F^n with its canonical reduced-row-echelon basis, so equal
/// subspaces compare equal structurally.
template <class F>
class Subspace {
 public:
  using Element = typename F::Element;

  Subspace(F field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

  static Subspace span(const F& field, std::size_t ambient_dim, const std::vector<Vector<F>>& vectors);
  static Subspace full(const F& field, std::size_t ambient_dim);

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its combination of basis vectors read at the pivot columns;
  /// zero iff v lies in the subspace.
  Vector<F> reduce(Vector<F> v) const;
  bool contains(const Vector<F>& v) const { return is_zero_vector(field_, reduce(v)); }
  bool contains(const Subspace& w) const;
  /// Coordinates of a contained vector in the echelon basis.
  Vector<F> coordinates(const Vector<F>& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vector<F>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m);

template <class F>
std::size_t rank(const Matrix<F>& m);

template <class F>
Subspace<F> kernel(const Matrix<F>& m);

template <class F>
Subspace<F> row_space(const Matrix<F>& m);

template <class F>
struct Quotient {
  std::size_t dim;
  /// Vectors of V whose classes form a basis of V / W.
  std::vector<Vector<F>> representatives;
};

/// V / W for W contained in V; throws SubspaceNotContained otherwise.
template <class F>
Quotient<F> quotient(const Subspace<F>& v, const Subspace<F>& w);

template <class F>
std::size_t quotient_dim(const Subspace<F>& v, const Subspace<F>& w) {
  return quotient(v, w).dim;
}

}  // namespace ncinv

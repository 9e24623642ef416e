#include "ncinv/linalg.hpp"

#include <numeric>

namespace ncinv {

template <class F>
SparseMatrix<F> SparseMatrix<F>::from_dense(const Matrix<F>& dense) {
  SparseMatrix m(dense.field(), dense.rows(), dense.cols());
  for (std::size_t c = 0; c < dense.cols(); ++c)
    for (std::size_t r = 0; r < dense.rows(); ++r)
      if (!dense.field().is_zero(dense(r, c))) m.columns_[c].push_back({r, dense(r, c)});
  return m;
}

template <class F>
std::size_t SparseMatrix<F>::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

template <class F>
bool SparseMatrix<F>::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

template <class F>
typename F::Element SparseMatrix<F>::at(std::size_t r, std::size_t c) const {
  for (const auto& e : columns_[c])
    if (e.row == r) return e.value;
  return field_.zero();
}

template <class F>
Matrix<F> SparseMatrix<F>::to_dense() const {
  Matrix<F> m(field_, rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : columns_[c]) m(e.row, c) = e.value;
  return m;
}

template <class F>
SparseColumn<F> SparseMatrix<F>::apply(const SparseColumn<F>& v) const {
  ColumnBuilder<F> out(field_);
  for (const auto& x : v)
    for (const auto& e : columns_[x.row]) out.add(e.row, field_.mul(e.value, x.value));
  return out.finish();
}

template <class F>
SparseMatrix<F> operator*(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  const F& f = a.field();
  SparseMatrix<F> out(f, a.rows(), b.cols());
  std::vector<typename F::Element> scratch(a.rows(), f.zero());
  std::vector<char> touched_mark(a.rows(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (const auto& x : b.column(j)) {
      for (const auto& e : a.column(x.row)) {
        if (!touched_mark[e.row]) {
          touched_mark[e.row] = 1;
          touched.push_back(e.row);
        }
        f.add_mul(scratch[e.row], e.value, x.value);
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseColumn<F> col;
    for (std::size_t r : touched) {
      if (!f.is_zero(scratch[r])) col.push_back({r, scratch[r]});
      scratch[r] = f.zero();
      touched_mark[r] = 0;
    }
    touched.clear();
    out.set_column(j, std::move(col));
  }
  return out;
}

namespace {

template <class F>
SparseMatrix<F> combine(const SparseMatrix<F>& a, const SparseMatrix<F>& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::InvalidArgument, "matrix sum shape mismatch");
  const F& f = a.field();
  SparseMatrix<F> out(f, a.rows(), a.cols());
  ColumnBuilder<F> builder(f);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (const auto& e : a.column(c)) builder.add(e.row, e.value);
    for (const auto& e : b.column(c)) builder.add(e.row, subtract ? f.neg(e.value) : e.value);
    out.set_column(c, builder.finish());
  }
  return out;
}

}  // namespace

template <class F>
SparseMatrix<F> operator+(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  return combine(a, b, false);
}

template <class F>
SparseMatrix<F> operator-(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  return combine(a, b, true);
}

template <class F>
SparseMatrix<F> scaled(const SparseMatrix<F>& a, const typename F::Element& c) {
  const F& f = a.field();
  SparseMatrix<F> out(f, a.rows(), a.cols());
  if (f.is_zero(c)) return out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SparseColumn<F> col = a.column(j);
    for (auto& e : col) e.value = f.mul(c, e.value);
    out.set_column(j, std::move(col));
  }
  return out;
}

template <class F>
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  const F& f = a.field();
  SparseMatrix<F> out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SparseColumn<F> col;
      for (const auto& x : a.column(i))
        for (const auto& y : b.column(j)) col.push_back({x.row * b.rows() + y.row, f.mul(x.value, y.value)});
      out.set_column(i * b.cols() + j, std::move(col));
    }
  return out;
}

template <class F>
SparseMatrix<F> hstack(const std::vector<SparseMatrix<F>>& blocks, const F& field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorKind::InvalidArgument, "hstack row mismatch");
    cols += b.cols();
  }
  SparseMatrix<F> out(field, rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t c = 0; c < b.cols(); ++c) out.set_column(offset + c, b.column(c));
    offset += b.cols();
  }
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Connected blocks of the bipartite graph rows <-> columns of m. Empty
// columns and rows are omitted.
template <class F>
std::vector<Block> connected_blocks(const SparseMatrix<F>& m) {
  const std::size_t nr = m.rows();
  DisjointSets sets(nr + m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) sets.unite(nr + c, e.row);
  std::vector<std::size_t> block_of(nr + m.cols(), SIZE_MAX);
  std::vector<Block> blocks;
  auto block_index = [&](std::size_t node) {
    std::size_t root = sets.find(node);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    return block_of[root];
  };
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m.column(c).empty()) blocks[block_index(nr + c)].cols.push_back(c);
  std::vector<char> row_used(nr, 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) row_used[e.row] = 1;
  for (std::size_t r = 0; r < nr; ++r)
    if (row_used[r]) blocks[block_index(r)].rows.push_back(r);
  return blocks;
}

// Gaussian column reduction over a block, pivoting on the highest nonzero
// row. With tracking enabled, every column that reduces to zero yields a
// kernel vector expressed in block-local column indices.
template <class F>
class ColumnReducer {
 public:
  using Element = typename F::Element;

  ColumnReducer(const F& field, std::size_t rows, bool track)
      : field_(field), owner_(rows, -1), work_(rows, field.zero()), track_(track) {}

  std::size_t rank() const { return pivots_.size(); }

  /// Returns true if col is independent of the columns added so far.
  bool add(const SparseColumn<F>& col, std::size_t local_index, SparseColumn<F>* kernel_out) {
    if (col.empty()) {
      if (track_ && kernel_out) *kernel_out = {{local_index, field_.one()}};
      return false;
    }
    for (const auto& e : col) work_[e.row] = e.value;
    ColumnBuilder<F> combo(field_);
    if (track_) combo.add(local_index, field_.one());
    std::size_t r = col.back().row + 1;
    while (r-- > 0) {
      if (field_.is_zero(work_[r])) continue;
      int owner = owner_[r];
      if (owner < 0) {
        Element scale = field_.inv(work_[r]);
        SparseColumn<F> stored;
        for (std::size_t i = 0; i <= r; ++i) {
          if (!field_.is_zero(work_[i])) {
            stored.push_back({i, field_.mul(scale, work_[i])});
            work_[i] = field_.zero();
          }
        }
        owner_[r] = static_cast<int>(pivots_.size());
        pivots_.push_back(std::move(stored));
        if (track_) {
          SparseColumn<F> c = combo.finish();
          for (auto& e : c) e.value = field_.mul(scale, e.value);
          combos_.push_back(std::move(c));
        }
        return true;
      }
      Element c = work_[r];
      for (const auto& e : pivots_[owner]) field_.sub_mul(work_[e.row], c, e.value);
      if (track_)
        for (const auto& e : combos_[owner]) combo.add(e.row, field_.neg(field_.mul(c, e.value)));
    }
    if (track_ && kernel_out) *kernel_out = combo.finish();
    return false;
  }

 private:
  F field_;
  std::vector<int> owner_;
  std::vector<Element> work_;
  std::vector<SparseColumn<F>> pivots_;
  std::vector<SparseColumn<F>> combos_;
  bool track_;
};

template <class F>
SparseColumn<F> local_column(const SparseColumn<F>& col, const std::vector<std::size_t>& local_row) {
  SparseColumn<F> out;
  out.reserve(col.size());
  for (const auto& e : col) out.push_back({local_row[e.row], e.value});
  return out;
}

}  // namespace

template <class F>
std::size_t rank(const SparseMatrix<F>& m) {
  std::size_t total = 0;
  std::vector<std::size_t> local_row(m.rows(), 0);
  for (const Block& block : connected_blocks(m)) {
    if (block.rows.size() == 1 || block.cols.size() == 1) {
      total += 1;
      continue;
    }
    for (std::size_t i = 0; i < block.rows.size(); ++i) local_row[block.rows[i]] = i;
    ColumnReducer<F> reducer(m.field(), block.rows.size(), false);
    for (std::size_t c : block.cols) {
      reducer.add(local_column(m.column(c), local_row), 0, nullptr);
      if (reducer.rank() == block.rows.size()) break;
    }
    total += reducer.rank();
  }
  return total;
}

template <class F>
SparseMatrix<F> kernel_basis(const SparseMatrix<F>& m) {
  std::vector<SparseColumn<F>> vectors;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m.column(c).empty()) vectors.push_back({{c, m.field().one()}});
  std::vector<std::size_t> local_row(m.rows(), 0);
  for (const Block& block : connected_blocks(m)) {
    for (std::size_t i = 0; i < block.rows.size(); ++i) local_row[block.rows[i]] = i;
    ColumnReducer<F> reducer(m.field(), block.rows.size(), true);
    for (std::size_t j = 0; j < block.cols.size(); ++j) {
      SparseColumn<F> k;
      if (!reducer.add(local_column(m.column(block.cols[j]), local_row), j, &k)) {
        for (auto& e : k) e.row = block.cols[e.row];
        std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
        vectors.push_back(std::move(k));
      }
    }
  }
  SparseMatrix<F> out(m.field(), m.cols(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) out.set_column(i, std::move(vectors[i]));
  return out;
}

template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && f.is_zero(m(r, c))) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(lead_row, k));
    auto scale = f.inv(m(lead_row, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) = f.mul(scale, m(lead_row, k));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) f.sub_mul(m(i, k), factor, m(lead_row, k));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  if (m.rows() * m.cols() > 4096) return rank(SparseMatrix<F>::from_dense(m));
  Matrix<F> copy = m;
  return rref(copy).size();
}

template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  Matrix<F> reduced = m;
  auto pivots = rref(reduced);
  const F& f = m.field();
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<Vector<F>> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v = unit_vector(f, m.cols(), free);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(reduced(i, free));
    vectors.push_back(std::move(v));
  }
  return Subspace<F>::span(f, m.cols(), vectors);
}

template <class F>
Subspace<F> row_space(const Matrix<F>& m) {
  std::vector<Vector<F>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r));
  return Subspace<F>::span(m.field(), m.cols(), rows);
}

template <class F>
Subspace<F> Subspace<F>::span(const F& field, std::size_t ambient_dim, const std::vector<Vector<F>>& vectors) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  Matrix<F> m = Matrix<F>::from_rows(field, ambient_dim, vectors);
  auto pivots = rref(m);
  for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(m.row_vector(i));
  s.pivots_ = std::move(pivots);
  return s;
}

template <class F>
Subspace<F> Subspace<F>::full(const F& field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(field, ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

template <class F>
Vector<F> Subspace<F>::reduce(Vector<F> v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::InvalidArgument, "vector length differs from ambient dimension");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto c = v[pivots_[i]];
    if (field_.is_zero(c)) continue;
    for (std::size_t k = 0; k < ambient_; ++k) field_.sub_mul(v[k], c, basis_[i][k]);
  }
  return v;
}

template <class F>
bool Subspace<F>::contains(const Subspace& w) const {
  if (w.ambient_ != ambient_) return false;
  return std::all_of(w.basis_.begin(), w.basis_.end(), [&](const Vector<F>& v) { return contains(v); });
}

template <class F>
Vector<F> Subspace<F>::coordinates(const Vector<F>& v) const {
  if (!contains(v)) throw Error(ErrorKind::SubspaceNotContained, "vector outside subspace");
  Vector<F> c(basis_.size(), field_.zero());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

template <class F>
Quotient<F> quotient(const Subspace<F>& v, const Subspace<F>& w) {
  if (!v.contains(w)) throw Error(ErrorKind::SubspaceNotContained, "W is not contained in V");
  Quotient<F> q{0, {}};
  Subspace<F> current = w;
  std::vector<Vector<F>> spanning = w.basis();
  for (const auto& b : v.basis()) {
    if (current.contains(b)) continue;
    q.representatives.push_back(b);
    spanning.push_back(b);
    current = Subspace<F>::span(v.field(), v.ambient_dim(), spanning);
  }
  q.dim = q.representatives.size();
  return q;
}

#define NCINV_INSTANTIATE(F)                                                                          \
  template class SparseMatrix<F>;                                                                     \
  template class Subspace<F>;                                                                         \
  template SparseMatrix<F> operator*(const SparseMatrix<F>&, const SparseMatrix<F>&);                 \
  template SparseMatrix<F> operator+(const SparseMatrix<F>&, const SparseMatrix<F>&);                 \
  template SparseMatrix<F> operator-(const SparseMatrix<F>&, const SparseMatrix<F>&);                 \
  template SparseMatrix<F> scaled(const SparseMatrix<F>&, const typename F::Element&);                \
  template SparseMatrix<F> kron(const SparseMatrix<F>&, const SparseMatrix<F>&);                      \
  template SparseMatrix<F> hstack(const std::vector<SparseMatrix<F>>&, const F&, std::size_t);        \
  template std::size_t rank(const SparseMatrix<F>&);                                                  \
  template SparseMatrix<F> kernel_basis(const SparseMatrix<F>&);                                      \
  template std::vector<std::size_t> rref(Matrix<F>&);                                                 \
  template std::size_t rank(const Matrix<F>&);                                                        \
  template Subspace<F> kernel(const Matrix<F>&);                                                      \
  template Subspace<F> row_space(const Matrix<F>&);                                                   \
  template Quotient<F> quotient(const Subspace<F>&, const Subspace<F>&);

NCINV_INSTANTIATE(Rationals)
NCINV_INSTANTIATE(PrimeField)

}  // namespace ncinv

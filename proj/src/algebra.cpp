#include "ncinv/algebra.hpp"

namespace ncinv {

template <class F>
Algebra<F>::Algebra(F field, std::size_t dim, std::vector<Element> structure, Vector<F> unit,
                    std::vector<std::string> labels, KnownClass<F> known_class)
    : field_(std::move(field)),
      dim_(dim),
      structure_(std::move(structure)),
      unit_(std::move(unit)),
      labels_(std::move(labels)),
      known_class_(std::move(known_class)) {
  if (dim_ == 0) throw Error(ErrorKind::InvalidAlgebra, "dimension must be positive");
  if (structure_.size() != dim_ * dim_ * dim_)
    throw Error(ErrorKind::InvalidAlgebra, "expected " + std::to_string(dim_ * dim_ * dim_) + " structure constants");
  if (unit_.size() != dim_) throw Error(ErrorKind::InvalidAlgebra, "unit has wrong length");
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != dim_) throw Error(ErrorKind::InvalidAlgebra, "label count differs from dimension");
  table_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const auto& c = structure_constant(i, j, k);
        if (!field_.is_zero(c)) table_[i * dim_ + j].push_back({k, c});
      }
  validate();
}

template <class F>
void Algebra<F>::validate() const {
  const F& f = field_;
  Vector<F> left(dim_, f.zero()), right(dim_, f.zero());
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t l = 0; l < dim_; ++l) {
        std::fill(left.begin(), left.end(), f.zero());
        std::fill(right.begin(), right.end(), f.zero());
        for (const auto& t : product_terms(i, j))
          for (const auto& u : product_terms(t.index, l)) f.add_mul(left[u.index], t.coeff, u.coeff);
        for (const auto& t : product_terms(j, l))
          for (const auto& u : product_terms(i, t.index)) f.add_mul(right[u.index], t.coeff, u.coeff);
        if (left != right)
          throw Error(ErrorKind::InvalidAlgebra, "associativity fails for (e" + std::to_string(i) + " e" +
                                                     std::to_string(j) + ") e" + std::to_string(l));
      }
  for (std::size_t i = 0; i < dim_; ++i) {
    Vector<F> ei = unit_vector(f, dim_, i);
    if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei)
      throw Error(ErrorKind::InvalidAlgebra, "unit law fails on e" + std::to_string(i));
  }
}

template <class F>
Vector<F> Algebra<F>::multiply(const Vector<F>& x, const Vector<F>& y) const {
  Vector<F> out(dim_, field_.zero());
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (field_.is_zero(y[j])) continue;
      auto xy = field_.mul(x[i], y[j]);
      for (const auto& t : product_terms(i, j)) field_.add_mul(out[t.index], xy, t.coeff);
    }
  }
  return out;
}

template <class F>
Vector<F> Algebra<F>::multiply_basis_right(const Vector<F>& x, std::size_t j) const {
  Vector<F> out(dim_, field_.zero());
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (const auto& t : product_terms(i, j)) field_.add_mul(out[t.index], x[i], t.coeff);
  }
  return out;
}

template <class F>
Matrix<F> Algebra<F>::left_multiplication(const Vector<F>& x) const {
  Matrix<F> m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    auto col = multiply_basis_right(x, j);
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

template <class F>
void require_same_field(const Algebra<F>& a, const Algebra<F>& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorKind::FieldMismatch, a.field().name() + " vs " + b.field().name());
}

template <class F>
Algebra<F> field_algebra(const F& field) {
  return Algebra<F>(field, 1, {field.one()}, {field.one()}, {"1"}, std::vector<QuaternionSymbol<F>>{});
}

template <class F>
Algebra<F> mat_algebra(std::size_t n, const F& field) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix size must be at least 1");
  const std::size_t d = n * n;
  std::vector<typename F::Element> c(d * d * d, field.zero());
  std::vector<std::string> labels;
  Vector<F> unit(d, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = field.one();
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) c[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = field.one();
    }
  }
  return Algebra<F>(field, d, std::move(c), std::move(unit), std::move(labels), std::vector<QuaternionSymbol<F>>{});
}

template <class F>
Algebra<F> quaternion(const typename F::Element& a, const typename F::Element& b, const F& field) {
  if (field.characteristic() == 2) throw Error(ErrorKind::CharTwo, "quaternion algebras need characteristic != 2");
  if (field.is_zero(a) || field.is_zero(b)) throw Error(ErrorKind::ZeroParameter, "quaternion parameters must be nonzero");
  // Basis 1, i, j, k = ij.
  std::vector<typename F::Element> c(64, field.zero());
  auto set = [&](std::size_t x, std::size_t y, std::size_t z, const typename F::Element& v) { c[(x * 4 + y) * 4 + z] = v; };
  auto one = field.one();
  for (std::size_t x = 0; x < 4; ++x) {
    set(0, x, x, one);
    set(x, 0, x, one);
  }
  auto ab = field.mul(a, b);
  set(1, 1, 0, a);               // i^2 = a
  set(2, 2, 0, b);               // j^2 = b
  set(3, 3, 0, field.neg(ab));   // k^2 = -ab
  set(1, 2, 3, one);             // ij = k
  set(2, 1, 3, field.neg(one));  // ji = -k
  set(1, 3, 2, a);               // ik = a j
  set(3, 1, 2, field.neg(a));    // ki = -a j
  set(2, 3, 1, field.neg(b));    // jk = -b i
  set(3, 2, 1, b);               // kj = b i
  return Algebra<F>(field, 4, std::move(c), unit_vector(field, 4, 0), {"1", "i", "j", "ij"},
                    std::vector<QuaternionSymbol<F>>{{a, b}});
}

template <class F>
Algebra<F> dual_numbers(const F& field) {
  std::vector<typename F::Element> c(8, field.zero());
  c[(0 * 2 + 0) * 2 + 0] = field.one();
  c[(0 * 2 + 1) * 2 + 1] = field.one();
  c[(1 * 2 + 0) * 2 + 1] = field.one();
  return Algebra<F>(field, 2, std::move(c), unit_vector(field, 2, 0), {"1", "x"});
}

template <class F>
Algebra<F> product(const Algebra<F>& a, const Algebra<F>& b) {
  require_same_field(a, b);
  const F& f = a.field();
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<typename F::Element> c(d * d * d, f.zero());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& t : a.product_terms(i, j)) c[(i * d + j) * d + t.index] = t.coeff;
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (const auto& t : b.product_terms(i, j)) c[((da + i) * d + (da + j)) * d + da + t.index] = t.coeff;
  Vector<F> unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(1)" + l);
  for (const auto& l : b.labels()) labels.push_back("(2)" + l);
  return Algebra<F>(f, d, std::move(c), std::move(unit), std::move(labels));
}

template <class F>
Algebra<F> tensor(const Algebra<F>& a, const Algebra<F>& b) {
  require_same_field(a, b);
  const F& f = a.field();
  const std::size_t da = a.dim(), db = b.dim(), d = da * db;
  std::vector<typename F::Element> c(d * d * d, f.zero());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t i2 = 0; i2 < da; ++i2)
      for (const auto& s : a.product_terms(i, i2))
        for (std::size_t j = 0; j < db; ++j)
          for (std::size_t j2 = 0; j2 < db; ++j2)
            for (const auto& t : b.product_terms(j, j2))
              c[((i * db + j) * d + (i2 * db + j2)) * d + s.index * db + t.index] = f.mul(s.coeff, t.coeff);
  Vector<F> unit(d, f.zero());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) unit[i * db + j] = f.mul(a.unit()[i], b.unit()[j]);
  std::vector<std::string> labels;
  for (const auto& x : a.labels())
    for (const auto& y : b.labels()) labels.push_back(x + "(x)" + y);
  KnownClass<F> known;
  if (a.known_class() && b.known_class()) {
    known = *a.known_class();
    known->insert(known->end(), b.known_class()->begin(), b.known_class()->end());
  }
  return Algebra<F>(f, d, std::move(c), std::move(unit), std::move(labels), std::move(known));
}

template <class F>
Algebra<F> tensor_power(const Algebra<F>& a, std::size_t n) {
  Algebra<F> result = field_algebra(a.field());
  for (std::size_t i = 0; i < n; ++i) result = i == 0 ? a : tensor(result, a);
  return result;
}

template <class F>
Algebra<F> opposite(const Algebra<F>& a) {
  const std::size_t d = a.dim();
  std::vector<typename F::Element> c(d * d * d, a.field().zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = a.structure_constant(j, i, k);
  // Quaternion algebras are isomorphic to their opposites, so the known class carries over.
  return Algebra<F>(a.field(), d, std::move(c), a.unit(), a.labels(), a.known_class());
}

template <class F>
Algebra<F> restrict_to(const Algebra<F>& a, const Subspace<F>& subspace, const Vector<F>& unit) {
  const F& f = a.field();
  const std::size_t r = subspace.dim();
  const auto& basis = subspace.basis();
  std::vector<typename F::Element> c(r * r * r, f.zero());
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t) {
      auto coords = subspace.coordinates(a.multiply(basis[s], basis[t]));
      for (std::size_t k = 0; k < r; ++k) c[(s * r + t) * r + k] = coords[k];
    }
  return Algebra<F>(f, r, std::move(c), subspace.coordinates(unit));
}

template <class F>
Subspace<F> commutator_subspace(const Algebra<F>& a) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  std::vector<Vector<F>> commutators;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector<F> v(d, f.zero());
      for (const auto& t : a.product_terms(i, j)) v[t.index] = f.add(v[t.index], t.coeff);
      for (const auto& t : a.product_terms(j, i)) v[t.index] = f.sub(v[t.index], t.coeff);
      if (!is_zero_vector(f, v)) commutators.push_back(std::move(v));
    }
  return Subspace<F>::span(f, d, commutators);
}

template <class F>
HH0<F> hh0(const Algebra<F>& a) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  Subspace<F> comm = commutator_subspace(a);
  std::vector<char> is_pivot(d, 0);
  for (auto p : comm.pivots()) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  HH0<F> out{free_cols.size(), {}, Matrix<F>(f, free_cols.size(), d)};
  for (std::size_t c : free_cols) out.coset_basis.push_back(unit_vector(f, d, c));
  for (std::size_t c = 0; c < d; ++c) {
    auto reduced = comm.reduce(unit_vector(f, d, c));
    for (std::size_t r = 0; r < free_cols.size(); ++r) out.class_map(r, c) = reduced[free_cols[r]];
  }
  return out;
}

template <class F>
Subspace<F> center(const Algebra<F>& a) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  // Unknowns x_k; equations (x e_i - e_i x)_m = 0 for all i, m.
  Matrix<F> system(f, d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      for (const auto& t : a.product_terms(k, i)) system(i * d + t.index, k) = f.add(system(i * d + t.index, k), t.coeff);
      for (const auto& t : a.product_terms(i, k)) system(i * d + t.index, k) = f.sub(system(i * d + t.index, k), t.coeff);
    }
  return kernel(system);
}

template <class F>
bool is_semisimple(const Algebra<F>& a) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  if (f.characteristic() != 0 && f.characteristic() <= d)
    throw Error(ErrorKind::UnsupportedCharacteristic,
                "trace-form test needs p > dim(A) = " + std::to_string(d) + " over " + f.name());
  Vector<F> traces(d, f.zero());
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t m = 0; m < d; ++m) traces[k] = f.add(traces[k], a.structure_constant(k, m, m));
  Matrix<F> gram(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.product_terms(i, j)) f.add_mul(gram(i, j), t.coeff, traces[t.index]);
  return rank(gram) == d;
}

template <class F>
bool is_separable(const Algebra<F>& a) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  // Unknown c_ij is the coefficient of b_i (x) b_j. Rows: the d coordinates
  // of m(e) - 1, then for each k the d^2 coordinates of b_k e - e b_k.
  const std::size_t rows = d + d * d * d;
  SparseMatrix<F> m(f, rows, d * d + 1);
  ColumnBuilder<F> col(f);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& t : a.product_terms(i, j)) col.add(t.index, t.coeff);
      for (std::size_t k = 0; k < d; ++k) {
        for (const auto& t : a.product_terms(k, i)) col.add(d + (k * d + t.index) * d + j, t.coeff);
        for (const auto& t : a.product_terms(j, k)) col.add(d + (k * d + i) * d + t.index, f.neg(t.coeff));
      }
      m.set_column(i * d + j, col.finish());
    }
  for (std::size_t p = 0; p < d; ++p) col.add(p, a.unit()[p]);
  m.set_column(d * d, col.finish());
  SparseMatrix<F> lhs(f, rows, d * d);
  for (std::size_t c = 0; c < d * d; ++c) lhs.set_column(c, m.column(c));
  return rank(lhs) == rank(m);
}

#define NCINV_INSTANTIATE(F)                                                                        \
  template class Algebra<F>;                                                                        \
  template void require_same_field(const Algebra<F>&, const Algebra<F>&);                           \
  template Algebra<F> field_algebra(const F&);                                                      \
  template Algebra<F> mat_algebra(std::size_t, const F&);                                           \
  template Algebra<F> quaternion(const typename F::Element&, const typename F::Element&, const F&); \
  template Algebra<F> dual_numbers(const F&);                                                       \
  template Algebra<F> product(const Algebra<F>&, const Algebra<F>&);                                \
  template Algebra<F> tensor(const Algebra<F>&, const Algebra<F>&);                                 \
  template Algebra<F> tensor_power(const Algebra<F>&, std::size_t);                                 \
  template Algebra<F> opposite(const Algebra<F>&);                                                  \
  template Algebra<F> restrict_to(const Algebra<F>&, const Subspace<F>&, const Vector<F>&);         \
  template Subspace<F> commutator_subspace(const Algebra<F>&);                                      \
  template HH0<F> hh0(const Algebra<F>&);                                                           \
  template Subspace<F> center(const Algebra<F>&);                                                   \
  template bool is_semisimple(const Algebra<F>&);                                                   \
  template bool is_separable(const Algebra<F>&);

NCINV_INSTANTIATE(Rationals)
NCINV_INSTANTIATE(PrimeField)

}  // namespace ncinv

#include "ncinv/hochschild.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <optional>

namespace ncinv {

namespace {

std::atomic<std::size_t> budget_override{0};

// Saturating d^e, so oversized requests fail the budget check instead of
// wrapping around.
std::size_t power(std::size_t d, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (d != 0 && r > std::numeric_limits<std::size_t>::max() / d) return std::numeric_limits<std::size_t>::max();
    r *= d;
  }
  return r;
}

std::vector<std::size_t> powers(std::size_t d, std::size_t n) {
  std::vector<std::size_t> p(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) p[i] = p[i - 1] * d;
  return p;
}

template <class F>
typename F::Element sign(const F& f, std::size_t k) {
  return k % 2 == 0 ? f.one() : f.neg(f.one());
}

std::size_t tensor_dim(std::size_t d, std::size_t j, const std::string& what) {
  std::size_t n = power(d, j + 1);
  check_budget(n, what + " in degree " + std::to_string(j));
  return n;
}

template <class F>
SparseMatrix<F> face_maps(const Algebra<F>& a, std::size_t j, bool wrap) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  if (j == 0) return SparseMatrix<F>(f, 0, d);
  const std::size_t cols = tensor_dim(d, j, "Hochschild complex");
  const auto pw = powers(d, j + 1);
  SparseMatrix<F> m(f, pw[j], cols);
  ColumnBuilder<F> col(f);
  for (std::size_t idx = 0; idx < cols; ++idx) {
    for (std::size_t s = 0; s < j; ++s) {
      // digits s and s+1 sit at weights d^{j-s} and d^{j-s-1}
      const std::size_t high = idx / pw[j - s + 1];
      const std::size_t x = (idx / pw[j - s]) % d;
      const std::size_t y = (idx / pw[j - s - 1]) % d;
      const std::size_t low = idx % pw[j - s - 1];
      const auto sg = sign(f, s);
      for (const auto& t : a.product_terms(x, y))
        col.add((high * d + t.index) * pw[j - s - 1] + low, f.mul(sg, t.coeff));
    }
    if (wrap) {
      const std::size_t first = idx / pw[j];
      const std::size_t last = idx % d;
      const std::size_t middle = (idx / d) % pw[j - 1];
      const auto sg = sign(f, j);
      for (const auto& t : a.product_terms(last, first)) col.add(t.index * pw[j - 1] + middle, f.mul(sg, t.coeff));
    }
    m.set_column(idx, col.finish());
  }
  return m;
}

template <class F>
SparseMatrix<F> negated(const SparseMatrix<F>& m) {
  return scaled(m, m.field().neg(m.field().one()));
}

template <class F>
std::size_t homology_at(std::size_t dim, const SparseMatrix<F>& d_out, const SparseMatrix<F>& d_in) {
  return dim - rank(d_out) - rank(d_in);
}

}  // namespace

std::size_t size_budget() {
  if (std::size_t b = budget_override.load()) return b;
  if (const char* env = std::getenv("NCINV_SIZE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSizeBudget;
}

void set_size_budget(std::size_t budget) { budget_override.store(budget); }

void check_budget(std::size_t dim, const std::string& what) {
  if (dim > size_budget())
    throw Error(ErrorKind::SizeBudgetExceeded, what + " needs dimension " +
                                                   (dim == std::numeric_limits<std::size_t>::max() ? std::string("> 2^64")
                                                                                                   : std::to_string(dim)) +
                                                   ", budget is " + std::to_string(size_budget()));
}

template <class F>
bool ChainComplex<F>::squares_to_zero() const {
  for (std::size_t j = 2; j < differentials.size(); ++j)
    if (!(differentials[j - 1] * differentials[j]).is_zero()) return false;
  return true;
}

template <class F>
HomologyDims homology_dims(const ChainComplex<F>& c) {
  HomologyDims h;
  const std::size_t n = c.top();
  std::vector<std::size_t> ranks(n + 2, 0);
  for (std::size_t j = 1; j <= n; ++j) ranks[j] = rank(c.differentials[j]);
  for (std::size_t j = 0; j < n; ++j) h.dims.push_back(c.dims[j] - ranks[j] - ranks[j + 1]);
  h.top_degree = n;
  h.top_bound = c.dims[n] - ranks[n];
  return h;
}

template <class F>
SparseMatrix<F> hochschild_differential(const Algebra<F>& a, std::size_t j) {
  return face_maps(a, j, true);
}

template <class F>
SparseMatrix<F> bar_differential(const Algebra<F>& a, std::size_t j) {
  return face_maps(a, j, false);
}

template <class F>
ChainComplex<F> hochschild_complex(const Algebra<F>& a, std::size_t n) {
  tensor_dim(a.dim(), n, "Hochschild complex");
  ChainComplex<F> c{a.field(), {}, {}};
  for (std::size_t j = 0; j <= n; ++j) {
    c.dims.push_back(power(a.dim(), j + 1));
    c.differentials.push_back(hochschild_differential(a, j));
  }
  return c;
}

template <class F>
SparseMatrix<F> cyclic_operator(const Algebra<F>& a, std::size_t j) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  const std::size_t n = tensor_dim(d, j, "cyclic operator");
  const std::size_t top = power(d, j);
  const auto sg = sign(f, j);
  SparseMatrix<F> m(f, n, n);
  for (std::size_t idx = 0; idx < n; ++idx) m.set_column(idx, {{(idx % d) * top + idx / d, sg}});
  return m;
}

template <class F>
SparseMatrix<F> norm_operator(const Algebra<F>& a, std::size_t j) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  const std::size_t n = tensor_dim(d, j, "norm operator");
  const std::size_t top = power(d, j);
  SparseMatrix<F> m(f, n, n);
  ColumnBuilder<F> col(f);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t cur = idx;
    for (std::size_t i = 0; i <= j; ++i) {
      col.add(cur, sign(f, i * j));
      cur = (cur % d) * top + cur / d;
    }
    m.set_column(idx, col.finish());
  }
  return m;
}

template <class F>
SparseMatrix<F> extra_degeneracy(const Algebra<F>& a, std::size_t j) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  const std::size_t n = tensor_dim(d, j, "extra degeneracy");
  tensor_dim(d, j + 1, "extra degeneracy");
  SparseMatrix<F> m(f, n * d, n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    SparseColumn<F> col;
    for (std::size_t u = 0; u < d; ++u)
      if (!f.is_zero(a.unit()[u])) col.push_back({u * n + idx, a.unit()[u]});
    m.set_column(idx, std::move(col));
  }
  return m;
}

template <class F>
bool MixedComplex<F>::B_squared_zero() const {
  for (std::size_t j = 1; j < connes.size(); ++j)
    if (!(connes[j] * connes[j - 1]).is_zero()) return false;
  return true;
}

template <class F>
bool MixedComplex<F>::anticommute() const {
  // On C_j: b_{j+1} B_j + B_{j-1} b_j, for every j with both terms built.
  const auto& d = hochschild.differentials;
  for (std::size_t j = 0; j < connes.size(); ++j) {
    SparseMatrix<F> sum = d[j + 1] * connes[j];
    if (j >= 1) sum = sum + connes[j - 1] * d[j];
    if (!sum.is_zero()) return false;
  }
  return true;
}

template <class F>
MixedComplex<F> mixed_complex(const Algebra<F>& a, std::size_t n) {
  MixedComplex<F> m{hochschild_complex(a, n), {}};
  for (std::size_t j = 0; j < n; ++j) {
    auto one_minus_t = SparseMatrix<F>::identity(a.field(), m.hochschild.dims[j + 1]) - cyclic_operator(a, j + 1);
    m.connes.push_back(one_minus_t * (extra_degeneracy(a, j) * norm_operator(a, j)));
  }
  return m;
}

template <class F>
CyclicBicomplex<F>::CyclicBicomplex(const Algebra<F>& a, int col_lo, int col_hi, std::size_t max_row)
    : field_(a.field()), lo_(col_lo), hi_(col_hi), max_row_(max_row) {
  if (col_lo > col_hi) throw Error(ErrorKind::InvalidArgument, "empty column range");
  for (std::size_t q = 0; q <= max_row; ++q) {
    dims_.push_back(tensor_dim(a.dim(), q, "cyclic bicomplex"));
    b_.push_back(hochschild_differential(a, q));
    bprime_.push_back(negated(bar_differential(a, q)));
    one_minus_t_.push_back(SparseMatrix<F>::identity(field_, dims_[q]) - cyclic_operator(a, q));
    norm_.push_back(norm_operator(a, q));
  }
}

template <class F>
std::vector<int> CyclicBicomplex<F>::columns_in_degree(int n) const {
  std::vector<int> cols;
  for (int p = lo_; p <= hi_ && p <= n; ++p)
    if (n - p <= static_cast<int>(max_row_)) cols.push_back(p);
  return cols;
}

template <class F>
std::size_t CyclicBicomplex<F>::total_dim(int n) const {
  std::size_t total = 0;
  for (int p : columns_in_degree(n)) total += dims_[n - p];
  check_budget(total, "total complex in degree " + std::to_string(n));
  return total;
}

template <class F>
SparseMatrix<F> CyclicBicomplex<F>::total_differential(int n) const {
  const auto src = columns_in_degree(n);
  const auto dst = columns_in_degree(n - 1);
  SparseMatrix<F> m(field_, total_dim(n - 1), total_dim(n));
  auto offset_of = [&](int p) {
    std::size_t off = 0;
    for (int c : dst) {
      if (c == p) return off;
      off += dims_[n - 1 - c];
    }
    return std::numeric_limits<std::size_t>::max();
  };
  std::size_t src_off = 0;
  for (int p : src) {
    const std::size_t q = static_cast<std::size_t>(n - p);
    const bool odd = (p % 2 + 2) % 2 == 1;
    const SparseMatrix<F>* horizontal = p - 1 >= lo_ ? (odd ? &one_minus_t_[q] : &norm_[q]) : nullptr;
    const SparseMatrix<F>* vertical = q >= 1 ? (odd ? &bprime_[q] : &b_[q]) : nullptr;
    const std::size_t h_off = horizontal ? offset_of(p - 1) : 0;
    const std::size_t v_off = vertical ? offset_of(p) : 0;
    for (std::size_t c = 0; c < dims_[q]; ++c) {
      SparseColumn<F> col;
      if (horizontal)
        for (const auto& e : horizontal->column(c)) col.push_back({h_off + e.row, e.value});
      if (vertical)
        for (const auto& e : vertical->column(c)) col.push_back({v_off + e.row, e.value});
      m.set_column(src_off + c, std::move(col));
    }
    src_off += dims_[q];
  }
  return m;
}

template <class F>
std::size_t CyclicBicomplex<F>::total_homology(int n) const {
  if (n + 1 - lo_ > static_cast<int>(max_row_))
    throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(n) + " needs rows beyond the built range");
  return homology_at(total_dim(n), total_differential(n), total_differential(n + 1));
}

template <class F>
std::vector<std::size_t> cyclic_homology_dims(const Algebra<F>& a, std::size_t n) {
  if (n < 2) return {};
  CyclicBicomplex<F> cc(a, 0, static_cast<int>(n) - 1, n - 1);
  std::vector<std::size_t> hc;
  for (std::size_t j = 0; j + 2 <= n; ++j) hc.push_back(cc.total_homology(static_cast<int>(j)));
  return hc;
}

template <class F>
std::size_t induced_rank(const SparseMatrix<F>& f, const SparseMatrix<F>& d_out_source,
                         const SparseMatrix<F>& d_in_target) {
  SparseMatrix<F> image = f * kernel_basis(d_out_source);
  const std::size_t boundaries = rank(d_in_target);
  return rank(hstack<F>({image, d_in_target}, f.field(), f.rows())) - boundaries;
}

template <class F>
PeriodicityCheck connes_periodicity(const Algebra<F>& a, std::size_t j) {
  const int jj = static_cast<int>(j);
  CyclicBicomplex<F> cc(a, 0, jj + 2, j + 3);
  PeriodicityCheck out{cc.total_homology(jj), cc.total_homology(jj + 2), 0};
  // S keeps columns p >= 2 and moves them to p - 2.
  SparseMatrix<F> s(a.field(), cc.total_dim(jj), cc.total_dim(jj + 2));
  std::size_t src_off = 0, dst_off = 0;
  for (int p : cc.columns_in_degree(jj + 2)) {
    const std::size_t dim = a.dim() == 0 ? 0 : power(a.dim(), static_cast<std::size_t>(jj + 2 - p) + 1);
    if (p >= 2) {
      for (std::size_t c = 0; c < dim; ++c) s.set_column(src_off + c, {{dst_off + c, a.field().one()}});
      dst_off += dim;
    }
    src_off += dim;
  }
  out.induced_rank = induced_rank(s, cc.total_differential(jj + 2), cc.total_differential(jj + 1));
  return out;
}

template <class F>
PeriodicNegative periodic_and_negative_dims(const Algebra<F>& a, std::size_t n, std::size_t depth, int hn_top) {
  if (hn_top < 0) throw Error(ErrorKind::InvalidArgument, "HN top degree must be >= 0");
  const std::size_t base = std::max({depth, n + 1, std::size_t{2}});
  // S is an isomorphism on HC of a separable algebra, so every truncation
  // already equals the limit. Otherwise only the image of the deeper
  // truncation counts.
  const bool separable = is_separable(a);
  const auto rows = [&](std::size_t m) { return static_cast<std::size_t>(hn_top + 1) + m; };
  auto compute = [&](std::size_t m) {
    const int lo = -static_cast<int>(m);
    // Columns above 1 never meet total degrees <= 0, so this one rectangle
    // serves HP in degrees 0 and -1 as well as HN.
    CyclicBicomplex<F> cc(a, lo, 1, rows(m));
    std::optional<CyclicBicomplex<F>> deeper;
    if (!separable) deeper.emplace(a, lo - 2, 1, rows(m + 2));
    auto value = [&](int k) {
      if (!deeper) return cc.total_homology(k);
      // The quotient map onto columns >= lo, restricted to homology.
      SparseMatrix<F> proj(a.field(), cc.total_dim(k), deeper->total_dim(k));
      std::size_t src_off = 0, dst_off = 0;
      for (int p : deeper->columns_in_degree(k)) {
        const std::size_t dim = power(a.dim(), static_cast<std::size_t>(k - p) + 1);
        if (p >= lo) {
          for (std::size_t c = 0; c < dim; ++c) proj.set_column(src_off + c, {{dst_off + c, a.field().one()}});
          dst_off += dim;
        }
        src_off += dim;
      }
      return induced_rank(proj, deeper->total_differential(k), cc.total_differential(k + 1));
    };
    PeriodicNegative r;
    r.depth = m;
    r.hn_lo = -static_cast<int>(n);
    r.tower_image = !separable;
    for (int k = r.hn_lo; k <= hn_top; ++k) r.hn.push_back(value(k));
    r.hp_even = value(0);
    r.hp_odd = value(-1);
    return r;
  };
  PeriodicNegative first = compute(base);
  PeriodicNegative second = compute(base + 1);
  if (first.hn != second.hn || first.hp_even != second.hp_even || first.hp_odd != second.hp_odd)
    throw Error(ErrorKind::Unstable, "truncation depths " + std::to_string(base) + " and " + std::to_string(base + 1) +
                                         " disagree");
  return first;
}

template <class F>
bool ComparisonMap<F>::is_chain_map() const {
  for (std::size_t j = 1; j < maps.size(); ++j)
    if (!(maps[j - 1] * source.differentials[j] == target.differentials[j] * maps[j])) return false;
  return true;
}

template <class F>
bool ComparisonMap<F>::is_quasi_isomorphism() const {
  for (std::size_t j = 0; j < induced_ranks.size(); ++j)
    if (induced_ranks[j] != source_homology.dims[j] || induced_ranks[j] != target_homology.dims[j]) return false;
  return true;
}

template <class F>
ComparisonMap<F> comparison_map(const Algebra<F>& a, std::size_t n) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  const auto classes = hh0(a);
  const auto id_h = SparseMatrix<F>::identity(f, classes.dim);
  const auto ground = hochschild_complex(field_algebra(f), n);
  ComparisonMap<F> cm{hochschild_complex(a, n), ChainComplex<F>{f, {}, {}}, {}, {}, {}, {}};
  for (std::size_t j = 0; j <= n; ++j) {
    cm.target.dims.push_back(classes.dim);
    cm.target.differentials.push_back(j == 0 ? SparseMatrix<F>(f, 0, classes.dim) : kron(ground.differentials[j], id_h));
  }
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t cols = cm.source.dims[j];
    const auto pw = powers(d, j);
    SparseMatrix<F> m(f, classes.dim, cols);
    for (std::size_t idx = 0; idx < cols; ++idx) {
      Vector<F> prod = unit_vector(f, d, idx / pw[j]);
      for (std::size_t s = 1; s <= j; ++s) prod = a.multiply_basis_right(prod, (idx / pw[j - s]) % d);
      auto cls = classes.class_map.apply(prod);
      SparseColumn<F> col;
      for (std::size_t r = 0; r < cls.size(); ++r)
        if (!f.is_zero(cls[r])) col.push_back({r, cls[r]});
      m.set_column(idx, std::move(col));
    }
    cm.maps.push_back(std::move(m));
  }
  cm.source_homology = homology_dims(cm.source);
  cm.target_homology = homology_dims(cm.target);
  for (std::size_t j = 0; j < n; ++j)
    cm.induced_ranks.push_back(induced_rank(cm.maps[j], cm.source.differentials[j], cm.target.differentials[j + 1]));
  return cm;
}

#define NCINV_INSTANTIATE(F)                                                                                 \
  template struct ChainComplex<F>;                                                                           \
  template struct MixedComplex<F>;                                                                           \
  template class CyclicBicomplex<F>;                                                                         \
  template struct ComparisonMap<F>;                                                                          \
  template HomologyDims homology_dims(const ChainComplex<F>&);                                               \
  template SparseMatrix<F> hochschild_differential(const Algebra<F>&, std::size_t);                          \
  template SparseMatrix<F> bar_differential(const Algebra<F>&, std::size_t);                                 \
  template ChainComplex<F> hochschild_complex(const Algebra<F>&, std::size_t);                               \
  template SparseMatrix<F> cyclic_operator(const Algebra<F>&, std::size_t);                                  \
  template SparseMatrix<F> norm_operator(const Algebra<F>&, std::size_t);                                    \
  template SparseMatrix<F> extra_degeneracy(const Algebra<F>&, std::size_t);                                 \
  template MixedComplex<F> mixed_complex(const Algebra<F>&, std::size_t);                                    \
  template std::vector<std::size_t> cyclic_homology_dims(const Algebra<F>&, std::size_t);                    \
  template PeriodicityCheck connes_periodicity(const Algebra<F>&, std::size_t);                              \
  template PeriodicNegative periodic_and_negative_dims(const Algebra<F>&, std::size_t, std::size_t, int);    \
  template ComparisonMap<F> comparison_map(const Algebra<F>&, std::size_t);                                  \
  template std::size_t induced_rank(const SparseMatrix<F>&, const SparseMatrix<F>&, const SparseMatrix<F>&);

NCINV_INSTANTIATE(Rationals)
NCINV_INSTANTIATE(PrimeField)

}  // namespace ncinv

#include <doctest.h>

#include <cstdlib>

#include "ncinv/hochschild.hpp"

using namespace ncinv;

namespace {

// Tensor index <-> factor list, leftmost factor most significant.
std::vector<std::size_t> factors(std::size_t idx, std::size_t d, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t s = count; s-- > 0; idx /= d) out[s] = idx % d;
  return out;
}

std::size_t index_of(const std::vector<std::size_t>& fs, std::size_t d) {
  std::size_t idx = 0;
  for (auto x : fs) idx = idx * d + x;
  return idx;
}

std::size_t ipow(std::size_t d, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= d;
  return r;
}

// The Hochschild boundary written straight from the alternating-sum formula,
// as a dense matrix C_j -> C_{j-1}.
template <class F>
Matrix<F> naive_b(const Algebra<F>& a, std::size_t j, bool wrap) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  Matrix<F> m(f, ipow(d, j), ipow(d, j + 1));
  for (std::size_t col = 0; col < m.cols(); ++col) {
    auto fs = factors(col, d, j + 1);
    for (std::size_t i = 0; i < j; ++i) {
      auto sign = i % 2 ? f.neg(f.one()) : f.one();
      for (std::size_t out = 0; out < d; ++out) {
        const auto& c = a.structure_constant(fs[i], fs[i + 1], out);
        if (f.is_zero(c)) continue;
        std::vector<std::size_t> g(fs.begin(), fs.begin() + i);
        g.push_back(out);
        g.insert(g.end(), fs.begin() + i + 2, fs.end());
        f.add_mul(m(index_of(g, d), col), sign, c);
      }
    }
    if (wrap && j > 0) {
      auto sign = j % 2 ? f.neg(f.one()) : f.one();
      for (std::size_t out = 0; out < d; ++out) {
        const auto& c = a.structure_constant(fs[j], fs[0], out);
        if (f.is_zero(c)) continue;
        std::vector<std::size_t> g{out};
        g.insert(g.end(), fs.begin() + 1, fs.begin() + j);
        f.add_mul(m(index_of(g, d), col), sign, c);
      }
    }
  }
  return m;
}

// t(a_0 ... a_j) = (-1)^j a_j a_0 ... a_{j-1}
template <class F>
Matrix<F> naive_t(const Algebra<F>& a, std::size_t j) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  Matrix<F> m(f, ipow(d, j + 1), ipow(d, j + 1));
  for (std::size_t col = 0; col < m.cols(); ++col) {
    auto fs = factors(col, d, j + 1);
    std::vector<std::size_t> g{fs[j]};
    g.insert(g.end(), fs.begin(), fs.begin() + j);
    m(index_of(g, d), col) = j % 2 ? f.neg(f.one()) : f.one();
  }
  return m;
}

// HC via the quotient C/(1-t), valid in characteristic 0. The rank of the
// induced boundary on coinvariants is rank[b | 1-t] - rank[1-t].
template <class F>
std::vector<std::size_t> connes_quotient_hc(const Algebra<F>& a, std::size_t top) {
  const F& f = a.field();
  auto one_minus_t = [&](std::size_t j) {
    auto m = naive_t(a, j);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.sub(r == c ? f.one() : f.zero(), m(r, c));
    return m;
  };
  auto beside = [&](const Matrix<F>& x, const Matrix<F>& y) {
    Matrix<F> m(f, x.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
      for (std::size_t c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
      for (std::size_t c = 0; c < y.cols(); ++c) m(r, x.cols() + c) = y(r, c);
    }
    return m;
  };
  auto induced = [&](std::size_t j) -> std::size_t {  // rank of b : C^l_j -> C^l_{j-1}
    if (j == 0) return 0;
    auto t = one_minus_t(j - 1);
    return rank(beside(naive_b(a, j, true), t)) - rank(t);
  };
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j <= top; ++j) {
    const std::size_t coinvariants = ipow(a.dim(), j + 1) - rank(one_minus_t(j));
    out.push_back(coinvariants - induced(j) - induced(j + 1));
  }
  return out;
}

template <class F>
std::vector<std::size_t> dense_homology(const Algebra<F>& a, std::size_t n) {
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t j = 1; j <= n; ++j) ranks[j] = rank(naive_b(a, j, true));
  std::vector<std::size_t> h;
  for (std::size_t j = 0; j < n; ++j) h.push_back(ipow(a.dim(), j + 1) - ranks[j] - ranks[j + 1]);
  return h;
}

struct BudgetReset {
  ~BudgetReset() { set_size_budget(0); }
};

}  // namespace

TEST_CASE("b and b' match the alternating-sum formula") {
  Rationals q;
  PrimeField f5(5);
  auto h = quaternion(q.from_int(-1), q.from_int(3), q);
  auto dn = dual_numbers(q);
  for (std::size_t j = 1; j <= 2; ++j) {
    CHECK(hochschild_differential(h, j).to_dense() == naive_b(h, j, true));
    CHECK(bar_differential(h, j).to_dense() == naive_b(h, j, false));
    CHECK(hochschild_differential(dn, j).to_dense() == naive_b(dn, j, true));
  }
  auto m = mat_algebra(2, f5);
  CHECK(hochschild_differential(m, 3).to_dense() == naive_b(m, 3, true));
}

TEST_CASE("cyclic operator matches the signed rotation") {
  Rationals q;
  auto m = mat_algebra(2, q);
  for (std::size_t j = 0; j <= 3; ++j) CHECK(cyclic_operator(m, j).to_dense() == naive_t(m, j));
}

TEST_CASE("HH of separable algebras collapses to HH_0") {
  Rationals q;
  PrimeField f5(5), f7(7);
  CHECK(homology_dims(hochschild_complex(field_algebra(q), 5)).dims == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(homology_dims(hochschild_complex(mat_algebra(2, q), 3)).dims == std::vector<std::size_t>{1, 0, 0});
  CHECK(homology_dims(hochschild_complex(mat_algebra(3, f7), 3)).dims == std::vector<std::size_t>{1, 0, 0});
  CHECK(homology_dims(hochschild_complex(quaternion(q.from_int(-1), q.from_int(-1), q), 3)).dims ==
        std::vector<std::size_t>{1, 0, 0});
  auto kkk = product(product(field_algebra(f5), field_algebra(f5)), field_algebra(f5));
  CHECK(homology_dims(hochschild_complex(kkk, 3)).dims == std::vector<std::size_t>{3, 0, 0});
}

TEST_CASE("sparse homology agrees with dense elimination") {
  Rationals q;
  PrimeField f3(3);
  auto dn = dual_numbers(q);
  CHECK(homology_dims(hochschild_complex(dn, 4)).dims == dense_homology(dn, 4));
  auto mixed = product(dual_numbers(f3), mat_algebra(2, f3));
  CHECK(homology_dims(hochschild_complex(mixed, 3)).dims == dense_homology(mixed, 3));
  auto h = quaternion(q.from_int(2), q.from_int(5), q);
  CHECK(homology_dims(hochschild_complex(h, 3)).dims == dense_homology(h, 3));
}

TEST_CASE("dual numbers: HH_n is one-dimensional for n >= 1 in characteristic 0") {
  auto h = homology_dims(hochschild_complex(dual_numbers(Rationals{}), 5));
  CHECK(h.dims == std::vector<std::size_t>{2, 1, 1, 1, 1});
  CHECK(h.top_degree == 5);
  CHECK(h.top_bound >= 1);
}

TEST_CASE("top-degree bound is never below the true homology") {
  Rationals q;
  auto dn = dual_numbers(q);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto h = homology_dims(hochschild_complex(dn, n));
    auto longer = homology_dims(hochschild_complex(dn, n + 1));
    CHECK(h.top_bound >= longer.dims[n]);
  }
}

TEST_CASE("cyclic structure identities") {
  Rationals q;
  PrimeField f5(5);
  auto check = [](const auto& a) {
    for (std::size_t j = 0; j <= 3; ++j) {
      auto t = cyclic_operator(a, j);
      auto p = t;
      for (std::size_t i = 0; i < j; ++i) p = p * t;
      CHECK(p == decltype(t)::identity(t.field(), t.rows()));
      auto one_minus_t = decltype(t)::identity(t.field(), t.rows()) - t;
      auto n = norm_operator(a, j);
      CHECK((one_minus_t * n).is_zero());
      CHECK((n * one_minus_t).is_zero());
    }
    auto mc = mixed_complex(a, 3);
    CHECK(mc.b_squared_zero());
    CHECK(mc.B_squared_zero());
    CHECK(mc.anticommute());
  };
  check(field_algebra(q));
  check(dual_numbers(q));
  check(quaternion(q.from_int(-1), q.from_int(-1), q));
  check(mat_algebra(2, f5));
}

TEST_CASE("b' is acyclic with contracting homotopy s") {
  Rationals q;
  auto a = quaternion(q.from_int(-1), q.from_int(2), q);
  for (std::size_t j = 1; j <= 2; ++j) {
    // b' s + s b' = 1 on C_j
    auto lhs = bar_differential(a, j + 1) * extra_degeneracy(a, j) + extra_degeneracy(a, j - 1) * bar_differential(a, j);
    CHECK(lhs == SparseMatrix<Rationals>::identity(q, lhs.rows()));
  }
}

TEST_CASE("cyclic bicomplex total differential squares to zero") {
  Rationals q;
  auto a = dual_numbers(q);
  CyclicBicomplex<Rationals> cc(a, -2, 3, 5);
  for (int n = -1; n <= 3; ++n) CHECK((cc.total_differential(n) * cc.total_differential(n + 1)).is_zero());
  CHECK(cc.columns_in_degree(1) == std::vector<int>{-2, -1, 0, 1});
}

TEST_CASE("HC values") {
  Rationals q;
  PrimeField f5(5);
  CHECK(cyclic_homology_dims(field_algebra(q), 6) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(cyclic_homology_dims(mat_algebra(2, f5), 4) == std::vector<std::size_t>{1, 0, 1});
  auto kk = product(field_algebra(q), field_algebra(q));
  CHECK(cyclic_homology_dims(kk, 4) == std::vector<std::size_t>{2, 0, 2});
}

TEST_CASE("HC agrees with the Connes quotient complex in characteristic 0") {
  Rationals q;
  auto dn = dual_numbers(q);
  auto hc = cyclic_homology_dims(dn, 5);
  CHECK(hc == connes_quotient_hc(dn, 3));
  CHECK(hc == std::vector<std::size_t>{2, 0, 2, 0});
  auto h = quaternion(q.from_int(-1), q.from_int(3), q);
  CHECK(cyclic_homology_dims(h, 4) == connes_quotient_hc(h, 2));
  auto mixed = product(dn, field_algebra(q));
  CHECK(cyclic_homology_dims(mixed, 4) == connes_quotient_hc(mixed, 2));
}

TEST_CASE("Connes periodicity S is an isomorphism for separable algebras") {
  Rationals q;
  PrimeField f5(5);
  for (std::size_t j = 0; j <= 1; ++j) {
    CHECK(connes_periodicity(mat_algebra(2, q), j).isomorphism());
    CHECK(connes_periodicity(product(field_algebra(f5), field_algebra(f5)), j).isomorphism());
  }
}

TEST_CASE("HP and HN") {
  Rationals q;
  auto k = periodic_and_negative_dims(field_algebra(q), 1, 2);
  CHECK(k.hp_even == 1);
  CHECK(k.hp_odd == 0);
  CHECK(k.hn == std::vector<std::size_t>{0, 1, 0});
  auto m2 = periodic_and_negative_dims(mat_algebra(2, q), 2, 2);
  CHECK(m2.hn_lo == -2);
  CHECK(m2.hn == std::vector<std::size_t>{1, 0, 1, 0});
  auto kk = periodic_and_negative_dims(product(field_algebra(q), field_algebra(q)), 1, 2);
  CHECK(kk.hp_even == 2);
  CHECK(kk.hp_odd == 0);
}

TEST_CASE("HP is nil-invariant over Q") {
  // Goodwillie: HP(k[e]) = HP(k) in characteristic 0.
  auto r = periodic_and_negative_dims(dual_numbers(Rationals{}), 1, 2);
  CHECK(r.hp_even == 1);
  CHECK(r.hp_odd == 0);
  CHECK(r.tower_image);
  // Every truncation alone still sees HC_{2m}, which is 2-dimensional.
  CHECK(cyclic_homology_dims(dual_numbers(Rationals{}), 5)[2] == 2);
  CHECK_FALSE(periodic_and_negative_dims(field_algebra(Rationals{}), 1, 2).tower_image);
}

TEST_CASE("comparison map") {
  Rationals q;
  PrimeField f5(5);
  auto semisimple = comparison_map(mat_algebra(2, f5), 3);
  CHECK(semisimple.is_chain_map());
  CHECK(semisimple.is_quasi_isomorphism());
  CHECK(semisimple.induced_ranks == std::vector<std::size_t>{1, 0, 0});
  auto h = comparison_map(quaternion(q.from_int(-1), q.from_int(-1), q), 3);
  CHECK(h.is_chain_map());
  CHECK(h.is_quasi_isomorphism());
  auto dn = comparison_map(dual_numbers(q), 3);
  CHECK(dn.is_chain_map());
  CHECK_FALSE(dn.is_quasi_isomorphism());
  CHECK(dn.target_homology.dims == std::vector<std::size_t>{2, 0, 0});
}

TEST_CASE("size budget") {
  BudgetReset reset;
  PrimeField f7(7);
  CHECK(size_budget() == kDefaultSizeBudget);
  CHECK_NOTHROW(hochschild_complex(mat_algebra(3, f7), 4));
  CHECK_THROWS_AS(hochschild_complex(mat_algebra(3, f7), 5), Error);
  set_size_budget(100);
  CHECK(size_budget() == 100);
  try {
    hochschild_complex(mat_algebra(2, f7), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeBudgetExceeded);
  }
  set_size_budget(0);
  setenv("NCINV_SIZE_BUDGET", "50", 1);
  CHECK(size_budget() == 50);
  setenv("NCINV_SIZE_BUDGET", "junk", 1);
  CHECK(size_budget() == kDefaultSizeBudget);
  unsetenv("NCINV_SIZE_BUDGET");
}

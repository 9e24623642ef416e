#include <doctest.h>

#include <random>
#include <set>

#include "ncinv/linalg.hpp"

using namespace ncinv;

namespace {

// Size of the row space over F_p by enumerating every combination of rows;
// the rank is log_p of that.
std::size_t brute_rank(const PrimeField& f, const Matrix<PrimeField>& m) {
  std::set<std::vector<std::uint32_t>> seen;
  const std::size_t r = m.rows(), p = f.modulus();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < r; ++i) combos *= p;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<std::uint32_t> v(m.cols(), 0);
    std::size_t c = code;
    for (std::size_t i = 0; i < r; ++i, c /= p)
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = f.add(v[j], f.mul(static_cast<std::uint32_t>(c % p), m(i, j)));
    seen.insert(v);
  }
  std::size_t rank = 0;
  for (std::size_t size = seen.size(); size > 1; size /= p) ++rank;
  return rank;
}

Matrix<PrimeField> random_matrix(const PrimeField& f, std::mt19937& rng, std::size_t r, std::size_t c, int zero_bias) {
  Matrix<PrimeField> m(f, r, c);
  std::uniform_int_distribution<int> dist(0, static_cast<int>(f.modulus()) - 1 + zero_bias);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      int v = dist(rng);
      m(i, j) = v < static_cast<int>(f.modulus()) ? static_cast<std::uint32_t>(v) : 0;
    }
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rationals q;
  auto x = q.parse("6/-4");
  CHECK(q.to_string(x) == "-3/2");
  CHECK(q.to_string(q.mul(x, q.inv(x))) == "1");
  CHECK(q.to_string(q.parse("-12")) == "-12");
  CHECK_THROWS_AS(q.inv(q.zero()), Error);
  CHECK_THROWS_AS(q.parse("1/0"), Error);
  CHECK_THROWS_AS(q.parse("abc"), Error);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.mul(f.inv(3), 3) == 1);
  CHECK(f.parse("3/5") == f.mul(3, f.inv(5)));
  CHECK(f.pow(3, 6) == 1);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_NOTHROW(PrimeField(2147483647));
  PrimeField big(2147483647);
  CHECK(big.mul(big.from_int(-1), big.from_int(-1)) == 1);
}

TEST_CASE("from_integer agrees with repeated reduction") {
  PrimeField f(101);
  mpz_class z("-123456789012345678901234567890");
  mpz_class r = z % 101;
  if (r < 0) r += 101;
  CHECK(f.from_integer(z) == r.get_ui());
}

TEST_CASE("is_prime against trial division") {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool expect = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) expect = false;
    CHECK(is_prime(n) == expect);
  }
}

TEST_CASE("square roots") {
  Rationals q;
  CHECK(square_root(q, q.parse("9/4")) == q.parse("3/2"));
  CHECK_FALSE(square_root(q, q.parse("2")).has_value());
  CHECK_FALSE(square_root(q, q.parse("-1")).has_value());
  for (std::uint32_t p : {3u, 5u, 13u, 17u, 97u}) {
    PrimeField f(p);
    for (std::uint32_t x = 0; x < p; ++x) {
      bool is_square = false;
      for (std::uint32_t y = 0; y < p; ++y) is_square |= f.mul(y, y) == x;
      auto r = square_root(f, x);
      CHECK(r.has_value() == is_square);
      if (r) CHECK(f.mul(*r, *r) == x);
    }
  }
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("F5") == FieldSpec::prime(5));
  CHECK(FieldSpec::parse("Fp:7") == FieldSpec::prime(7));
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("F6"), Error);
}

TEST_CASE("rank matches a brute-force span count over F_3") {
  PrimeField f(3);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    auto m = random_matrix(f, rng, r, c, trial % 3);
    const std::size_t expect = brute_rank(f, m);
    CHECK(rank(m) == expect);
    CHECK(rank(SparseMatrix<PrimeField>::from_dense(m)) == expect);
  }
}

TEST_CASE("rank-nullity and kernel correctness") {
  PrimeField f(5);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(f, rng, 2 + trial % 5, 2 + trial % 7, 4);
    auto ker = kernel(m);
    CHECK(ker.dim() + rank(m) == m.cols());
    for (const auto& v : ker.basis()) CHECK(is_zero_vector(f, m.apply(v)));
    auto sm = SparseMatrix<PrimeField>::from_dense(m);
    auto kb = kernel_basis(sm);
    CHECK(kb.cols() == ker.dim());
    CHECK((sm * kb).is_zero());
    CHECK(rank(kb) == kb.cols());
  }
}

TEST_CASE("rational rank of a classic singular matrix") {
  Rationals q;
  Matrix<Rationals> m(q, 3, 3);
  int v = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = v++;
  CHECK(rank(m) == 2);
  auto ker = kernel(m);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.basis()[0] == Vector<Rationals>{1, -2, 1});
  m(2, 2) = mpq_class(1, 3);
  CHECK(rank(m) == 3);
}

TEST_CASE("block decomposition does not change the rank") {
  // A block diagonal matrix with a dependent block and an isolated pivot.
  Rationals q;
  SparseMatrix<Rationals> m(q, 5, 5);
  m.set_column(0, {{0, 1}, {1, 2}});
  m.set_column(1, {{0, 2}, {1, 4}});
  m.set_column(2, {{3, 7}});
  m.set_column(3, {{2, 1}, {4, 1}});
  m.set_column(4, {{2, 1}, {4, mpq_class(1, 2)}});
  CHECK(rank(m) == 4);
  CHECK(rank(m.to_dense()) == 4);
  CHECK(kernel_basis(m).cols() == 1);
}

TEST_CASE("subspaces are canonical") {
  Rationals q;
  auto a = Subspace<Rationals>::span(q, 3, {{1, 1, 0}, {0, 1, 1}});
  auto b = Subspace<Rationals>::span(q, 3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(Vector<Rationals>{3, 5, 2}));
  CHECK_FALSE(a.contains(Vector<Rationals>{0, 0, 1}));
  auto coords = a.coordinates({3, 5, 2});
  Vector<Rationals> back(3, 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) back[k] += coords[i] * a.basis()[i][k];
  CHECK(back == Vector<Rationals>{3, 5, 2});
}

TEST_CASE("quotients") {
  Rationals q;
  auto full = Subspace<Rationals>::full(q, 4);
  auto line = Subspace<Rationals>::span(q, 4, {{1, 1, 1, 1}});
  auto quo = quotient(full, line);
  CHECK(quo.dim == 3);
  std::vector<Vector<Rationals>> all = quo.representatives;
  all.push_back({1, 1, 1, 1});
  CHECK(Subspace<Rationals>::span(q, 4, all) == full);
  CHECK_THROWS_AS(quotient(line, full), Error);
}

TEST_CASE("sparse products, kron and hstack") {
  PrimeField f(7);
  std::mt19937 rng(5);
  auto a = random_matrix(f, rng, 3, 4, 2), b = random_matrix(f, rng, 4, 2, 2);
  auto sa = SparseMatrix<PrimeField>::from_dense(a), sb = SparseMatrix<PrimeField>::from_dense(b);
  auto prod = (sa * sb).to_dense();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      std::uint32_t s = 0;
      for (std::size_t k = 0; k < 4; ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      CHECK(prod(i, j) == s);
    }
  auto k = kron(sa, sb);
  CHECK(k.rows() == 12);
  CHECK(k.cols() == 8);
  CHECK(k.at(1 * 4 + 2, 3 * 2 + 1) == f.mul(a(1, 3), b(2, 1)));
  auto h = hstack<PrimeField>({sa, sa}, f, 3);
  CHECK(h.cols() == 8);
  CHECK(rank(h) == rank(sa));
  CHECK((sa - sa).is_zero());
}

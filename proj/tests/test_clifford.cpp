#include <doctest.h>

#include <algorithm>
#include <optional>

#include "ncinv/brauer.hpp"
#include "ncinv/clifford.hpp"

using namespace ncinv;

namespace {

// e_S e_T by concatenating the index words and bubble-sorting: each swap of
// distinct generators flips the sign, each adjacent pair e_i e_i becomes a_i.
std::pair<mpq_class, std::vector<std::size_t>> word_product(const std::vector<mpq_class>& a,
                                                            const std::vector<std::size_t>& s,
                                                            const std::vector<std::size_t>& t) {
  std::vector<std::size_t> w = s;
  w.insert(w.end(), t.begin(), t.end());
  mpq_class coeff = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        coeff *= a[w[i]];
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        coeff = -coeff;
        changed = true;
        break;
      }
    }
  }
  return {coeff, w};
}

std::optional<ErrorKind> kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("basis order") {
  using B = std::vector<std::vector<std::size_t>>;
  CHECK(clifford_basis(0) == B{{}});
  CHECK(clifford_basis(3) == B{{}, {0}, {0, 1}, {0, 1, 2}, {0, 2}, {1}, {1, 2}, {2}});
  for (std::size_t n = 0; n <= 6; ++n) CHECK(clifford_basis(n).size() == (std::size_t{1} << n));
}

TEST_CASE("full Clifford structure constants match word reduction") {
  Rationals q;
  for (const std::vector<mpq_class>& a : {std::vector<mpq_class>{2, -3, 5}, std::vector<mpq_class>{1, -1, mpq_class(1, 2), 7}}) {
    auto cl = full_clifford(QuadraticForm<Rationals>::make(q, a));
    auto basis = clifford_basis(a.size());
    REQUIRE(cl.dim() == basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        auto [c, w] = word_product(a, basis[i], basis[j]);
        const auto target = static_cast<std::size_t>(std::find(basis.begin(), basis.end(), w) - basis.begin());
        for (std::size_t k = 0; k < basis.size(); ++k) CHECK(cl.structure_constant(i, j, k) == (k == target ? c : 0));
      }
  }
}

TEST_CASE("dimensions and centers") {
  Rationals q;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<mpq_class> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(static_cast<long>(i % 2 ? -(i + 1) : i + 2));
    auto form = QuadraticForm<Rationals>::make(q, a);
    CHECK(full_clifford(form).dim() == (std::size_t{1} << n));
    auto c0 = even_clifford(form);
    CHECK(c0.dim() == (std::size_t{1} << (n - 1)));
    // C_0 is central simple for n odd, has a two-dimensional center for n even
    CHECK(center(c0).dim() == (n % 2 ? 1u : 2u));
    CHECK(center(full_clifford(form)).dim() == (n % 2 ? 2u : 1u));
  }
}

TEST_CASE("C_0<1,1,1> is the Hamilton quaternions") {
  Rationals q;
  auto c0 = even_clifford(QuadraticForm<Rationals>::make(q, {1, 1, 1}));
  CHECK(is_central_simple(c0));
  CHECK(degree(c0) == 2);
  auto h = quaternion(q.from_int(-1), q.from_int(-1), q);
  CHECK(brauer_equal(c0, h) == Decision::Yes);
  CHECK(is_split(c0) == Decision::No);
  CHECK_FALSE(find_zero_divisor(c0, 2).has_value());
}

TEST_CASE("C_0<1,-1,1> is split") {
  Rationals q;
  auto c0 = even_clifford(QuadraticForm<Rationals>::make(q, {1, -1, 1}));
  CHECK(is_split(c0) == Decision::Yes);
  CHECK(find_zero_divisor(c0).has_value());
}

TEST_CASE("C_0<1,-1,1,-1> splits into two split quaternion components") {
  Rationals q;
  auto c0 = even_clifford(QuadraticForm<Rationals>::make(q, {1, -1, 1, -1}));
  auto [plus, minus] = split_components(c0);
  for (const auto* c : {&plus, &minus}) {
    CHECK(c->dim() == 4);
    CHECK(is_central_simple(*c));
    CHECK(is_split(*c) == Decision::Yes);
  }
  CHECK(hh0(c0).dim == 2);
}

TEST_CASE("split_components over F_p") {
  PrimeField f(7);
  auto c0 = even_clifford(QuadraticForm<PrimeField>::make(f, {1, 2, 3, 6}));
  // discriminant 36 is a square, so the center splits
  auto [plus, minus] = split_components(c0);
  CHECK(plus.dim() == 4);
  CHECK(minus.dim() == 4);
}

TEST_CASE("errors") {
  Rationals q;
  PrimeField f3(3);
  CHECK(kind_of([&] { QuadraticForm<PrimeField>::make(PrimeField(2), {1, 1}); }) == ErrorKind::CharTwo);
  CHECK(kind_of([&] { QuadraticForm<Rationals>::make(q, {1, 0, 2}); }) == ErrorKind::ZeroParameter);
  CHECK(kind_of([&] { QuadraticForm<PrimeField>::make(f3, {1, f3.from_int(3)}); }) == ErrorKind::ZeroParameter);
  // <1,1>: C_0 = Q(i), a field
  CHECK(kind_of([&] { split_components(even_clifford(QuadraticForm<Rationals>::make(q, {1, 1}))); }) ==
        ErrorKind::CenterNotSplit);
  CHECK(kind_of([&] { split_components(mat_algebra(2, q)); }) == ErrorKind::CenterNotTwoDim);
  CHECK(kind_of([&] { split_components(dual_numbers(q)); }) == ErrorKind::CenterNotSplit);
}

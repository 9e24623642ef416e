#include <doctest.h>

#include <algorithm>
#include <optional>

#include "ncinv/hochschild.hpp"
#include "ncinv/motive.hpp"
#include "ncinv/weyl.hpp"

using namespace ncinv;

namespace {

Payload<Rationals> symbolic(std::size_t degree, BrauerDescriptor b = BrauerDescriptor::unknown(), std::size_t hh0 = 1) {
  return SymbolicAlgebra{"A", degree, hh0, std::move(b)};
}

template <class F>
std::vector<std::size_t> degrees(const MotiveExpression<F>& e) {
  std::vector<std::size_t> out;
  for (const auto& s : e.summands) out.push_back(s.degree.value_or(0));
  return out;
}

template <class F>
std::vector<std::size_t> reduced_degrees(const MotiveExpression<F>& e) {
  std::vector<std::size_t> out;
  for (const auto& s : e.summands) out.push_back(s.reduced_degree.value_or(0));
  return out;
}

using Dims = std::map<int, std::size_t>;

std::optional<ErrorKind> kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("Severi-Brauer ladders") {
  Rationals q;
  auto h = quaternion(q.from_int(-1), q.from_int(-1), q);
  auto sb2 = severi_brauer_motive(q, 2, Payload<Rationals>(h));
  REQUIRE(sb2.summands.size() == 2);
  CHECK(sb2.summands[0].is_explicit());
  CHECK(sb2.summands[0].degree == 1u);
  CHECK(sb2.summands[1].brauer.ramified == PlaceSet{2, kRealPlace});

  CHECK(severi_brauer_motive(q, 1, symbolic(1)).summands.size() == 1);

  auto sb3 = severi_brauer_motive(q, 3, symbolic(3));
  CHECK(degrees(sb3) == std::vector<std::size_t>{1, 3, 9});
  CHECK(reduced_degrees(sb3) == std::vector<std::size_t>{1, 3, 3});

  for (std::size_t n = 1; n <= 6; ++n) {
    auto e = severi_brauer_motive(q, n, symbolic(n));
    CHECK(e.summands.size() == n);
    CHECK(evaluate(e, Invariant::HH, 0, 2).dims == Dims{{0, n}, {1, 0}, {2, 0}});
    if (n >= 2) CHECK(mpz_class(static_cast<unsigned long>(n)) == weyl_index(ParabolicSpec::remove(RootDatum::make("A", n - 1), {1})));
  }
  CHECK(kind_of([&] { severi_brauer_motive(q, 3, Payload<Rationals>(h)); }) == ErrorKind::DegreeMismatch);
  CHECK(kind_of([&] { severi_brauer_motive(q, 2, Payload<Rationals>(mat_algebra(3, q))); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("tensor powers of an explicit quaternion algebra") {
  Rationals q;
  auto h = quaternion(q.from_int(-1), q.from_int(-1), q);
  auto s = power_summand(q, Payload<Rationals>(h), 2);
  CHECK(s.degree == 4u);
  CHECK(s.reduced_degree == 1u);
  CHECK(s.brauer.is_split() == Decision::Yes);
  CHECK(power_summand(q, Payload<Rationals>(h), 0).degree == 1u);
  // A^3 has dimension 64, still explicit; A^4 would be 256
  CHECK(power_summand(q, Payload<Rationals>(h), 3).is_explicit());
  auto big = power_summand(q, Payload<Rationals>(h), 4);
  CHECK_FALSE(big.is_explicit());
  CHECK(big.degree == 16u);
  CHECK(big.brauer.is_split() == Decision::Yes);
}

TEST_CASE("Grassmann motives") {
  Rationals q;
  auto a = symbolic(3);
  auto g13 = grassmann_motive(q, 1, 3, a);
  auto sb = severi_brauer_motive(q, 3, a);
  CHECK(degrees(g13) == degrees(sb));
  CHECK(reduced_degrees(g13) == reduced_degrees(sb));
  CHECK(grassmann_motive(q, 2, 4, symbolic(4)).summands.size() == 6);
  for (unsigned n = 2; n <= 6; ++n) {
    CHECK(grassmann_motive(q, n - 1, n, symbolic(n)).summands.size() == n);
    for (unsigned m = 1; m < n; ++m)
      CHECK(mpz_class(static_cast<unsigned long>(grassmann_motive(q, m, n, symbolic(n)).summands.size())) ==
            weyl_index(ParabolicSpec::remove(RootDatum::make("A", n - 1), {m})));
  }
}

TEST_CASE("quadric motives") {
  Rationals q;
  auto odd = quadric_motive(QuadraticForm<Rationals>::make(q, {1, 1, 1}));
  REQUIRE(odd.summands.size() == 2);
  CHECK(odd.summands[1].brauer.ramified == PlaceSet{2, kRealPlace});
  CHECK(evaluate(odd, Invariant::HC, 0, 4).dims == Dims{{0, 2}, {1, 0}, {2, 2}, {3, 0}, {4, 2}});

  auto even = quadric_motive(QuadraticForm<Rationals>::make(q, {1, -1, 1, -1}));
  REQUIRE(even.summands.size() == 4);
  CHECK(is_trivial_motive(even) == Decision::Yes);

  // rank n gives n - 1 (odd) or n (even) summands, the index of the parabolic
  for (unsigned n = 3; n <= 7; ++n) {
    std::vector<mpq_class> coeffs;
    for (unsigned i = 0; i < n; ++i) coeffs.push_back(i % 2 ? -1 : 1);
    auto e = quadric_motive(QuadraticForm<Rationals>::make(q, coeffs));
    CHECK(e.summands.size() == (n % 2 ? n - 1 : n));
    // D_2 is reducible, so node 1 alone is not the quadric parabolic there
    if (n != 4)
      CHECK(weyl_index(ParabolicSpec::remove(RootDatum::make(n % 2 ? "B" : "D", n / 2), {1})) == e.summands.size());
  }

  // <1,1,1,1> has square discriminant: C_0 = H x H
  auto hh = quadric_motive(QuadraticForm<Rationals>::make(q, {1, 1, 1, 1}));
  REQUIRE(hh.summands.size() == 4);
  CHECK(hh.summands[2].brauer.ramified == PlaceSet{2, kRealPlace});
  CHECK(hh.summands[3].brauer.ramified == PlaceSet{2, kRealPlace});
  CHECK(is_trivial_motive(hh) == Decision::No);
  // <1,1,1,2>: the center of C_0 is Q(sqrt 2), so a placeholder pair with a note
  auto nonsplit = quadric_motive(QuadraticForm<Rationals>::make(q, {1, 1, 1, 2}));
  CHECK(nonsplit.summands.size() == 4);
  CHECK_FALSE(nonsplit.notes.empty());
  CHECK_FALSE(nonsplit.summands[3].is_explicit());
  CHECK(kind_of([&] { quadric_motive(QuadraticForm<Rationals>::make(q, {1, 1})); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("evaluation agrees with brute force on k x C_0") {
  Rationals q;
  auto form = QuadraticForm<Rationals>::make(q, {1, 1, 1});
  auto e = quadric_motive(form);
  auto direct = product(field_algebra(q), even_clifford(form));
  auto hh = homology_dims(hochschild_complex(direct, 3)).dims;
  auto table = evaluate(e, Invariant::HH, 0, 2).dims;
  for (int j = 0; j <= 2; ++j) CHECK(table.at(j) == hh.at(static_cast<std::size_t>(j)));
  auto hc = cyclic_homology_dims(direct, 4);
  auto hc_table = evaluate(e, Invariant::HC, 0, 2).dims;
  for (int j = 0; j <= 2; ++j) CHECK(hc_table.at(j) == hc.at(static_cast<std::size_t>(j)));
  auto pn = periodic_and_negative_dims(direct, 2, 2, 0);
  auto hp = evaluate(e, Invariant::HP, 0, 1).dims;
  CHECK(hp.at(0) == pn.hp_even);
  CHECK(hp.at(1) == pn.hp_odd);
  auto hn = evaluate(e, Invariant::HN, -2, 0).dims;
  for (int j = -2; j <= 0; ++j) CHECK(hn.at(j) == pn.hn.at(static_cast<std::size_t>(j - pn.hn_lo)));
}

TEST_CASE("HC periodicity of the collapse formula") {
  Rationals q;
  auto sb4 = severi_brauer_motive(q, 4, symbolic(4));
  auto hh0 = evaluate(sb4, Invariant::HH, 0, 0).dims.at(0);
  auto hc = evaluate(sb4, Invariant::HC, 0, 8).dims;
  for (int j = 0; j <= 8; ++j) CHECK(hc.at(j) == (j % 2 == 0 ? hh0 : 0));
  auto e = severi_brauer_motive(q, 2, symbolic(2));
  CHECK(evaluate(e, Invariant::HN, -4, 1).dims == Dims{{-4, 2}, {-3, 0}, {-2, 2}, {-1, 0}, {0, 2}, {1, 0}});
  CHECK(evaluate(e, Invariant::MixedC, 0, 2).dims == evaluate(e, Invariant::HH, 0, 2).dims);
  CHECK(evaluate(e, Invariant::HP, 0, 1).dims.size() == 2);
}

TEST_CASE("form quadric ordering") {
  Rationals q;
  auto e = form_quadric_motive(q, 6, symbolic(6), symbolic(8), symbolic(8));
  std::vector<std::string> labels;
  for (const auto& s : e.summands) labels.push_back(s.label);
  REQUIRE(labels.size() == 5);
  CHECK(labels[0] == "k");
  CHECK(labels[1] == labels[2]);
  CHECK(form_quadric_motive(q, 8, symbolic(8), symbolic(8), symbolic(8)).summands.size() == 7);
  for (std::size_t n = 6; n <= 12; n += 2)
    CHECK(form_quadric_motive(q, n, symbolic(n), symbolic(2), symbolic(2)).summands.size() == n - 1);
  CHECK_FALSE(e.notes.empty());
  CHECK(kind_of([&] { form_quadric_motive(q, 7, symbolic(7), symbolic(2), symbolic(2)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("toric summand") {
  Rationals q;
  auto a = product(mat_algebra(2, q), mat_algebra(3, q));
  auto e = toric_motive(q, Payload<Rationals>(a));
  CHECK(evaluate(e, Invariant::HH, 0, 1).dims == Dims{{0, 2}, {1, 0}});
  CHECK(kind_of([&] { evaluate(toric_motive(q, Payload<Rationals>(dual_numbers(q))), Invariant::HH, 0, 0); }) ==
        ErrorKind::NotSemisimple);
}

TEST_CASE("coefficient reduction") {
  Rationals q;
  auto sb = severi_brauer_motive(q, 3, symbolic(3));
  auto r = reduce_coefficients(sb, {3});
  CHECK(r.reduced());
  CHECK(r.expr.summands.size() == 3);
  for (const auto& s : r.expr.summands) CHECK(s.label == "k");
  CHECK(is_trivial_motive(r.expr) == Decision::Yes);

  auto blocked = reduce_coefficients(sb, {});
  CHECK_FALSE(blocked.reduced());
  CHECK(blocked.blocking_primes == std::set<std::uint64_t>{3});
  CHECK(blocked.expr.summands.size() == 3);
  CHECK(blocked.expr.summands[1].label == sb.summands[1].label);

  auto quad = quadric_motive(QuadraticForm<Rationals>::make(q, {1, 1, 1, 1, 1}));
  auto rq = reduce_coefficients(quad, {2});
  CHECK(rq.reduced());
  CHECK(rq.expr.summands.size() == quad.summands.size());
  CHECK(is_trivial_motive(rq.expr) == Decision::Yes);

  auto unknown = severi_brauer_motive(q, 2, Payload<Rationals>(SymbolicAlgebra{"A", 2, 1, BrauerDescriptor::unknown()}));
  CHECK(reduce_coefficients(unknown, {2}).reduced());
  CHECK(prime_factors(360) == std::set<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(1).empty());
}

TEST_CASE("triviality") {
  Rationals q;
  auto split = severi_brauer_motive(q, 2, Payload<Rationals>(quaternion(q.one(), q.one(), q)));
  CHECK(is_trivial_motive(split) == Decision::Yes);
  auto hamilton = severi_brauer_motive(q, 2, Payload<Rationals>(quaternion(q.from_int(-1), q.from_int(-1), q)));
  CHECK(is_trivial_motive(hamilton) == Decision::No);
  CHECK(is_trivial_motive(severi_brauer_motive(q, 1, symbolic(1))) == Decision::Yes);
  CHECK(is_trivial_motive(severi_brauer_motive(q, 3, symbolic(3))) == Decision::Unknown);
  // a known nontrivial summand decides the answer even next to unknown ones
  auto mixed = hamilton;
  mixed.summands.push_back(make_summand<Rationals>("B", symbolic(5)));
  CHECK(is_trivial_motive(mixed) == Decision::No);
}

TEST_CASE("finite fields") {
  PrimeField f(5);
  auto a = quaternion(f.from_int(2), f.from_int(3), f);
  auto e = severi_brauer_motive(f, 2, Payload<PrimeField>(a));
  CHECK(is_trivial_motive(e) == Decision::Yes);
  CHECK(evaluate(e, Invariant::HH, 0, 0).dims.at(0) == 2);
}

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <optional>

#include "ncinv/error.hpp"
#include "ncinv/weyl.hpp"
#include "root_orbit.hpp"

using namespace ncinv;
using namespace oracle;

namespace {

std::vector<unsigned> nodes_of(unsigned mask, unsigned r) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < r; ++i)
    if (mask >> i & 1) out.push_back(i + 1);
  return out;
}

}  // namespace

TEST_CASE("weyl_order matches generate-and-count for classical types up to rank 6") {
  for (char fam : {'A', 'B', 'C', 'D'}) {
    const unsigned lo = fam == 'A' ? 1 : fam == 'D' ? 4 : 2;
    for (unsigned r = lo; r <= 6; ++r) {
      auto rd = RootDatum::make(std::string(1, fam), r);
      CAPTURE(rd.name());
      CHECK(weyl_order(rd) == mpz_class(static_cast<unsigned long>(orbit_size(cartan(fam, r), Weight(r, 1)))));
    }
  }
}

TEST_CASE("low-rank D") {
  CHECK(weyl_order(RootDatum::make("D", 2)) == 4);
  CHECK(weyl_order(RootDatum::make("D", 3)) == orbit_size(cartan('D', 3), Weight(3, 1)));
}

TEST_CASE("exceptional orders") {
  CHECK(weyl_order(RootDatum::make("G2", 2)) == orbit_size(cartan('G', 2), Weight(2, 1)));
  CHECK(weyl_order(RootDatum::make("F4", 4)) == orbit_size(cartan('F', 4), Weight(4, 1)));
  CHECK(weyl_order(RootDatum::make("E6", 6)) == orbit_size(cartan('E', 6), Weight(6, 1)));
  CHECK(weyl_order(RootDatum::make("E7", 7)) == 2903040);
  CHECK(weyl_order(RootDatum::make("E8", 8)) == 696729600);
}

TEST_CASE("parabolic indices agree with orbit sizes for every subset of nodes") {
  struct T {
    const char* fam;
    unsigned r;
  };
  for (T t : {T{"A", 4}, T{"B", 4}, T{"C", 3}, T{"D", 5}, T{"F4", 4}, T{"G2", 2}, T{"E6", 6}}) {
    auto rd = RootDatum::make(t.fam, t.r);
    auto c = cartan(t.fam[0], t.r);
    for (unsigned mask = 0; mask < (1u << t.r); ++mask) {
      auto p = ParabolicSpec::retain(rd, nodes_of(mask, t.r));
      Weight lambda(t.r, 1);
      for (unsigned i : p.retained) lambda[i - 1] = 0;
      CAPTURE(rd.name());
      CAPTURE(mask);
      CHECK(weyl_index(p) == orbit_size(c, lambda));
      CHECK(parabolic_order(p) * weyl_index(p) == weyl_order(rd));
    }
  }
}

TEST_CASE("Grassmann parabolics have binomial index") {
  for (unsigned n = 2; n <= 8; ++n)
    for (unsigned m = 1; m < n; ++m)
      CHECK(weyl_index(ParabolicSpec::remove(RootDatum::make("A", n - 1), {m})) == binomial(n, m));
  CHECK(weyl_index(ParabolicSpec::remove(RootDatum::make("A", 4), {2})) == 10);
}

TEST_CASE("quadric parabolics") {
  // Removing node 1 of B_r or D_r gives the smooth quadric of rank 2r+1 or 2r.
  for (unsigned r = 2; r <= 6; ++r) CHECK(weyl_index(ParabolicSpec::remove(RootDatum::make("B", r), {1})) == 2 * r);
  for (unsigned r = 4; r <= 6; ++r) CHECK(weyl_index(ParabolicSpec::remove(RootDatum::make("D", r), {1})) == 2 * r);
}

TEST_CASE("Levi components") {
  using V = std::vector<std::string>;
  CHECK(parabolic_components(ParabolicSpec::remove(RootDatum::make("A", 4), {2})) == V{"A1", "A2"});
  CHECK(parabolic_components(ParabolicSpec::remove(RootDatum::make("D", 5), {1})) == V{"D4"});
  CHECK(parabolic_components(ParabolicSpec::remove(RootDatum::make("E6", 6), {1})) == V{"D5"});
  CHECK(parabolic_components(ParabolicSpec::remove(RootDatum::make("E6", 6), {2})) == V{"A5"});
  CHECK(parabolic_components(ParabolicSpec::remove(RootDatum::make("D", 4), {2})) == V{"A1", "A1", "A1"});
  CHECK(parabolic_components(ParabolicSpec::retain(RootDatum::make("B", 3), {})).empty());
  CHECK(parabolic_order(ParabolicSpec::retain(RootDatum::make("B", 3), {})) == 1);
}

TEST_CASE("Grassmann sequences against a brute-force filter") {
  for (unsigned n = 2; n <= 7; ++n)
    for (unsigned m = 1; m < n; ++m)
      for (bool strict : {false, true}) {
        // every alpha with entries in a generous box, filtered by the definition
        const int top = static_cast<int>(n - m) - (strict ? 1 : 0);
        std::vector<std::vector<int>> expect;
        std::vector<int> alpha(m, 0);
        const int lo = -static_cast<int>(m) - 1, hi = static_cast<int>(n) + 1;
        std::function<void(unsigned)> rec = [&](unsigned i) {
          if (i == m) {
            bool ok = true;
            for (unsigned k = 0; k < m; ++k) {
              const int beta = alpha[k] - static_cast<int>(k + 1);
              ok &= beta >= 1 - static_cast<int>(m) && beta <= top;
              if (k > 0) ok &= beta < alpha[k - 1] - static_cast<int>(k);
            }
            if (ok) expect.push_back(alpha);
            return;
          }
          for (int v = lo; v <= hi; ++v) {
            alpha[i] = v;
            rec(i + 1);
          }
        };
        rec(0);
        std::sort(expect.begin(), expect.end());
        auto got = grassmann_sequences(m, n, strict);
        CAPTURE(m);
        CAPTURE(n);
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
          CHECK(got[i].alpha == expect[i]);
          int sum = 0;
          for (int x : got[i].alpha) sum += x;
          CHECK(got[i].d == sum);
        }
        CHECK(mpz_class(static_cast<unsigned long>(got.size())) == (strict ? binomial(n - 1, m) : binomial(n, m)));
      }
}

TEST_CASE("small Grassmann examples") {
  CHECK(grassmann_sequences(1, 2).size() == 2);
  CHECK(grassmann_sequences(2, 4).size() == 6);
  CHECK(grassmann_sequences(2, 4, true).size() == 3);
  // m = 1: d runs over n consecutive integers
  auto s = grassmann_sequences(1, 5);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i].d == s[0].d + static_cast<int>(i));
}

TEST_CASE("invalid input") {
  auto kind = [](auto&& fn) -> std::optional<ErrorKind> {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  CHECK(kind([] { RootDatum::make("D", 1); }) == ErrorKind::InvalidRank);
  CHECK(kind([] { RootDatum::make("E", 5); }) == ErrorKind::InvalidRank);
  CHECK(kind([] { RootDatum::make("A", 0); }) == ErrorKind::InvalidRank);
  CHECK(kind([] { RootDatum::make("G2", 3); }) == ErrorKind::InvalidRank);
  auto a3 = RootDatum::make("A", 3);
  CHECK(kind([&] { ParabolicSpec::remove(a3, {4}); }) == ErrorKind::InvalidNodes);
  CHECK(kind([&] { ParabolicSpec::retain(a3, {1, 1}); }) == ErrorKind::InvalidNodes);
  CHECK(kind([&] { ParabolicSpec::retain(a3, {0}); }) == ErrorKind::InvalidNodes);
  CHECK(kind([] { grassmann_sequences(3, 3); }) == ErrorKind::InvalidArgument);
}

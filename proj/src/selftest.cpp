#include "ncinv/selftest.hpp"

#include <functional>
#include <random>

#include "ncinv/brauer.hpp"
#include "ncinv/hochschild.hpp"
#include "ncinv/motive.hpp"
#include "ncinv/weyl.hpp"

namespace ncinv {

namespace {

template <class F>
struct Entry {
  std::string name;
  Algebra<F> algebra;
  bool semisimple;
  bool small;  // cheap enough for the j <= 3 and bicomplex checks
};

struct Corpus {
  std::vector<Entry<Rationals>> q;
  std::vector<Entry<PrimeField>> fp;

  template <class Fn>
  bool all(Fn&& fn, std::string& detail) const {
    for (const auto& e : q)
      if (!fn(e)) return detail = e.name, false;
    for (const auto& e : fp)
      if (!fn(e)) return detail = e.name, false;
    return true;
  }
};

long long draw_nonzero(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound - 1);
  int v = dist(rng);
  return v >= 0 ? v + 1 : v;
}

Algebra<Rationals> corrupted_matrix_algebra() {
  Rationals q;
  auto m = mat_algebra(2, q);
  auto c = m.structure();
  c[(1 * 4 + 2) * 4 + 0] += 1;  // e12 * e21 picks up a spurious e11
  return Algebra<Rationals>(q, 4, std::move(c), m.unit());
}

Corpus build_corpus(const SelftestOptions& opts) {
  Rationals q;
  PrimeField f5(5), f7(7);
  std::mt19937_64 rng(opts.seed);
  Corpus c;
  c.q.push_back({"k", field_algebra(q), true, true});
  c.q.push_back({"k x k", product(field_algebra(q), field_algebra(q)), true, true});
  c.q.push_back({"M2(Q)", mat_algebra(2, q), true, true});
  c.q.push_back({"(-1,-1)_Q", quaternion(q.from_int(-1), q.from_int(-1), q), true, true});
  long long a = draw_nonzero(rng, 9), b = draw_nonzero(rng, 9);
  c.q.push_back({"(" + std::to_string(a) + "," + std::to_string(b) + ")_Q", quaternion(q.from_int(a), q.from_int(b), q),
                 true, true});
  c.q.push_back({"Q[x]/x^2", dual_numbers(q), false, true});
  if (opts.corrupt) c.q.push_back({"corrupted M2(Q)", corrupted_matrix_algebra(), true, true});
  c.fp.push_back({"M2(F5)", mat_algebra(2, f5), true, true});
  c.fp.push_back({"(1,1)_F5", quaternion(f5.one(), f5.one(), f5), true, true});
  c.fp.push_back({"M3(F7)", mat_algebra(3, f7), true, false});
  return c;
}

template <class F>
bool is_identity(const SparseMatrix<F>& m) {
  return m.rows() == m.cols() && m == SparseMatrix<F>::identity(m.field(), m.rows());
}

template <class F>
std::size_t hh0_dim(const Algebra<F>& a) {
  return hh0(a).dim;
}

}  // namespace

std::vector<PropertyResult> selftest(const SelftestOptions& opts) {
  std::vector<PropertyResult> results;
  auto check = [&](std::string name, const std::function<bool(std::string&)>& fn) {
    PropertyResult r{std::move(name), false, {}};
    try {
      r.passed = fn(r.detail);
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  Corpus corpus;
  check("corpus structure constants are associative and unital", [&](std::string&) {
    corpus = build_corpus(opts);
    return true;
  });
  if (!results.back().passed) return results;

  check("corrupted structure constants are rejected", [&](std::string& detail) {
    try {
      corrupted_matrix_algebra();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::InvalidAlgebra;
    }
    detail = "non-associative table accepted";
    return false;
  });

  check("b o b = 0 through degree 3", [&](std::string& detail) {
    return corpus.all([](const auto& e) { return hochschild_complex(e.algebra, 3).squares_to_zero(); }, detail);
  });

  check("HH_j of separable algebras is HH_0 in degree 0 only", [&](std::string& detail) {
    return corpus.all(
        [](const auto& e) {
          if (!e.semisimple) return true;
          auto h = homology_dims(hochschild_complex(e.algebra, 3));
          return h.dims == std::vector<std::size_t>{hh0_dim(e.algebra), 0, 0};
        },
        detail);
  });

  check("dual numbers have H_1 != 0", [&](std::string&) {
    auto h = homology_dims(hochschild_complex(dual_numbers(Rationals{}), 3));
    return h.dims[1] != 0;
  });

  check("t^(j+1) = 1 and (1-t)N = N(1-t) = 0 for j <= 3", [&](std::string& detail) {
    return corpus.all(
        [](const auto& e) {
          const std::size_t top = e.small ? 3 : 2;
          for (std::size_t j = 0; j <= top; ++j) {
            auto t = cyclic_operator(e.algebra, j);
            auto p = t;
            for (std::size_t i = 0; i < j; ++i) p = p * t;
            if (!is_identity(p)) return false;
            auto id = decltype(t)::identity(t.field(), t.rows());
            auto n = norm_operator(e.algebra, j);
            if (!((id - t) * n).is_zero() || !(n * (id - t)).is_zero()) return false;
          }
          return true;
        },
        detail);
  });

  check("B o B = 0 and bB + Bb = 0", [&](std::string& detail) {
    return corpus.all(
        [](const auto& e) {
          auto m = mixed_complex(e.algebra, e.small ? 3 : 2);
          return m.b_squared_zero() && m.B_squared_zero() && m.anticommute();
        },
        detail);
  });

  check("comparison map is a chain map, a quasi-isomorphism iff separable", [&](std::string& detail) {
    return corpus.all(
        [](const auto& e) {
          auto cm = comparison_map(e.algebra, 3);
          return cm.is_chain_map() && cm.is_quasi_isomorphism() == e.semisimple;
        },
        detail);
  });

  check("HC of separable algebras is HH_0 in even degrees", [&](std::string& detail) {
    return corpus.all(
        [](const auto& e) {
          if (!e.semisimple || !e.small) return true;
          const std::size_t h = hh0_dim(e.algebra);
          return cyclic_homology_dims(e.algebra, 4) == std::vector<std::size_t>{h, 0, h};
        },
        detail);
  });

  check("HP/HN are stable at depth 2 vs 3 with the collapse pattern", [&](std::string& detail) {
    return corpus.all(
        [](const auto& e) {
          if (!e.semisimple) return true;
          const int top = e.small ? 1 : 0;
          auto r = periodic_and_negative_dims(e.algebra, 1, 2, top);
          const std::size_t h = hh0_dim(e.algebra);
          std::vector<std::size_t> want{0, h};
          if (top == 1) want.push_back(0);
          return r.hp_even == h && r.hp_odd == 0 && r.hn == want;
        },
        detail);
  });

  check("|W| = |W_P| [W : W_P] for every parabolic", [&](std::string& detail) {
    std::vector<RootDatum> data;
    for (const char* fam : {"A", "B", "C", "D"})
      for (unsigned r = (fam[0] == 'D' ? 4 : fam[0] == 'A' ? 1 : 2); r <= 5; ++r) data.push_back(RootDatum::make(fam, r));
    for (const char* t : {"E6", "F4", "G2"}) data.push_back(RootDatum::make(t, t[1] - '0'));
    for (const auto& rd : data) {
      for (unsigned mask = 0; mask < (1u << rd.rank); ++mask) {
        std::vector<unsigned> keep;
        for (unsigned i = 0; i < rd.rank; ++i)
          if (mask >> i & 1) keep.push_back(i + 1);
        auto p = ParabolicSpec::retain(rd, keep);
        if (weyl_order(rd) != parabolic_order(p) * weyl_index(p)) return detail = rd.name(), false;
      }
    }
    return true;
  });

  check("Grassmann sequences number C(n, m) = [W(A_{n-1}) : W_P]", [&](std::string& detail) {
    for (unsigned n = 2; n <= 8; ++n)
      for (unsigned m = 1; m < n; ++m) {
        auto idx = weyl_index(ParabolicSpec::remove(RootDatum::make("A", n - 1), {m}));
        if (mpz_class(grassmann_sequences(m, n).size()) != idx || idx != binomial(n, m))
          return detail = "m=" + std::to_string(m) + " n=" + std::to_string(n), false;
      }
    return true;
  });

  check("even Clifford algebras have dimension 2^(n-1), central for odd n", [&](std::string& detail) {
    Rationals q;
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<mpq_class> coeffs;
      for (std::size_t i = 0; i < n; ++i) coeffs.push_back(q.from_int(draw_nonzero(rng, 5)));
      auto c0 = even_clifford(QuadraticForm<Rationals>::make(q, coeffs));
      if (c0.dim() != (std::size_t{1} << (n - 1))) return detail = "n=" + std::to_string(n), false;
      if (n % 2 == 1 && center(c0).dim() != 1) return detail = "center, n=" + std::to_string(n), false;
    }
    return true;
  });

  check("ramified sets of quaternion symbols have even size", [&](std::string& detail) {
    std::mt19937_64 rng(opts.seed ^ 0xd1b54a32d192ed03ull);
    for (int i = 0; i < 40; ++i) {
      long long a = draw_nonzero(rng, 60), b = draw_nonzero(rng, 60);
      if (quaternion_descriptor(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b))).ramified.size() % 2 != 0)
        return detail = "(" + std::to_string(a) + "," + std::to_string(b) + ")", false;
    }
    return true;
  });

  check("A (x) A^op is split for central simple A", [&](std::string& detail) {
    return corpus.all(
        [](const auto& e) {
          if (!e.small || !is_central_simple(e.algebra)) return true;
          return is_split(tensor(e.algebra, opposite(e.algebra))) == Decision::Yes;
        },
        detail);
  });

  check("Severi-Brauer motives have n = [W(A_{n-1}) : W_P] summands", [&](std::string& detail) {
    Rationals q;
    for (std::size_t n = 1; n <= 6; ++n) {
      auto e = severi_brauer_motive(q, n, Payload<Rationals>(SymbolicAlgebra{"A", n, 1, BrauerDescriptor::unknown()}));
      auto idx = n == 1 ? mpz_class(1) : weyl_index(ParabolicSpec::remove(RootDatum::make("A", n - 1), {1}));
      if (mpz_class(e.summands.size()) != idx) return detail = "n=" + std::to_string(n), false;
      if (evaluate(e, Invariant::HH, 0, 0).dims.at(0) != n) return detail = "HH_0, n=" + std::to_string(n), false;
    }
    return true;
  });

  check("motive HC_2j = HH_0 and reduction keeps the summand count", [&](std::string&) {
    Rationals q;
    auto e = quadric_motive(QuadraticForm<Rationals>::make(q, {1, 1, 1}));
    auto hh = evaluate(e, Invariant::HH, 0, 0).dims.at(0);
    auto hc = evaluate(e, Invariant::HC, 0, 6).dims;
    for (int j = 0; j <= 6; j += 2)
      if (hc.at(j) != hh) return false;
    return reduce_coefficients(e, {2}).expr.summands.size() == e.summands.size();
  });

  check("M3 at N=5 exceeds the default size budget", [&](std::string& detail) {
    const std::size_t saved = size_budget();
    set_size_budget(kDefaultSizeBudget);
    try {
      hochschild_complex(mat_algebra(3, PrimeField(7)), 5);
    } catch (const Error& e) {
      set_size_budget(saved);
      return e.kind() == ErrorKind::SizeBudgetExceeded;
    }
    set_size_budget(saved);
    detail = "no error raised";
    return false;
  });

  return results;
}

}  // namespace ncinv

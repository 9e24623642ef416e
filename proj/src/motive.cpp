#include "ncinv/motive.hpp"

#include "ncinv/weyl.hpp"

namespace ncinv {

std::set<std::uint64_t> prime_factors(std::uint64_t n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  if (n > 1) out.insert(n);
  return out;
}

std::string_view to_string(Invariant inv) {
  switch (inv) {
    case Invariant::HH: return "HH";
    case Invariant::HC: return "HC";
    case Invariant::HP: return "HP";
    case Invariant::HN: return "HN";
    case Invariant::MixedC: return "MixedC";
  }
  return "HH";
}

Invariant parse_invariant(std::string_view text) {
  for (Invariant inv : {Invariant::HH, Invariant::HC, Invariant::HP, Invariant::HN, Invariant::MixedC})
    if (text == to_string(inv)) return inv;
  throw Error(ErrorKind::Parse, "unknown invariant '" + std::string(text) + "' (HH, HC, HP, HN, MixedC)");
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > (std::size_t{1} << 40) / std::max<std::size_t>(base, 1))
      throw Error(ErrorKind::InvalidArgument, "tensor power degree overflows");
    r *= base;
  }
  return r;
}

std::string payload_name(const auto& payload) {
  if (payload.index() == 1) return std::get<1>(payload).name;
  return "A";
}

std::optional<std::size_t> reduced_from(const BrauerDescriptor& b, std::optional<std::size_t> base_degree) {
  if (b.is_split() == Decision::Yes) return 1;
  return base_degree;
}

// A^{tensor k} with the data of A already worked out in base.
template <class F>
Summand<F> power_of(const F& field, const Summand<F>& base, std::size_t k) {
  if (k == 0) return base_field_summand(field);
  if (k == 1) return base;
  Summand<F> s{base.label + "^" + std::to_string(k), SymbolicAlgebra{}};
  s.central_simple = base.central_simple;
  if (base.degree) s.degree = checked_power(*base.degree, k);
  s.hh0_dim = checked_power(base.hh0_dim, k);
  s.brauer = s.central_simple ? power(base.brauer, k, base.degree.value_or(0)) : BrauerDescriptor::unknown();
  s.reduced_degree = s.central_simple ? reduced_from(s.brauer, base.degree) : std::nullopt;
  if (base.is_explicit()) {
    const auto& a = std::get<0>(base.payload);
    std::size_t dim = 1;
    bool small = true;
    for (std::size_t i = 0; i < k && small; ++i) {
      dim *= a.dim();
      small = dim <= kExplicitPowerLimit;
    }
    if (small) {
      s.payload = tensor_power(a, k);
      return s;
    }
  }
  s.payload = SymbolicAlgebra{s.label, s.degree.value_or(1), s.hh0_dim, s.brauer};
  return s;
}

template <class F>
Summand<F> symbolic_pair_member(const std::string& label, std::size_t degree) {
  return make_summand<F>(label, SymbolicAlgebra{label, degree, 1, BrauerDescriptor::unknown()});
}

}  // namespace

template <class F>
Summand<F> base_field_summand(const F& field) {
  return make_summand<F>("k", field_algebra(field));
}

template <class F>
Summand<F> make_summand(std::string label, Payload<F> payload) {
  Summand<F> s{std::move(label), std::move(payload)};
  if (s.payload.index() == 1) {
    const auto& sym = std::get<1>(s.payload);
    if (sym.degree == 0 || sym.hh0_dim == 0)
      throw Error(ErrorKind::InvalidArgument, "symbolic summands need positive degree and HH_0 dimension");
    s.central_simple = sym.hh0_dim == 1;
    s.degree = sym.degree;
    s.hh0_dim = sym.hh0_dim;
    s.brauer = sym.brauer;
    s.reduced_degree = s.central_simple ? reduced_from(s.brauer, s.degree) : std::nullopt;
  } else {
    const auto& a = std::get<0>(s.payload);
    s.hh0_dim = hh0(a).dim;
    s.central_simple = is_central_simple(a);
    if (s.central_simple) {
      s.degree = degree(a);
      s.brauer = descriptor(a);
      s.reduced_degree = reduced_from(s.brauer, s.degree);
    }
  }
  return s;
}

template <class F>
Summand<F> power_summand(const F& field, const Payload<F>& a, std::size_t k) {
  return power_of(field, make_summand<F>(payload_name(a), a), k);
}

namespace {

template <class F>
MotiveExpression<F> ladder(const F& field, const Payload<F>& a, const std::vector<std::size_t>& powers) {
  const Summand<F> base = make_summand<F>(payload_name(a), a);
  MotiveExpression<F> e{field, {}, {}};
  for (std::size_t k : powers) e.summands.push_back(power_of(field, base, k));
  return e;
}

}  // namespace

template <class F>
MotiveExpression<F> severi_brauer_motive(const F& field, std::size_t n, const Payload<F>& a) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const Summand<F> base = make_summand<F>(payload_name(a), a);
  if (!base.central_simple || base.degree != n)
    throw Error(ErrorKind::DegreeMismatch, "need a central simple algebra of degree " + std::to_string(n) + ", got " +
                                               (base.central_simple ? "degree " + std::to_string(*base.degree)
                                                                    : std::string("a non-central-simple algebra")));
  std::vector<std::size_t> powers;
  for (std::size_t i = 0; i < n; ++i) powers.push_back(i);
  return ladder(field, a, powers);
}

template <class F>
MotiveExpression<F> grassmann_motive(const F& field, unsigned m, unsigned n, const Payload<F>& a) {
  std::vector<std::size_t> powers;
  for (const auto& s : grassmann_sequences(m, n)) powers.push_back(static_cast<std::size_t>(s.d - static_cast<int>(m)));
  return ladder(field, a, powers);
}

template <class F>
MotiveExpression<F> quadric_motive(const QuadraticForm<F>& q) {
  const std::size_t n = q.rank();
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "quadric motives need rank >= 3");
  MotiveExpression<F> e{q.field, {}, {}};
  for (std::size_t i = 0; i + 2 < n; ++i) e.summands.push_back(base_field_summand(q.field));
  Algebra<F> c0 = even_clifford(q);
  if (n % 2 == 1) {
    e.summands.push_back(make_summand<F>("C0(q)", std::move(c0)));
    return e;
  }
  try {
    auto [plus, minus] = split_components(c0);
    e.summands.push_back(make_summand<F>("C0+(q)", std::move(plus)));
    e.summands.push_back(make_summand<F>("C0-(q)", std::move(minus)));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::CenterNotSplit) throw;
    const std::size_t deg = std::size_t{1} << ((n - 2) / 2);
    e.summands.push_back(symbolic_pair_member<F>("C0+(q)", deg));
    e.summands.push_back(symbolic_pair_member<F>("C0-(q)", deg));
    e.notes.push_back("center of C0(q) is a quadratic field; C0+(q), C0-(q) are placeholders for its components");
  }
  return e;
}

template <class F>
MotiveExpression<F> form_quadric_motive(const F& field, std::size_t n, const Payload<F>& a, const Payload<F>& c_plus,
                                        const Payload<F>& c_minus) {
  if (n < 6 || n % 2 != 0) throw Error(ErrorKind::InvalidArgument, "n must be even and at least 6");
  MotiveExpression<F> e{field, {}, {}};
  const Summand<F> base = make_summand<F>(payload_name(a), a);
  for (std::size_t i = 2; i + 3 <= n; i += 2) e.summands.push_back(base_field_summand(field));
  for (std::size_t i = 1; i + 3 <= n; i += 2) e.summands.push_back(base);
  e.summands.push_back(make_summand<F>("C0+(A,s)", c_plus));
  e.summands.push_back(make_summand<F>("C0-(A,s)", c_minus));
  e.notes.push_back("the index bounds 0 < i <= n-3 give " + std::to_string(e.summands.size()) +
                    " summands, while the coefficient reduction predicts " + std::to_string(n));
  return e;
}

template <class F>
MotiveExpression<F> toric_motive(const F& field, const Payload<F>& a) {
  MotiveExpression<F> e{field, {make_summand<F>(payload_name(a), a)}, {}};
  e.notes.push_back("U(A) is a direct summand of the motive; the remaining summands are not modelled");
  return e;
}

template <class F>
InvariantTable evaluate(const MotiveExpression<F>& expr, Invariant inv, int degree_lo, int degree_hi) {
  if (degree_lo > degree_hi) throw Error(ErrorKind::InvalidArgument, "empty degree range");
  std::size_t h = 0;
  for (const auto& s : expr.summands) {
    if (s.is_explicit() && !s.central_simple && !is_separable(std::get<0>(s.payload)))
      throw Error(ErrorKind::NotSemisimple, "summand " + s.label + " is not separable; compute it with `homology`");
    h += s.hh0_dim;
  }
  InvariantTable t{inv, {}};
  if (inv == Invariant::HP) {
    t.dims = {{0, h}, {1, 0}};
    return t;
  }
  for (int j = degree_lo; j <= degree_hi; ++j) {
    bool hit = false;
    switch (inv) {
      case Invariant::HH:
      case Invariant::MixedC: hit = j == 0; break;
      case Invariant::HC: hit = j >= 0 && j % 2 == 0; break;
      case Invariant::HN: hit = j <= 0 && j % 2 == 0; break;
      case Invariant::HP: break;
    }
    t.dims[j] = hit ? h : 0;
  }
  return t;
}

template <class F>
Reduction<F> reduce_coefficients(const MotiveExpression<F>& expr, const std::set<std::uint64_t>& inverted) {
  Reduction<F> r{expr, {}};
  for (const auto& s : expr.summands) {
    if (!s.degree) throw Error(ErrorKind::UnknownDegree, "summand " + s.label + " has no known degree");
    for (auto p : prime_factors(*s.degree))
      if (!inverted.count(p)) r.blocking_primes.insert(p);
  }
  if (!r.reduced()) {
    std::string list;
    for (auto p : r.blocking_primes) list += (list.empty() ? "" : ", ") + std::to_string(p);
    r.expr.notes.push_back("not reduced: primes {" + list + "} are not inverted");
    return r;
  }
  for (auto& s : r.expr.summands)
    if (s.central_simple && s.label != "k") s = base_field_summand(expr.field);
  return r;
}

template <class F>
Decision is_trivial_motive(const MotiveExpression<F>& expr) {
  bool unknown = false;
  for (const auto& s : expr.summands) {
    Decision d = s.central_simple ? s.brauer.is_split() : Decision::Unknown;
    if (d == Decision::No) return Decision::No;
    if (d == Decision::Unknown) unknown = true;
  }
  return unknown ? Decision::Unknown : Decision::Yes;
}

#define NCINV_INSTANTIATE(F)                                                                                    \
  template Summand<F> base_field_summand(const F&);                                                             \
  template Summand<F> make_summand(std::string, Payload<F>);                                                    \
  template Summand<F> power_summand(const F&, const Payload<F>&, std::size_t);                                  \
  template MotiveExpression<F> severi_brauer_motive(const F&, std::size_t, const Payload<F>&);                   \
  template MotiveExpression<F> grassmann_motive(const F&, unsigned, unsigned, const Payload<F>&);                \
  template MotiveExpression<F> quadric_motive(const QuadraticForm<F>&);                                         \
  template MotiveExpression<F> form_quadric_motive(const F&, std::size_t, const Payload<F>&, const Payload<F>&, \
                                                   const Payload<F>&);                                          \
  template MotiveExpression<F> toric_motive(const F&, const Payload<F>&);                                       \
  template InvariantTable evaluate(const MotiveExpression<F>&, Invariant, int, int);                            \
  template Reduction<F> reduce_coefficients(const MotiveExpression<F>&, const std::set<std::uint64_t>&);        \
  template Decision is_trivial_motive(const MotiveExpression<F>&);

NCINV_INSTANTIATE(Rationals)
NCINV_INSTANTIATE(PrimeField)

}  // namespace ncinv

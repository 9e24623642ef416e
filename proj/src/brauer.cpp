#include "ncinv/brauer.hpp"

#include <algorithm>

namespace ncinv {

std::string place_name(Place p) { return p == kRealPlace ? "inf" : std::to_string(p); }

BrauerDescriptor BrauerDescriptor::from_ramified(PlaceSet places) {
  if (places.size() % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "a ramification set must have even cardinality");
  for (Place p : places)
    if (p != kRealPlace && !is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime");
  if (places.empty()) return trivial();
  return {BrauerKind::QuaternionOverQ, std::move(places), std::nullopt};
}

Decision BrauerDescriptor::is_split() const {
  switch (kind) {
    case BrauerKind::Trivial:
    case BrauerKind::FiniteField: return Decision::Yes;
    case BrauerKind::QuaternionOverQ: return decide(ramified.empty());
    case BrauerKind::Unknown: return Decision::Unknown;
  }
  return Decision::Unknown;
}

std::string BrauerDescriptor::describe() const {
  switch (kind) {
    case BrauerKind::Trivial: return "trivial";
    case BrauerKind::FiniteField: return "trivial (finite field)";
    case BrauerKind::Unknown: return "unknown";
    case BrauerKind::QuaternionOverQ: break;
  }
  std::string s = "ramified at {";
  bool first = true;
  for (Place p : ramified) {
    s += (first ? "" : ", ") + place_name(p);
    first = false;
  }
  return s + "}";
}

namespace {

// a = p^k u with p not dividing u; returns k.
unsigned long split_off(const mpz_class& a, unsigned long p, mpz_class& u) {
  u = a;
  unsigned long k = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), p)) {
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), p);
    ++k;
  }
  return k;
}

void odd_prime_factors(mpz_class n, PlaceSet& out) {
  n = abs(n);
  mpz_class u;
  split_off(n, 2, u);
  n = u;
  for (unsigned long p = 3; mpz_class(p) * p <= n; p += 2) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.insert(p);
      split_off(n, p, u);
      n = u;
    }
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) throw Error(ErrorKind::InvalidArgument, "prime factor too large");
    out.insert(n.get_ui());
  }
}

// Integer in the same square class as a nonzero rational.
mpz_class integral_representative(const mpq_class& q) { return q.get_num() * q.get_den(); }

int mod_of(const mpz_class& u, unsigned long m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), m);
  return static_cast<int>(r.get_ui());
}

}  // namespace

int hilbert_symbol(const mpz_class& a, const mpz_class& b, Place p) {
  if (a == 0 || b == 0) throw Error(ErrorKind::ZeroParameter, "Hilbert symbol of zero");
  if (p == kRealPlace) return (a < 0 && b < 0) ? -1 : 1;
  mpz_class u, v;
  const unsigned long alpha = split_off(a, p, u);
  const unsigned long beta = split_off(b, p, v);
  if (p == 2) {
    auto eps = [](const mpz_class& x) { return mod_of(x, 4) == 3 ? 1 : 0; };
    auto omega = [](const mpz_class& x) {
      int r = mod_of(x, 8);
      return (r == 3 || r == 5) ? 1 : 0;
    };
    int e = eps(u) * eps(v) + static_cast<int>(alpha % 2) * omega(v) + static_cast<int>(beta % 2) * omega(u);
    return e % 2 ? -1 : 1;
  }
  const mpz_class pz(p);
  int sign = 1;
  if ((alpha * beta) % 2 == 1 && ((p - 1) / 2) % 2 == 1) sign = -sign;
  if (beta % 2 == 1) sign *= mpz_legendre(u.get_mpz_t(), pz.get_mpz_t());
  if (alpha % 2 == 1) sign *= mpz_legendre(v.get_mpz_t(), pz.get_mpz_t());
  return sign;
}

BrauerDescriptor quaternion_descriptor(const mpz_class& a, const mpz_class& b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::ZeroParameter, "quaternion parameters must be nonzero");
  PlaceSet candidates{2, kRealPlace};
  odd_prime_factors(a, candidates);
  odd_prime_factors(b, candidates);
  PlaceSet ramified;
  for (Place p : candidates)
    if (hilbert_symbol(a, b, p) == -1) ramified.insert(p);
  if (ramified.size() % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "reciprocity violated for (" + a.get_str() + ", " + b.get_str() + ")");
  BrauerDescriptor d = ramified.empty() ? BrauerDescriptor::trivial()
                                        : BrauerDescriptor{BrauerKind::QuaternionOverQ, std::move(ramified), std::nullopt};
  d.symbol = std::make_pair(a, b);
  return d;
}

BrauerDescriptor tensor(const BrauerDescriptor& a, const BrauerDescriptor& b) {
  if (a.kind == BrauerKind::Unknown || b.kind == BrauerKind::Unknown) return BrauerDescriptor::unknown();
  const bool ff_a = a.kind == BrauerKind::FiniteField, ff_b = b.kind == BrauerKind::FiniteField;
  if (ff_a || ff_b) {
    if ((ff_a && b.kind == BrauerKind::QuaternionOverQ) || (ff_b && a.kind == BrauerKind::QuaternionOverQ))
      throw Error(ErrorKind::FieldMismatch, "classes over different fields");
    return BrauerDescriptor::finite_field();
  }
  PlaceSet out;
  std::set_symmetric_difference(a.ramified.begin(), a.ramified.end(), b.ramified.begin(), b.ramified.end(),
                                std::inserter(out, out.end()), PlaceOrder{});
  return BrauerDescriptor::from_ramified(std::move(out));
}

BrauerDescriptor power(const BrauerDescriptor& a, std::size_t k, std::size_t degree) {
  switch (a.kind) {
    case BrauerKind::Trivial:
    case BrauerKind::FiniteField: return k == 1 ? a : (a.kind == BrauerKind::FiniteField ? a : BrauerDescriptor::trivial());
    case BrauerKind::QuaternionOverQ:
      if (k % 2 == 0) return BrauerDescriptor::trivial();
      return k == 1 ? a : BrauerDescriptor::from_ramified(a.ramified);
    case BrauerKind::Unknown:
      // the period divides the degree
      if (k == 0 || (degree > 0 && k % degree == 0)) return BrauerDescriptor::trivial();
      return a;
  }
  return BrauerDescriptor::unknown();
}

BrauerDescriptor inverse(const BrauerDescriptor& a) { return a; }

template <class F>
bool is_central_simple(const Algebra<F>& a) {
  if (center(a).dim() != 1) return false;
  const F& f = a.field();
  const std::size_t d = a.dim();
  // x (x) y -> (z -> x z y) as a d^2 x d^2 matrix
  SparseMatrix<F> env(f, d * d, d * d);
  ColumnBuilder<F> col(f);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t z = 0; z < d; ++z)
        for (const auto& s : a.product_terms(i, z))
          for (const auto& t : a.product_terms(s.index, j)) col.add(z * d + t.index, f.mul(s.coeff, t.coeff));
      env.set_column(i * d + j, col.finish());
    }
  return rank(env) == d * d;
}

template <class F>
std::size_t degree(const Algebra<F>& a) {
  if (!is_central_simple(a)) throw Error(ErrorKind::NotCentralSimple, "degree needs a central simple algebra");
  std::size_t r = 1;
  while ((r + 1) * (r + 1) <= a.dim()) ++r;
  if (r * r != a.dim()) throw Error(ErrorKind::NonSquareDim, "dimension " + std::to_string(a.dim()) + " is not a square");
  return r;
}

namespace {

// First vector among the basis and pairwise sums whose square is a nonzero
// multiple of the unit; returns it with that scalar.
std::optional<std::pair<Vector<Rationals>, mpq_class>> anisotropic(const Algebra<Rationals>& a,
                                                                    const std::vector<Vector<Rationals>>& basis) {
  const Rationals& f = a.field();
  std::vector<Vector<Rationals>> candidates = basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Vector<Rationals> s(a.dim());
      for (std::size_t k = 0; k < a.dim(); ++k) s[k] = basis[i][k] + basis[j][k];
      candidates.push_back(std::move(s));
    }
  std::size_t p = 0;
  while (f.is_zero(a.unit()[p])) ++p;
  for (auto& x : candidates) {
    auto sq = a.multiply(x, x);
    mpq_class c = sq[p] / a.unit()[p];
    if (c == 0) continue;
    bool scalar = true;
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (sq[k] != c * a.unit()[k]) scalar = false;
    if (scalar) return std::make_pair(std::move(x), c);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<mpz_class, mpz_class>> recognise_quaternion(const Algebra<Rationals>& a) {
  const Rationals& f = a.field();
  const std::size_t d = a.dim();
  if (d != 4) return std::nullopt;
  Matrix<Rationals> trace(f, 1, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t m = 0; m < d; ++m) trace(0, k) += a.structure_constant(k, m, m);
  const auto pure = kernel(trace);
  if (pure.dim() != 3) return std::nullopt;
  auto u = anisotropic(a, pure.basis());
  if (!u) return std::nullopt;
  // v in the pure part with u v + v u = 0
  Matrix<Rationals> anti(f, d, pure.dim());
  for (std::size_t c = 0; c < pure.dim(); ++c) {
    auto uv = a.multiply(u->first, pure.basis()[c]);
    auto vu = a.multiply(pure.basis()[c], u->first);
    for (std::size_t k = 0; k < d; ++k) anti(k, c) = uv[k] + vu[k];
  }
  std::vector<Vector<Rationals>> vs;
  const auto anti_kernel = kernel(anti);
  for (const auto& coeffs : anti_kernel.basis()) {
    Vector<Rationals> v(d);
    for (std::size_t c = 0; c < pure.dim(); ++c)
      for (std::size_t k = 0; k < d; ++k) v[k] += coeffs[c] * pure.basis()[c][k];
    vs.push_back(std::move(v));
  }
  auto v = anisotropic(a, vs);
  if (!v) return std::nullopt;
  return std::make_pair(integral_representative(u->second), integral_representative(v->second));
}

template <class F>
BrauerDescriptor descriptor(const Algebra<F>& a) {
  if (!is_central_simple(a)) throw Error(ErrorKind::NotCentralSimple, "Brauer class needs a central simple algebra");
  if constexpr (F::kind == FieldKind::PrimeField) {
    return BrauerDescriptor::finite_field();
  } else {
    if (a.dim() == 1) return BrauerDescriptor::trivial();
    if (a.known_class()) {
      BrauerDescriptor d = BrauerDescriptor::trivial();
      for (const auto& s : *a.known_class())
        d = tensor(d, quaternion_descriptor(integral_representative(s.a), integral_representative(s.b)));
      if (a.known_class()->size() == 1) {
        const auto& s = a.known_class()->front();
        d.symbol = std::make_pair(integral_representative(s.a), integral_representative(s.b));
      }
      return d;
    }
    if (auto ab = recognise_quaternion(a)) return quaternion_descriptor(ab->first, ab->second);
    return BrauerDescriptor::unknown();
  }
}

template <class F>
Decision is_split(const Algebra<F>& a) {
  return descriptor(a).is_split();
}

template <class F>
Decision brauer_equal(const Algebra<F>& a, const Algebra<F>& b) {
  require_same_field(a, b);
  return brauer_equal(descriptor(a), descriptor(b));
}

Decision brauer_equal(const BrauerDescriptor& a, const BrauerDescriptor& b) { return tensor(a, inverse(b)).is_split(); }

template <class F>
std::optional<Vector<F>> find_zero_divisor(const Algebra<F>& a, int box) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  std::vector<typename F::Element> values;
  if constexpr (F::kind == FieldKind::PrimeField) {
    for (std::uint32_t r = 0; r < f.modulus(); ++r) values.push_back(r);
  } else {
    for (int v = -box; v <= box; ++v) values.push_back(f.from_int(v));
  }
  double count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= static_cast<double>(values.size());
  if (count > 2e6) throw Error(ErrorKind::InvalidArgument, "zero-divisor search space too large");
  std::vector<std::size_t> digit(d, 0);
  while (true) {
    std::size_t i = 0;
    while (i < d && ++digit[i] == values.size()) digit[i++] = 0;
    if (i == d) return std::nullopt;
    Vector<F> x(d);
    for (std::size_t k = 0; k < d; ++k) x[k] = values[digit[k]];
    if (is_zero_vector(f, x)) continue;
    if (rank(a.left_multiplication(x)) < d) return x;
  }
}

#define NCINV_INSTANTIATE(F)                                               \
  template bool is_central_simple(const Algebra<F>&);                      \
  template std::size_t degree(const Algebra<F>&);                          \
  template BrauerDescriptor descriptor(const Algebra<F>&);                 \
  template Decision is_split(const Algebra<F>&);                           \
  template Decision brauer_equal(const Algebra<F>&, const Algebra<F>&);    \
  template std::optional<Vector<F>> find_zero_divisor(const Algebra<F>&, int);

NCINV_INSTANTIATE(Rationals)
NCINV_INSTANTIATE(PrimeField)

}  // namespace ncinv

#include "ncinv/clifford.hpp"

#include <bit>
#include <functional>

#include "ncinv/hochschild.hpp"

namespace ncinv {

template <class F>
QuadraticForm<F> QuadraticForm<F>::make(const F& field, std::vector<typename F::Element> coeffs) {
  if (field.characteristic() == 2) throw Error(ErrorKind::CharTwo, "quadratic forms need characteristic != 2");
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "quadratic form of rank 0");
  for (const auto& c : coeffs)
    if (field.is_zero(c)) throw Error(ErrorKind::ZeroParameter, "diagonal coefficients must be nonzero");
  return {field, std::move(coeffs)};
}

std::vector<std::vector<std::size_t>> clifford_basis(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> visit = [&](std::size_t next) {
    out.push_back(cur);
    for (std::size_t j = next; j < n; ++j) {
      cur.push_back(j);
      visit(j + 1);
      cur.pop_back();
    }
  };
  visit(0);
  return out;
}

namespace {

using Mask = std::uint64_t;

Mask mask_of(const std::vector<std::size_t>& s) {
  Mask m = 0;
  for (auto i : s) m |= Mask{1} << i;
  return m;
}

// Sign of e_S e_T: one transposition for each pair s in S, t in T with s > t.
int swap_parity(Mask s, Mask t) {
  int count = 0;
  for (Mask rest = t; rest; rest &= rest - 1) {
    Mask lowest = rest & (~rest + 1);
    count += std::popcount(s & ~(lowest | (lowest - 1)));
  }
  return count % 2;
}

template <class F>
Algebra<F> clifford_on(const QuadraticForm<F>& q, bool even_only) {
  const F& f = q.field;
  const std::size_t n = q.rank();
  if (n > 20) throw Error(ErrorKind::InvalidArgument, "Clifford algebra of rank " + std::to_string(n) + " is too large");
  std::vector<Mask> basis;
  std::vector<std::string> labels;
  for (const auto& s : clifford_basis(n)) {
    if (even_only && s.size() % 2 != 0) continue;
    basis.push_back(mask_of(s));
    std::string label = s.empty() ? "1" : "";
    for (auto i : s) label += "e" + std::to_string(i + 1);
    labels.push_back(label);
  }
  const std::size_t d = basis.size();
  check_budget(d * d, "Clifford algebra multiplication table");
  std::vector<std::size_t> position(Mask{1} << n, 0);
  for (std::size_t i = 0; i < d; ++i) position[basis[i]] = i;
  std::vector<typename F::Element> c(d * d * d, f.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coeff = swap_parity(basis[i], basis[j]) ? f.neg(f.one()) : f.one();
      const Mask common = basis[i] & basis[j];
      for (std::size_t k = 0; k < n; ++k)
        if (common >> k & 1) coeff = f.mul(coeff, q.coeffs[k]);
      c[(i * d + j) * d + position[basis[i] ^ basis[j]]] = coeff;
    }
  KnownClass<F> known;
  const auto& a = q.coeffs;
  if (!even_only && n == 2) known = std::vector<QuaternionSymbol<F>>{{a[0], a[1]}};
  if (even_only && n == 3) known = std::vector<QuaternionSymbol<F>>{{f.neg(f.mul(a[0], a[1])), f.neg(f.mul(a[0], a[2]))}};
  if (even_only && n == 1) known = std::vector<QuaternionSymbol<F>>{};
  return Algebra<F>(f, d, std::move(c), unit_vector(f, d, 0), std::move(labels), std::move(known));
}

}  // namespace

template <class F>
Algebra<F> full_clifford(const QuadraticForm<F>& q) {
  return clifford_on(q, false);
}

template <class F>
Algebra<F> even_clifford(const QuadraticForm<F>& q) {
  return clifford_on(q, true);
}

template <class F>
std::pair<Algebra<F>, Algebra<F>> split_components(const Algebra<F>& a) {
  const F& f = a.field();
  const std::size_t d = a.dim();
  if (f.characteristic() == 2) throw Error(ErrorKind::CharTwo, "idempotent formula divides by 2");
  const Subspace<F> z = center(a);
  if (z.dim() != 2) throw Error(ErrorKind::CenterNotTwoDim, "center has dimension " + std::to_string(z.dim()));
  const Vector<F>& one = a.unit();
  std::size_t p = 0;
  while (f.is_zero(one[p])) ++p;
  // A central element with zero p-coordinate, hence not a multiple of 1.
  Vector<F> x;
  for (const auto& v : z.basis()) {
    Vector<F> w = v;
    auto c = f.mul(v[p], f.inv(one[p]));
    for (std::size_t i = 0; i < d; ++i) f.sub_mul(w[i], c, one[i]);
    if (!is_zero_vector(f, w)) {
      x = std::move(w);
      break;
    }
  }
  // x^2 = alpha + beta x
  const Vector<F> x2 = a.multiply(x, x);
  const auto alpha = f.mul(x2[p], f.inv(one[p]));
  std::size_t r = 0;
  while (f.is_zero(x[r])) ++r;
  auto beta = x2[r];
  f.sub_mul(beta, alpha, one[r]);
  beta = f.mul(beta, f.inv(x[r]));
  const auto half = f.inv(f.from_int(2));
  // w = x - beta/2 satisfies w^2 = delta = alpha + beta^2/4
  Vector<F> w = x;
  for (std::size_t i = 0; i < d; ++i) f.sub_mul(w[i], f.mul(beta, half), one[i]);
  auto delta = alpha;
  f.add_mul(delta, f.mul(beta, half), f.mul(beta, half));
  if (f.is_zero(delta)) throw Error(ErrorKind::CenterNotSplit, "center is not reduced");
  auto s = square_root(f, delta);
  if (!s) throw Error(ErrorKind::CenterNotSplit, "center is a quadratic field: " + f.to_string(delta) + " is not a square");
  // e = (1 + w/s)/2
  Vector<F> e(d, f.zero());
  const auto ws = f.mul(half, f.inv(*s));
  for (std::size_t i = 0; i < d; ++i) e[i] = f.add(f.mul(half, one[i]), f.mul(ws, w[i]));
  Vector<F> e_bar(d, f.zero());
  for (std::size_t i = 0; i < d; ++i) e_bar[i] = f.sub(one[i], e[i]);
  if (a.multiply(e, e) != e) throw Error(ErrorKind::CenterNotSplit, "idempotent check failed");
  auto corner = [&](const Vector<F>& idem) {
    std::vector<Vector<F>> span;
    for (std::size_t i = 0; i < d; ++i) span.push_back(a.multiply(a.multiply(idem, unit_vector(f, d, i)), idem));
    return restrict_to(a, Subspace<F>::span(f, d, span), idem);
  };
  return {corner(e), corner(e_bar)};
}

#define NCINV_INSTANTIATE(F)                                 \
  template struct QuadraticForm<F>;                          \
  template Algebra<F> full_clifford(const QuadraticForm<F>&); \
  template Algebra<F> even_clifford(const QuadraticForm<F>&); \
  template std::pair<Algebra<F>, Algebra<F>> split_components(const Algebra<F>&);

NCINV_INSTANTIATE(Rationals)
NCINV_INSTANTIATE(PrimeField)

}  // namespace ncinv

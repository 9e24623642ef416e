#pragma once

// Formal direct sums of noncommutative motives U(A_1) + ... + U(A_n) for
// the twisted homogeneous families, and their evaluation under additive
// invariants: every separable summand contributes HH(k) (x) HH_0(A_i).

#include <map>
#include <set>
#include <variant>

#include "ncinv/brauer.hpp"
#include "ncinv/clifford.hpp"

namespace ncinv {

/// A summand known only through declared data.
struct SymbolicAlgebra {
  std::string name;
  std::size_t degree = 1;
  std::size_t hh0_dim = 1;
  BrauerDescriptor brauer;
};

template <class F>
using Payload = std::variant<Algebra<F>, SymbolicAlgebra>;

template <class F>
struct Summand {
  Summand(std::string label_, Payload<F> payload_) : label(std::move(label_)), payload(std::move(payload_)) {}

  std::string label;
  Payload<F> payload;
  bool central_simple = false;
  /// Degree of the algebra as built (d^i for a tensor power A^i).
  std::optional<std::size_t> degree;
  /// Degree of a Morita-equivalent algebra: 1 for a trivial class, else the
  /// degree of the base algebra.
  std::optional<std::size_t> reduced_degree;
  std::size_t hh0_dim = 1;
  BrauerDescriptor brauer;

  bool is_explicit() const { return payload.index() == 0; }
};

template <class F>
Summand<F> base_field_summand(const F& field);
/// Explicit summands are analysed here (center, degree, class, HH_0).
template <class F>
Summand<F> make_summand(std::string label, Payload<F> payload);

template <class F>
struct MotiveExpression {
  F field;
  std::vector<Summand<F>> summands;
  /// Remarks surfaced to the user, e.g. count discrepancies.
  std::vector<std::string> notes;
};

/// Tensor powers are built explicitly up to this dimension; beyond it the
/// summand becomes symbolic with data derived from A.
constexpr std::size_t kExplicitPowerLimit = 64;

/// Summand for A^{tensor k}; k = 0 gives k.
template <class F>
Summand<F> power_summand(const F& field, const Payload<F>& a, std::size_t k);

/// [k, A, ..., A^{n-1}]; DegreeMismatch unless A is central simple of degree n.
template <class F>
MotiveExpression<F> severi_brauer_motive(const F& field, std::size_t n, const Payload<F>& a);

/// One summand A^{d(alpha) - m} per Grassmann sequence; the shift by m makes
/// m = 1 reproduce the Severi-Brauer ladder.
template <class F>
MotiveExpression<F> grassmann_motive(const F& field, unsigned m, unsigned n, const Payload<F>& a);

/// n-2 copies of k plus C_0(q) (n odd) or its two simple components (n even;
/// a symbolic pair when the center does not split over k). InvalidArgument
/// for rank < 3.
template <class F>
MotiveExpression<F> quadric_motive(const QuadraticForm<F>& q);

/// k for even 0 < i <= n-3, A for odd 0 < i <= n-3, then C+ and C-.
template <class F>
MotiveExpression<F> form_quadric_motive(const F& field, std::size_t n, const Payload<F>& a,
                                        const Payload<F>& c_plus, const Payload<F>& c_minus);

/// U(A) as a direct summand of the motive of the toric variety.
template <class F>
MotiveExpression<F> toric_motive(const F& field, const Payload<F>& a);

enum class Invariant { HH, HC, HP, HN, MixedC };
std::string_view to_string(Invariant inv);
Invariant parse_invariant(std::string_view text);

struct InvariantTable {
  Invariant invariant;
  /// degree -> dimension; for HP the keys are the classes 0 (even), 1 (odd).
  std::map<int, std::size_t> dims;
};

/// NotSemisimple if an explicit summand fails the separability test.
template <class F>
InvariantTable evaluate(const MotiveExpression<F>& expr, Invariant inv, int degree_lo, int degree_hi);

template <class F>
struct Reduction {
  MotiveExpression<F> expr;
  /// Primes dividing some summand degree that were not inverted.
  std::set<std::uint64_t> blocking_primes;
  bool reduced() const { return blocking_primes.empty(); }
};

/// Replaces every central simple summand by k when all primes of all
/// degrees are inverted. UnknownDegree if a summand has no degree.
template <class F>
Reduction<F> reduce_coefficients(const MotiveExpression<F>& expr, const std::set<std::uint64_t>& inverted);

template <class F>
Decision is_trivial_motive(const MotiveExpression<F>& expr);

std::set<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace ncinv

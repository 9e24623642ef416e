#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ncinv/error.hpp"

namespace ncinv {

enum class FieldKind { Rationals, PrimeField };

// Field classes carry the arithmetic; elements are plain values. Every
// algorithm in the library is a template over one of these two.

/// The rational numbers with arbitrary-precision elements kept in lowest
/// terms with positive denominator.
class Rationals {
 public:
  using Element = mpq_class;
  static constexpr FieldKind kind = FieldKind::Rationals;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const;
  Element from_integer(const mpz_class& v) const { return Element(v); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  /// acc -= c * x
  void sub_mul(Element& acc, const Element& c, const Element& x) const { acc -= c * x; }
  void add_mul(Element& acc, const Element& c, const Element& x) const { acc += c * x; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  unsigned long characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view text) const;

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Residues modulo a prime p < 2^31, stored in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr FieldKind kind = FieldKind::PrimeField;

  /// Throws InvalidArgument unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const;
  Element from_integer(const mpz_class& v) const;
  Element from_fraction(const mpz_class& num, const mpz_class& den) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  void sub_mul(Element& acc, Element c, Element x) const { acc = sub(acc, mul(c, x)); }
  void add_mul(Element& acc, Element c, Element x) const { acc = add(acc, mul(c, x)); }

  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  unsigned long characteristic() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }
  std::string to_string(Element a) const { return std::to_string(a); }
  Element parse(std::string_view text) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Square roots in the field, if any. Of the two roots, the rational one with
/// positive sign and the residue below p/2 are returned.
std::optional<Rationals::Element> square_root(const Rationals& f, const Rationals::Element& x);
std::optional<PrimeField::Element> square_root(const PrimeField& f, PrimeField::Element x);

/// Runtime description of a field, used at the I/O boundary.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) { return {FieldKind::PrimeField, p}; }
  /// Accepts "Q", "F7", "Fp7" or "Fp:7".
  static FieldSpec parse(std::string_view text);
  std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline FieldSpec spec_of(const Rationals&) { return FieldSpec::rationals(); }
inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::prime(f.modulus()); }

/// Calls fn with the concrete field object described by spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldKind::Rationals) return fn(Rationals{});
  return fn(PrimeField(spec.p));
}

}  // namespace ncinv

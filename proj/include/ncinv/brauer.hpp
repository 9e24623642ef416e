#pragma once

// Brauer classes of central simple algebras over Q and F_p, as far as they
// can be decided exactly: over F_p every class is trivial; over Q the
// classes reachable from quaternion symbols are determined by their
// ramified places (Hilbert symbols).

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>

#include "ncinv/algebra.hpp"

namespace ncinv {

/// A place of Q: a prime, or 0 for the real place.
using Place = std::uint64_t;
constexpr Place kRealPlace = 0;

/// Primes ascending, the real place last.
struct PlaceOrder {
  bool operator()(Place a, Place b) const {
    if (a == b) return false;
    if (a == kRealPlace) return false;
    if (b == kRealPlace) return true;
    return a < b;
  }
};
using PlaceSet = std::set<Place, PlaceOrder>;

std::string place_name(Place p);

enum class BrauerKind { Trivial, QuaternionOverQ, FiniteField, Unknown };

struct BrauerDescriptor {
  BrauerKind kind = BrauerKind::Unknown;
  /// For QuaternionOverQ: places where the class has invariant 1/2. A
  /// product of quaternion classes stays in this kind; the set is the
  /// symmetric difference.
  PlaceSet ramified;
  /// The symbol (a, b) when the class came from a single one.
  std::optional<std::pair<mpz_class, mpz_class>> symbol;

  static BrauerDescriptor trivial() { return {BrauerKind::Trivial, {}, std::nullopt}; }
  static BrauerDescriptor finite_field() { return {BrauerKind::FiniteField, {}, std::nullopt}; }
  static BrauerDescriptor unknown() { return {}; }
  /// From a ramification set, e.g. read from JSON. Checks even cardinality.
  static BrauerDescriptor from_ramified(PlaceSet places);

  Decision is_split() const;
  std::string describe() const;
  friend bool operator==(const BrauerDescriptor& a, const BrauerDescriptor& b) {
    return a.kind == b.kind && a.ramified == b.ramified;
  }
};

/// (a, b)_p for nonzero integers; p = kRealPlace for the real place.
int hilbert_symbol(const mpz_class& a, const mpz_class& b, Place p);

/// Ramified places of the quaternion algebra (a, b) over Q.
BrauerDescriptor quaternion_descriptor(const mpz_class& a, const mpz_class& b);

/// Class of A tensor B.
BrauerDescriptor tensor(const BrauerDescriptor& a, const BrauerDescriptor& b);
/// Class of A^{tensor k} for A of the given degree.
BrauerDescriptor power(const BrauerDescriptor& a, std::size_t k, std::size_t degree);
/// The opposite class. Quaternion classes are 2-torsion.
BrauerDescriptor inverse(const BrauerDescriptor& a);

template <class F>
bool is_central_simple(const Algebra<F>& a);

/// Integer square root of dim A; NotCentralSimple, NonSquareDim.
template <class F>
std::size_t degree(const Algebra<F>& a);

/// Class of a central simple algebra. Over Q this uses the recorded
/// quaternion decomposition when the algebra was built from quaternion and
/// matrix constructors, otherwise an explicit quaternion basis search for
/// dimension 4; anything else is Unknown. NotCentralSimple.
template <class F>
BrauerDescriptor descriptor(const Algebra<F>& a);

template <class F>
Decision is_split(const Algebra<F>& a);

/// [A] = [B] decided through the class of A tensor B^op. FieldMismatch,
/// NotCentralSimple.
template <class F>
Decision brauer_equal(const Algebra<F>& a, const Algebra<F>& b);
Decision brauer_equal(const BrauerDescriptor& a, const BrauerDescriptor& b);

/// A nonzero x with x*y = 0 for some nonzero y, searched over coordinate
/// vectors with entries in [-box, box] (Q) or all residues (F_p, box ignored).
template <class F>
std::optional<Vector<F>> find_zero_divisor(const Algebra<F>& a, int box = 1);

/// Integers (a, b) with A isomorphic to the quaternion algebra (a, b), for a
/// four-dimensional central simple algebra over Q.
std::optional<std::pair<mpz_class, mpz_class>> recognise_quaternion(const Algebra<Rationals>& a);

}  // namespace ncinv

#pragma once

// Finite-dimensional associative unital algebras given by structure
// constants: e_i * e_j = sum_k c[i][j][k] e_k.

#include <optional>
#include <string>
#include <vector>

#include "ncinv/linalg.hpp"

namespace ncinv {

/// A quaternion symbol (a, b): the algebra with i^2 = a, j^2 = b, ij = -ji.
template <class F>
struct QuaternionSymbol {
  typename F::Element a;
  typename F::Element b;
};

/// Known Brauer-class decomposition "M_n tensor (a1,b1) tensor ... ", recorded
/// by constructors that know it. An empty list means a split (matrix) algebra.
template <class F>
using KnownClass = std::optional<std::vector<QuaternionSymbol<F>>>;

template <class F>
class Algebra {
 public:
  using Element = typename F::Element;
  struct Term {
    std::size_t index;
    Element coeff;
  };

  /// structure[(i * dim + j) * dim + k] = c[i][j][k]. Associativity and the
  /// unit laws are checked here; violations throw InvalidAlgebra.
  Algebra(F field, std::size_t dim, std::vector<Element> structure, Vector<F> unit,
          std::vector<std::string> labels = {}, KnownClass<F> known_class = std::nullopt);

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector<F>& unit() const { return unit_; }
  const Element& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Element>& structure() const { return structure_; }
  /// Nonzero terms of e_i * e_j.
  const std::vector<Term>& product_terms(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const KnownClass<F>& known_class() const { return known_class_; }

  Vector<F> multiply(const Vector<F>& x, const Vector<F>& y) const;
  /// x * e_j as a coordinate vector.
  Vector<F> multiply_basis_right(const Vector<F>& x, std::size_t j) const;
  /// Matrix of left multiplication z -> x z.
  Matrix<F> left_multiplication(const Vector<F>& x) const;

 private:
  void validate() const;

  F field_;
  std::size_t dim_;
  std::vector<Element> structure_;
  Vector<F> unit_;
  std::vector<std::string> labels_;
  KnownClass<F> known_class_;
  std::vector<std::vector<Term>> table_;
};

/// The base field as a one-dimensional algebra.
template <class F>
Algebra<F> field_algebra(const F& field);

/// n x n matrix units e_ij (index i * n + j), e_ij e_kl = delta_jk e_il.
template <class F>
Algebra<F> mat_algebra(std::size_t n, const F& field);

/// Basis {1, i, j, ij}; throws CharTwo or ZeroParameter.
template <class F>
Algebra<F> quaternion(const typename F::Element& a, const typename F::Element& b, const F& field);

/// k[x]/(x^2), basis {1, x}.
template <class F>
Algebra<F> dual_numbers(const F& field);

/// Direct product A x B (block structure constants).
template <class F>
Algebra<F> product(const Algebra<F>& a, const Algebra<F>& b);

/// A tensor B with basis index i * dim(B) + j.
template <class F>
Algebra<F> tensor(const Algebra<F>& a, const Algebra<F>& b);

/// A^{tensor n}; the zeroth power is the base field.
template <class F>
Algebra<F> tensor_power(const Algebra<F>& a, std::size_t n);

template <class F>
Algebra<F> opposite(const Algebra<F>& a);

/// The subalgebra-with-its-own-unit spanned by an echelon basis. Used for
/// corners eAe; the caller guarantees closure under multiplication.
template <class F>
Algebra<F> restrict_to(const Algebra<F>& a, const Subspace<F>& subspace, const Vector<F>& unit);

template <class F>
Subspace<F> commutator_subspace(const Algebra<F>& a);

template <class F>
struct HH0 {
  std::size_t dim;
  /// Basis vectors whose classes form a basis of A/[A,A] (canonical choice:
  /// the standard vectors at the non-pivot columns of [A,A]).
  std::vector<Vector<F>> coset_basis;
  /// dim x dim(A) matrix sending a coordinate vector to its class.
  Matrix<F> class_map;
};

template <class F>
HH0<F> hh0(const Algebra<F>& a);

template <class F>
Subspace<F> center(const Algebra<F>& a);

/// Trace-form test: T(x, y) = trace(L_x L_y) nondegenerate. Requires
/// characteristic 0 or p > dim(A) (UnsupportedCharacteristic otherwise).
/// Over Q and prime fields (perfect) this coincides with separability.
template <class F>
bool is_semisimple(const Algebra<F>& a);

/// Whether A has a separability idempotent: e in A (x) A with m(e) = 1 and
/// x e = e x for all x. A linear system in dim(A)^2 unknowns, valid in every
/// characteristic.
template <class F>
bool is_separable(const Algebra<F>& a);

template <class F>
void require_same_field(const Algebra<F>& a, const Algebra<F>& b);

}  // namespace ncinv

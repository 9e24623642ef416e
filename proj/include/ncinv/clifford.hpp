#pragma once

// Clifford algebras of diagonal quadratic forms <a_1, ..., a_n>.
//
// The basis of the full algebra is e_S for subsets S of {1..n}, listed in
// lexicographic order of the sorted index tuples: (), (1), (1,2), (1,2,3),
// (1,3), (2), ... Products follow e_i e_j = -e_j e_i (i != j), e_i^2 = a_i.

#include <utility>

#include "ncinv/algebra.hpp"

namespace ncinv {

template <class F>
struct QuadraticForm {
  F field;
  std::vector<typename F::Element> coeffs;

  /// CharTwo / ZeroParameter on invalid input.
  static QuadraticForm make(const F& field, std::vector<typename F::Element> coeffs);
  std::size_t rank() const { return coeffs.size(); }
};

/// Subsets of {0..n-1} (as sorted vectors) in the basis order above.
std::vector<std::vector<std::size_t>> clifford_basis(std::size_t n);

template <class F>
Algebra<F> full_clifford(const QuadraticForm<F>& q);

/// Span of the even subsets, in the full algebra's order restricted to them.
template <class F>
Algebra<F> even_clifford(const QuadraticForm<F>& q);

/// Splits an algebra with two-dimensional split center into eAe and
/// (1-e)A(1-e) for the nontrivial central idempotent e. CenterNotTwoDim,
/// CenterNotSplit (the center is a field or not reduced), CharTwo.
template <class F>
std::pair<Algebra<F>, Algebra<F>> split_components(const Algebra<F>& a);

}  // namespace ncinv

#pragma once

// Hochschild complex of an algebra (non-normalized, C_j = A^{tensor j+1}),
// the cyclic operator, Connes' B, the cyclic bicomplex CC and its
// column-truncated periodic / negative variants.
//
// A basis tensor e_{i0} (x) ... (x) e_{ij} has index sum_s i_s d^{j-s}, so the
// leftmost factor is the most significant digit.

#include <optional>
#include <vector>

#include "ncinv/algebra.hpp"

namespace ncinv {

constexpr std::size_t kDefaultSizeBudget = 200000;

/// Largest vector-space dimension a single degree may have. Resolved from
/// set_size_budget(), then the NCINV_SIZE_BUDGET environment variable, then
/// the default.
std::size_t size_budget();
/// 0 clears the override.
void set_size_budget(std::size_t budget);
void check_budget(std::size_t dim, const std::string& what);

template <class F>
struct ChainComplex {
  F field;
  /// dims[j] = dim C_j for j = 0..N.
  std::vector<std::size_t> dims;
  /// differentials[j] : C_j -> C_{j-1}; differentials[0] is the 0 x dims[0] map.
  std::vector<SparseMatrix<F>> differentials;

  std::size_t top() const { return dims.size() - 1; }
  bool squares_to_zero() const;
};

struct HomologyDims {
  /// H_j for j < N.
  std::vector<std::size_t> dims;
  /// dim ker d_N: an upper bound for H_N, since d_{N+1} is not built.
  std::size_t top_degree = 0;
  std::size_t top_bound = 0;
};

template <class F>
HomologyDims homology_dims(const ChainComplex<F>& c);

/// b : C_j -> C_{j-1}.
template <class F>
SparseMatrix<F> hochschild_differential(const Algebra<F>& a, std::size_t j);

/// b' (faces only, no wrap-around term) : C_j -> C_{j-1}.
template <class F>
SparseMatrix<F> bar_differential(const Algebra<F>& a, std::size_t j);

template <class F>
ChainComplex<F> hochschild_complex(const Algebra<F>& a, std::size_t n);

/// t(a0 (x) ... (x) aj) = (-1)^j aj (x) a0 (x) ... (x) a_{j-1} on C_j.
template <class F>
SparseMatrix<F> cyclic_operator(const Algebra<F>& a, std::size_t j);

/// N = 1 + t + ... + t^j on C_j.
template <class F>
SparseMatrix<F> norm_operator(const Algebra<F>& a, std::size_t j);

/// s(x) = 1 (x) x : C_j -> C_{j+1}.
template <class F>
SparseMatrix<F> extra_degeneracy(const Algebra<F>& a, std::size_t j);

template <class F>
struct MixedComplex {
  ChainComplex<F> hochschild;
  /// connes[j] = B : C_j -> C_{j+1} for j = 0..N-1.
  std::vector<SparseMatrix<F>> connes;

  bool b_squared_zero() const { return hochschild.squares_to_zero(); }
  bool B_squared_zero() const;
  bool anticommute() const;
};

/// B = (1 - t) s N.
template <class F>
MixedComplex<F> mixed_complex(const Algebra<F>& a, std::size_t n);

/// Rectangle [col_lo, col_hi] x [0, max_row] of the periodic cyclic
/// bicomplex. Even columns carry b, odd columns -b'; the horizontal map out of
/// an odd column is 1 - t and out of an even column is N. Tot_n is the sum
/// over columns p of C_{n-p}, ordered by increasing p.
template <class F>
class CyclicBicomplex {
 public:
  CyclicBicomplex(const Algebra<F>& a, int col_lo, int col_hi, std::size_t max_row);

  int col_lo() const { return lo_; }
  int col_hi() const { return hi_; }
  std::size_t max_row() const { return max_row_; }

  /// Columns p with a nonzero summand in total degree n.
  std::vector<int> columns_in_degree(int n) const;
  std::size_t total_dim(int n) const;
  /// D : Tot_n -> Tot_{n-1}.
  SparseMatrix<F> total_differential(int n) const;
  /// Requires n + 1 - col_lo <= max_row so that D_{n+1} is fully built.
  std::size_t total_homology(int n) const;

  /// Vertical and horizontal pieces at (p, q), for tests of the bicomplex laws.
  const SparseMatrix<F>& b(std::size_t q) const { return b_[q]; }
  const SparseMatrix<F>& b_prime(std::size_t q) const { return bprime_[q]; }
  const SparseMatrix<F>& one_minus_t(std::size_t q) const { return one_minus_t_[q]; }
  const SparseMatrix<F>& norm(std::size_t q) const { return norm_[q]; }

 private:
  F field_;
  int lo_, hi_;
  std::size_t max_row_;
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix<F>> b_, bprime_, one_minus_t_, norm_;
};

/// HC_j for j = 0..N-2, from the first-quadrant bicomplex on columns
/// 0..N-1 with rows up to N-1.
template <class F>
std::vector<std::size_t> cyclic_homology_dims(const Algebra<F>& a, std::size_t n);

struct PeriodicityCheck {
  std::size_t hc_j;
  std::size_t hc_j_plus_2;
  /// Rank of the map S : HC_{j+2} -> HC_j induced by dropping columns 0, 1.
  std::size_t induced_rank;
  bool isomorphism() const { return hc_j == hc_j_plus_2 && induced_rank == hc_j; }
};

template <class F>
PeriodicityCheck connes_periodicity(const Algebra<F>& a, std::size_t j);

struct PeriodicNegative {
  std::size_t hp_even = 0;
  std::size_t hp_odd = 0;
  int hn_lo = 0;
  /// hn[i] = HN_{hn_lo + i}.
  std::vector<std::size_t> hn;
  std::size_t depth = 0;
  /// True when the values are images of the depth + 2 truncation rather than
  /// homology of the depth truncation itself (non-separable input).
  bool tower_image = false;
};

/// HP (classes of degree 0 and -1) and HN_n for -N <= n <= hn_top from the
/// truncation of the periodic bicomplex to columns >= -depth. The truncation
/// agrees with the untruncated answer in degrees >= 1 - depth when the
/// column homology is concentrated in row 0, so depth is raised to N + 1 if
/// needed. For non-separable algebras the truncations compute HC rather than
/// the inverse limit, so each value is the rank of the map from the depth + 2
/// truncation. Results at depth and depth + 1 must agree, else Unstable.
template <class F>
PeriodicNegative periodic_and_negative_dims(const Algebra<F>& a, std::size_t n, std::size_t depth, int hn_top = 1);

/// The chain map f_j(a0 (x) ... (x) aj) = 1 (x) ... (x) 1 (x) class(a0 a1 ... aj)
/// from the Hochschild complex of A into HH(k) (x) A/[A,A].
template <class F>
struct ComparisonMap {
  ChainComplex<F> source;
  ChainComplex<F> target;
  /// maps[j] : C_j(A) -> C_j(k) (x) HH_0(A), j = 0..N.
  std::vector<SparseMatrix<F>> maps;
  /// Ranks of the induced maps H_j(A) -> H_j(target), j < N.
  std::vector<std::size_t> induced_ranks;
  HomologyDims source_homology;
  HomologyDims target_homology;

  bool is_chain_map() const;
  bool is_quasi_isomorphism() const;
};

template <class F>
ComparisonMap<F> comparison_map(const Algebra<F>& a, std::size_t n);

/// Rank of the map H_j(X) -> H_j(Y) induced by f : X_j -> Y_j, given the
/// outgoing differential of X and the incoming differential of Y.
template <class F>
std::size_t induced_rank(const SparseMatrix<F>& f, const SparseMatrix<F>& d_out_source,
                         const SparseMatrix<F>& d_in_target);

}  // namespace ncinv

#pragma once

// Weyl groups of split root systems, parabolic subgroups and the Grassmann
// sequence enumerator. Node numbering is Bourbaki's throughout:
//   A_r  1-2-...-r
//   B_r  1-2-...-(r-1)=>r        C_r  1-2-...-(r-1)<=r
//   D_r  1-2-...-(r-2) with (r-2)-(r-1) and (r-2)-r
//   E_r  1-3-4-5-...-r with 2-4
//   F_4  1-2=>3-4                G_2  1≡>2

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ncinv {

enum class Family { A, B, C, D, E, F, G };

struct RootDatum {
  Family family;
  unsigned rank;

  /// Validates the family/rank pair (InvalidRank). family is "A".."G" or
  /// "E6", "E7", "E8", "F4", "G2".
  static RootDatum make(std::string_view family, unsigned rank);
  std::string name() const;
};

struct DynkinEdge {
  unsigned u, v;  // 1-based, u < v
  unsigned bonds;
};

std::vector<DynkinEdge> dynkin_edges(const RootDatum& rd);

mpz_class weyl_order(const RootDatum& rd);

struct ParabolicSpec {
  RootDatum datum;
  /// Sorted, 1-based simple roots kept in the Levi.
  std::vector<unsigned> retained;

  /// InvalidNodes for out-of-range or repeated nodes.
  static ParabolicSpec retain(const RootDatum& rd, std::vector<unsigned> nodes);
  static ParabolicSpec remove(const RootDatum& rd, const std::vector<unsigned>& removed);
};

/// Types of the connected components of the retained sub-diagram, e.g.
/// {"A2", "A1"}, in order of their smallest node.
std::vector<std::string> parabolic_components(const ParabolicSpec& p);
mpz_class parabolic_order(const ParabolicSpec& p);
/// [W : W_P]; NonDivisible if the division is not exact.
mpz_class weyl_index(const ParabolicSpec& p);

struct GrassmannSequence {
  unsigned m, n;
  std::vector<int> alpha;
  int d;
};

/// Tuples alpha with beta_i = alpha_i - i strictly decreasing and
/// beta_i in [-m+1, n-m] (C(n, m) of them). With strict = true the upper bound
/// is n-m-1, which gives only C(n-1, m). Ordered lexicographically by alpha.
std::vector<GrassmannSequence> grassmann_sequences(unsigned m, unsigned n, bool strict = false);

mpz_class binomial(unsigned n, unsigned k);

}  // namespace ncinv

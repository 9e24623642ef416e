#include "ncinv/weyl.hpp"

#include <algorithm>
#include <functional>

#include "ncinv/error.hpp"

namespace ncinv {

namespace {

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class two_power(unsigned n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

// Order of an irreducible component recognised from its shape.
struct ComponentType {
  std::string name;
  mpz_class order;
};

ComponentType classify(const std::vector<unsigned>& nodes, const std::vector<DynkinEdge>& edges) {
  const unsigned n = static_cast<unsigned>(nodes.size());
  auto rd = [](std::string_view fam, unsigned r) { return RootDatum::make(fam, r); };
  auto named = [](const RootDatum& d) { return ComponentType{d.name(), weyl_order(d)}; };
  std::vector<unsigned> degree_of(*std::max_element(nodes.begin(), nodes.end()) + 1, 0);
  unsigned max_bond = 1;
  const DynkinEdge* multiple = nullptr;
  for (const auto& e : edges) {
    ++degree_of[e.u];
    ++degree_of[e.v];
    if (e.bonds > 1) multiple = &e;
    max_bond = std::max(max_bond, e.bonds);
  }
  if (n == 1) return named(rd("A", 1));
  if (max_bond == 3) return named(rd("G", 2));
  if (max_bond == 2) {
    if (n == 4 && degree_of[multiple->u] == 2 && degree_of[multiple->v] == 2) return named(rd("F", 4));
    return named(rd("B", n));
  }
  for (unsigned branch : nodes) {
    if (degree_of[branch] != 3) continue;
    // arm lengths from the branch node
    std::vector<unsigned> arms;
    for (const auto& e : edges) {
      if (e.u != branch && e.v != branch) continue;
      unsigned prev = branch, cur = e.u == branch ? e.v : e.u, len = 1;
      for (bool moved = true; moved;) {
        moved = false;
        for (const auto& f : edges) {
          unsigned next = f.u == cur ? f.v : f.v == cur ? f.u : 0;
          if (next != 0 && next != prev) {
            prev = cur;
            cur = next;
            ++len;
            moved = true;
            break;
          }
        }
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return named(rd("D", n));
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return named(rd("E", n));
    throw Error(ErrorKind::NonDivisible, "sub-diagram is not of finite type");
  }
  return named(rd("A", n));
}

}  // namespace

RootDatum RootDatum::make(std::string_view family, unsigned rank) {
  auto bad = [&] {
    return Error(ErrorKind::InvalidRank, "no root system " + std::string(family) + " of rank " + std::to_string(rank));
  };
  if (family.size() == 2 && family[1] >= '0' && family[1] <= '9') {
    unsigned fixed = static_cast<unsigned>(family[1] - '0');
    if (rank != 0 && rank != fixed) throw bad();
    rank = fixed;
    family = family.substr(0, 1);
  }
  if (family.size() != 1) throw Error(ErrorKind::InvalidRank, "unknown family '" + std::string(family) + "'");
  switch (family[0]) {
    case 'A': if (rank >= 1) return {Family::A, rank}; break;
    case 'B': if (rank >= 1) return {Family::B, rank}; break;
    case 'C': if (rank >= 1) return {Family::C, rank}; break;
    case 'D': if (rank >= 2) return {Family::D, rank}; break;
    case 'E': if (rank >= 6 && rank <= 8) return {Family::E, rank}; break;
    case 'F': if (rank == 4) return {Family::F, rank}; break;
    case 'G': if (rank == 2) return {Family::G, rank}; break;
    default: throw Error(ErrorKind::InvalidRank, "unknown family '" + std::string(family) + "'");
  }
  throw bad();
}

std::string RootDatum::name() const {
  static const char letters[] = "ABCDEFG";
  return letters[static_cast<int>(family)] + std::to_string(rank);
}

std::vector<DynkinEdge> dynkin_edges(const RootDatum& rd) {
  const unsigned r = rd.rank;
  std::vector<DynkinEdge> e;
  switch (rd.family) {
    case Family::A:
      for (unsigned i = 1; i < r; ++i) e.push_back({i, i + 1, 1});
      break;
    case Family::B:
    case Family::C:
      for (unsigned i = 1; i < r; ++i) e.push_back({i, i + 1, i + 1 == r ? 2u : 1u});
      break;
    case Family::D:
      for (unsigned i = 1; i + 2 < r; ++i) e.push_back({i, i + 1, 1});
      if (r >= 3) {
        e.push_back({r - 2, r - 1, 1});
        e.push_back({r - 2, r, 1});
      }
      break;
    case Family::E:
      e.push_back({1, 3, 1});
      e.push_back({2, 4, 1});
      for (unsigned i = 3; i < r; ++i) e.push_back({i, i + 1, 1});
      break;
    case Family::F:
      e = {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}};
      break;
    case Family::G:
      e = {{1, 2, 3}};
      break;
  }
  return e;
}

mpz_class weyl_order(const RootDatum& rd) {
  const unsigned r = rd.rank;
  switch (rd.family) {
    case Family::A: return factorial(r + 1);
    case Family::B:
    case Family::C: return two_power(r) * factorial(r);
    case Family::D: return two_power(r - 1) * factorial(r);
    case Family::E: return r == 6 ? mpz_class(51840) : r == 7 ? mpz_class(2903040) : mpz_class(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 1;
}

ParabolicSpec ParabolicSpec::retain(const RootDatum& rd, std::vector<unsigned> nodes) {
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < 1 || nodes[i] > rd.rank)
      throw Error(ErrorKind::InvalidNodes, "node " + std::to_string(nodes[i]) + " outside 1.." + std::to_string(rd.rank));
    if (i > 0 && nodes[i] == nodes[i - 1])
      throw Error(ErrorKind::InvalidNodes, "node " + std::to_string(nodes[i]) + " listed twice");
  }
  return {rd, std::move(nodes)};
}

ParabolicSpec ParabolicSpec::remove(const RootDatum& rd, const std::vector<unsigned>& removed) {
  ParabolicSpec::retain(rd, removed);  // validation only
  std::vector<unsigned> kept;
  for (unsigned i = 1; i <= rd.rank; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) kept.push_back(i);
  return {rd, kept};
}

namespace {

std::vector<ComponentType> components(const ParabolicSpec& p) {
  std::vector<char> kept(p.datum.rank + 1, 0);
  for (unsigned v : p.retained) kept[v] = 1;
  std::vector<DynkinEdge> edges;
  for (const auto& e : dynkin_edges(p.datum))
    if (kept[e.u] && kept[e.v]) edges.push_back(e);
  std::vector<char> seen(p.datum.rank + 1, 0);
  std::vector<ComponentType> out;
  for (unsigned start : p.retained) {
    if (seen[start]) continue;
    std::vector<unsigned> nodes{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (const auto& e : edges) {
        unsigned other = e.u == nodes[i] ? e.v : e.v == nodes[i] ? e.u : 0;
        if (other && !seen[other]) {
          seen[other] = 1;
          nodes.push_back(other);
        }
      }
    std::vector<DynkinEdge> local;
    for (const auto& e : edges)
      if (std::find(nodes.begin(), nodes.end(), e.u) != nodes.end()) local.push_back(e);
    out.push_back(classify(nodes, local));
  }
  return out;
}

}  // namespace

std::vector<std::string> parabolic_components(const ParabolicSpec& p) {
  std::vector<std::string> names;
  for (const auto& c : components(p)) names.push_back(c.name);
  return names;
}

mpz_class parabolic_order(const ParabolicSpec& p) {
  mpz_class order = 1;
  for (const auto& c : components(p)) order *= c.order;
  return order;
}

mpz_class weyl_index(const ParabolicSpec& p) {
  mpz_class w = weyl_order(p.datum), wp = parabolic_order(p);
  if (w % wp != 0)
    throw Error(ErrorKind::NonDivisible, "|W_P| = " + wp.get_str() + " does not divide |W| = " + w.get_str());
  return w / wp;
}

std::vector<GrassmannSequence> grassmann_sequences(unsigned m, unsigned n, bool strict) {
  if (m < 1 || m + 1 > n)
    throw Error(ErrorKind::InvalidArgument, "need 1 <= m <= n-1, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  const int lo = 1 - static_cast<int>(m);
  const int hi = static_cast<int>(n) - static_cast<int>(m) - (strict ? 1 : 0);
  std::vector<GrassmannSequence> out;
  std::vector<int> beta(m);
  // beta_1 > beta_2 > ... > beta_m, chosen from the top down
  std::function<void(unsigned, int)> fill = [&](unsigned i, int bound) {
    if (i == m) {
      GrassmannSequence s{m, n, {}, 0};
      for (unsigned k = 0; k < m; ++k) {
        s.alpha.push_back(beta[k] + static_cast<int>(k) + 1);
        s.d += s.alpha.back();
      }
      out.push_back(std::move(s));
      return;
    }
    for (int b = lo + static_cast<int>(m - 1 - i); b <= bound; ++b) {
      beta[i] = b;
      fill(i + 1, b - 1);
    }
  };
  fill(0, hi);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.alpha < b.alpha; });
  return out;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace ncinv

#pragma once

/**
 * @file search.hpp
 * @brief Brute-force automorphism counting and explicit isomorphism search.
 *
 * These are ground-truth oracles: every bijection they report is checked
 * edge by edge (sigma(f1(a)) == f2(sigma(a)) for all a). The backtracking
 * search maps vertices so that a vertex's successor is always mapped before
 * it (except the first vertex of each cycle), and prunes on vertex invariants
 * that any isomorphism must preserve: component cycle length, height,
 * indegree and subtree shape.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pdg/aut.hpp"
#include "pdg/digraph.hpp"
#include "pdg/errors.hpp"
#include "pdg/numtheory.hpp"

namespace pdg {

inline constexpr std::size_t kDefaultExhaustiveCap = 8;
inline constexpr std::size_t kDefaultBacktrackCap = 60;

enum class AutSearchMode { exhaustive, backtracking };

inline bool is_isomorphism(const PowerDigraph& g1, const PowerDigraph& g2,
                           const std::vector<Vertex>& sigma) {
  if (g1.size() != g2.size() || sigma.size() != g1.size()) return false;
  std::vector<std::uint8_t> seen(g2.size(), 0);
  for (Vertex s : sigma) {
    if (s >= g2.size() || seen[s]) return false;
    seen[s] = 1;
  }
  for (Vertex a = 0; a < g1.size(); ++a)
    if (sigma[g1.succ(a)] != g2.succ(sigma[a])) return false;
  return true;
}

/// Every automorphism, found by literally testing all n! permutations.
inline std::vector<std::vector<Vertex>> exhaustive_automorphisms(
    const PowerDigraph& g, std::size_t cap = kDefaultExhaustiveCap) {
  if (g.size() > cap)
    throw CapExceeded("exhaustive automorphism enumeration: n = " + std::to_string(g.size()) +
                      " exceeds cap " + std::to_string(cap));
  std::vector<Vertex> perm(g.size());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::vector<Vertex>> out;
  do {
    if (is_isomorphism(g, g, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Orbit id per vertex under the full automorphism group (smallest member labels the orbit).
inline std::vector<Vertex> exhaustive_orbits(const PowerDigraph& g,
                                             std::size_t cap = kDefaultExhaustiveCap) {
  std::vector<Vertex> orbit(g.size());
  std::iota(orbit.begin(), orbit.end(), Vertex{0});
  for (const auto& sigma : exhaustive_automorphisms(g, cap))
    for (Vertex a = 0; a < g.size(); ++a) orbit[a] = std::min(orbit[a], sigma[a]);
  return orbit;
}

namespace detail {

struct VertexKey {
  std::uint64_t cycle_length;
  std::uint32_t height;
  std::uint32_t indegree;
  ShapeId shape;

  bool operator==(const VertexKey&) const = default;
  auto operator<=>(const VertexKey&) const = default;
};

struct SearchSide {
  const PowerDigraph& g;
  ForestShapes fs;
  std::vector<VertexKey> key;

  SearchSide(const PowerDigraph& graph, ShapeTable& table) : g(graph), fs(graph, table) {
    key.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
      key[v] = {fs.dec.components[fs.dec.component_id[v]].cycle_length, fs.dec.height[v],
                static_cast<std::uint32_t>(fs.rev.indegree(v)), fs.shape[v]};
  }
};

// Maps the vertices of `from` onto `to` in a fixed order.
class Matcher {
 public:
  Matcher(const SearchSide& from, const SearchSide& to) : from_(from), to_(to) {
    const std::size_t n = from.g.size();
    order_.reserve(n);
    for (const auto& comp : from.fs.dec.components) {
      const std::size_t start = order_.size();
      // Cycle walked backwards from its representative, so each later cycle
      // vertex's successor is already placed.
      const auto& cyc = comp.cycle_vertices;
      order_.push_back(cyc[0]);
      for (std::size_t i = cyc.size(); i-- > 1;) order_.push_back(cyc[i]);
      for (std::size_t head = start; head < order_.size(); ++head)
        for (Vertex u : from.fs.rev.of(order_[head]))
          if (!from.fs.dec.on_cycle(u)) order_.push_back(u);
    }
    sigma_.assign(n, kUnset);
    used_.assign(n, 0);
  }

  const std::vector<Vertex>& order() const { return order_; }
  bool compatible_sizes() const {
    if (from_.g.size() != to_.g.size()) return false;
    std::vector<VertexKey> a = from_.key, b = to_.key;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  // Candidates for order_[i] given the current partial map.
  std::vector<Vertex> candidates(std::size_t i) const {
    const Vertex v = order_[i];
    const Vertex s = sigma_[from_.g.succ(v)];
    std::vector<Vertex> out;
    auto consider = [&](Vertex u) {
      if (!used_[u] && to_.key[u] == from_.key[v]) out.push_back(u);
    };
    if (s != kUnset) {
      for (Vertex u : to_.fs.rev.of(s)) consider(u);
    } else {
      for (Vertex u = 0; u < to_.g.size(); ++u) consider(u);
    }
    return out;
  }

  bool assign(Vertex v, Vertex u) {
    sigma_[v] = u;
    used_[u] = 1;
    const Vertex sv = from_.g.succ(v);
    if (sigma_[sv] != kUnset && sigma_[sv] != to_.g.succ(u)) return false;
    for (Vertex p : from_.fs.rev.of(v))
      if (sigma_[p] != kUnset && to_.g.succ(sigma_[p]) != u) return false;
    return true;
  }

  void unassign(Vertex v) {
    used_[sigma_[v]] = 0;
    sigma_[v] = kUnset;
  }

  // Depth-first extension of order_[i..]; leaves sigma_ untouched beyond the
  // prefix on return. Captures the first complete map when `found` is given.
  bool extend(std::size_t i, std::vector<Vertex>* found = nullptr) {
    if (i == order_.size()) {
      if (found) *found = sigma_;
      return true;
    }
    const Vertex v = order_[i];
    for (Vertex u : candidates(i)) {
      const bool ok = assign(v, u) && extend(i + 1, found);
      unassign(v);
      if (ok) return true;
    }
    return false;
  }

 private:
  static constexpr Vertex kUnset = ~Vertex{0};
  const SearchSide& from_;
  const SearchSide& to_;
  std::vector<Vertex> order_;
  std::vector<Vertex> sigma_;
  std::vector<std::uint8_t> used_;
};

}  // namespace detail

/// An explicit isomorphism g1 -> g2, or nothing when none exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const PowerDigraph& g1,
                                                           const PowerDigraph& g2,
                                                           std::size_t cap = kDefaultBacktrackCap) {
  if (g1.size() != g2.size()) return std::nullopt;
  if (g1.size() > cap)
    throw CapExceeded("isomorphism search: n = " + std::to_string(g1.size()) + " exceeds cap " +
                      std::to_string(cap));
  ShapeTable table;
  const detail::SearchSide a(g1, table), b(g2, table);
  detail::Matcher m(a, b);
  if (!m.compatible_sizes()) return std::nullopt;
  std::vector<Vertex> sigma;
  if (!m.extend(0, &sigma)) return std::nullopt;
  if (!is_isomorphism(g1, g2, sigma))
    throw InternalError("find_isomorphism: search produced a non-isomorphism");
  return sigma;
}

/// |Aut(G)| by brute force. Exhaustive mode checks all n! permutations;
/// backtracking mode walks a stabilizer chain, counting for each base point
/// the images reachable by some automorphism fixing the earlier points.
inline BigCount brute_aut_count(const PowerDigraph& g, AutSearchMode mode,
                                std::size_t exhaustive_cap = kDefaultExhaustiveCap,
                                std::size_t backtrack_cap = kDefaultBacktrackCap) {
  if (mode == AutSearchMode::exhaustive)
    return BigCount(exhaustive_automorphisms(g, exhaustive_cap).size());
  if (g.size() > backtrack_cap)
    throw CapExceeded("backtracking automorphism count: n = " + std::to_string(g.size()) +
                      " exceeds cap " + std::to_string(backtrack_cap));
  ShapeTable table;
  const detail::SearchSide side(g, table);
  detail::Matcher m(side, side);
  const auto& order = m.order();
  BigCount total = 1;
  std::vector<Vertex> witness;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint64_t orbit = 0;
    for (Vertex u : m.candidates(i)) {
      const bool ok = m.assign(order[i], u) && m.extend(i + 1, &witness);
      m.unassign(order[i]);
      if (!ok) continue;
      if (!is_isomorphism(g, g, witness))
        throw InternalError("brute_aut_count: search produced a non-automorphism");
      ++orbit;
    }
    if (orbit == 0) throw InternalError("brute_aut_count: identity not found");
    total *= orbit;
    if (!m.assign(order[i], order[i])) throw InternalError("brute_aut_count: identity rejected");
  }
  return total;
}

}  // namespace pdg

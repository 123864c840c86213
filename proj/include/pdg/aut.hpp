#pragma once

/**
 * @file aut.hpp
 * @brief Rooted-tree canonical forms and automorphism group orders of G(n,k).
 *
 * Trees hang off cycle vertices: the children of a vertex are its preimages
 * that are not themselves on a cycle. Shapes are interned bottom-up (AHU):
 * a shape is the sorted multiset of its children's shapes, so two vertices
 * carry the same shape id iff their subtrees are isomorphic. The textual code
 * of a shape is "(" + sorted child codes + ")" with a leaf being "()".
 *
 * The automorphism group of G(n,k) is a direct product over cycle lengths r
 * of (Aut(T) wr C_r) wr S_m, where m components share cycle length r and T is
 * the common tree. Its order is prod (|Aut(T)|^r * r)^m * m!.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdg/digraph.hpp"
#include "pdg/errors.hpp"
#include "pdg/numtheory.hpp"
#include "pdg/structure.hpp"

namespace pdg {

using ShapeId = std::uint32_t;

/// Interning table for rooted-tree shapes. One table may be shared by several
/// graphs so that their shape ids are directly comparable.
class ShapeTable {
 public:
  ShapeId intern(std::vector<ShapeId> children) {
    std::sort(children.begin(), children.end());
    auto [it, inserted] = ids_.try_emplace(children, static_cast<ShapeId>(children_.size()));
    if (inserted) children_.push_back(std::move(children));
    return it->second;
  }

  std::size_t size() const { return children_.size(); }
  const std::vector<ShapeId>& children(ShapeId id) const { return children_.at(id); }

  const std::string& code(ShapeId id) {
    if (codes_.size() < children_.size()) codes_.resize(children_.size());
    std::string& slot = codes_[id];
    if (!slot.empty()) return slot;
    std::vector<std::string> parts;
    for (ShapeId c : children_[id]) parts.push_back(code(c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    codes_[id] = std::move(out);
    return codes_[id];
  }

  std::uint64_t vertex_count(ShapeId id) {
    if (counts_.size() < children_.size()) counts_.resize(children_.size(), 0);
    if (counts_[id] != 0) return counts_[id];
    std::uint64_t total = 1;
    for (ShapeId c : children_[id]) total += vertex_count(c);
    return counts_[id] = total;
  }

  // prod over child classes of (multiplicity)! * |Aut(child)|^multiplicity
  const BigCount& aut_order(ShapeId id) {
    if (orders_.size() < children_.size()) orders_.resize(children_.size(), BigCount(0));
    if (orders_[id] != 0) return orders_[id];
    BigCount total = 1;
    const auto& kids = children_[id];
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && kids[j] == kids[i]) ++j;
      total *= big_factorial(j - i) * big_pow(aut_order(kids[i]), j - i);
      i = j;
    }
    orders_[id] = std::move(total);
    return orders_[id];
  }

 private:
  std::map<std::vector<ShapeId>, ShapeId> ids_;
  std::vector<std::vector<ShapeId>> children_;
  std::vector<std::string> codes_;
  std::vector<std::uint64_t> counts_;
  std::vector<BigCount> orders_;
};

/// Per-vertex subtree shapes of one power digraph, plus the decomposition they
/// were computed from.
struct ForestShapes {
  ReverseIndex rev;
  Decomposition dec;
  std::vector<ShapeId> shape;

  ForestShapes(const PowerDigraph& g, ShapeTable& table) : rev(reverse_index(g)), dec(decompose(g, rev)) {
    const std::size_t n = g.size();
    std::vector<Vertex> by_height(n);
    for (Vertex v = 0; v < n; ++v) by_height[v] = v;
    std::stable_sort(by_height.begin(), by_height.end(),
                     [&](Vertex a, Vertex b) { return dec.height[a] > dec.height[b]; });
    shape.assign(n, 0);
    std::vector<ShapeId> kids;
    for (Vertex v : by_height) {
      kids.clear();
      for (Vertex u : rev.of(v))
        if (!dec.on_cycle(u)) kids.push_back(shape[u]);
      shape[v] = table.intern(kids);
    }
  }

  std::vector<Vertex> children(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u : rev.of(v))
      if (!dec.on_cycle(u)) out.push_back(u);
    return out;
  }
};

struct TreeCode {
  std::string code;

  std::uint64_t vertex_count() const { return code.size() / 2; }
  bool operator==(const TreeCode&) const = default;
  auto operator<=>(const TreeCode&) const = default;
};

namespace detail {
inline void check_cycle_root(const PowerDigraph& g, const ForestShapes& fs, std::uint64_t root) {
  g.check_vertex(root);
  if (!fs.dec.on_cycle(static_cast<Vertex>(root)))
    throw DomainError("vertex " + std::to_string(root) + " is not a cycle vertex");
}
}  // namespace detail

inline TreeCode tree_code(const PowerDigraph& g, std::uint64_t root) {
  ShapeTable table;
  const ForestShapes fs(g, table);
  detail::check_cycle_root(g, fs, root);
  return {table.code(fs.shape[root])};
}

inline BigCount tree_aut_order(const PowerDigraph& g, std::uint64_t root) {
  ShapeTable table;
  const ForestShapes fs(g, table);
  detail::check_cycle_root(g, fs, root);
  return table.aut_order(fs.shape[root]);
}

struct AutClass {
  std::uint64_t cycle_length = 0;
  std::uint64_t multiplicity = 0;
  BigCount component_order;  // |Aut(T)|^r * r

  bool operator==(const AutClass&) const = default;
};

struct AutReport {
  BigCount tree_aut_order;
  std::vector<AutClass> per_class;
  BigCount total_order;
  std::string structure;

  bool operator==(const AutReport&) const = default;
};

inline std::string wreath_structure(const std::vector<CycleClass>& classes) {
  std::string out;
  for (const auto& c : classes) {
    if (!out.empty()) out += " x ";
    out += "((Aut(T1) wr C" + std::to_string(c.length) + ") wr S" +
           std::to_string(c.multiplicity) + ")";
  }
  return out;
}

inline AutReport aut_report_from(const BigCount& tree_order, const std::vector<CycleClass>& classes) {
  AutReport rep;
  rep.tree_aut_order = tree_order;
  rep.total_order = 1;
  for (const auto& c : classes) {
    BigCount comp = big_pow(tree_order, c.length) * c.length;
    rep.total_order *= big_pow(comp, c.multiplicity) * big_factorial(c.multiplicity);
    rep.per_class.push_back({c.length, c.multiplicity, std::move(comp)});
  }
  rep.structure = wreath_structure(classes);
  return rep;
}

inline AutReport aut_order(std::uint64_t n, std::uint64_t k) {
  const PowerDigraph g(n, k);
  ShapeTable table;
  const ForestShapes fs(g, table);
  const ShapeId root_shape = fs.shape[0];
  for (const auto& comp : fs.dec.components)
    for (Vertex c : comp.cycle_vertices)
      if (fs.shape[c] != root_shape)
        throw InternalError("aut_order: trees at cycle vertices 0 and " + std::to_string(c) +
                            " differ");
  return aut_report_from(table.aut_order(root_shape), cycle_structure(n, k).by_length);
}

/// |Aut(T)| for prime k dividing n: each non-root vertex above the leaves has
/// k children and the root has k - 1, all levels uniform.
inline BigCount prime_k_tree_aut_order(std::uint64_t n, std::uint64_t k) {
  detail::check_nk(n, k);
  if (!is_prime(k)) throw DomainError("prime_k_tree_aut_order: k must be prime");
  if (std::gcd(n, k) != k) throw DomainError("prime_k_tree_aut_order: need gcd(n, k) = k");
  const std::uint64_t h0 = min_pow_divides(coprime_split(n, k).w, k);
  BigCount level = 1;  // |Aut| of the subtree at a vertex of height h0
  const BigCount k_fact = big_factorial(k);
  for (std::uint64_t h = h0; h-- > 1;) level = big_pow(level, k) * k_fact;
  return big_pow(level, k - 1) * big_factorial(k - 1);
}

/// Vertex signature constant on automorphism orbits: cycle length of the
/// component, height, and the shapes along the path from the cycle root down
/// to the vertex (the last entry is the vertex's own subtree shape).
struct OrbitInvariant {
  std::uint64_t cycle_length = 0;
  std::uint64_t height = 0;
  std::vector<ShapeId> path_shapes;

  bool operator==(const OrbitInvariant&) const = default;
  auto operator<=>(const OrbitInvariant&) const = default;
};

inline OrbitInvariant orbit_invariant(const ForestShapes& fs, Vertex a, const PowerDigraph& g) {
  OrbitInvariant inv;
  inv.cycle_length = fs.dec.components[fs.dec.component_id[a]].cycle_length;
  inv.height = fs.dec.height[a];
  Vertex v = a;
  inv.path_shapes.push_back(fs.shape[v]);
  while (!fs.dec.on_cycle(v)) {
    v = g.succ(v);
    inv.path_shapes.push_back(fs.shape[v]);
  }
  std::reverse(inv.path_shapes.begin(), inv.path_shapes.end());
  return inv;
}

/// Orbit invariants of every vertex, with shape ids local to this call.
inline std::vector<OrbitInvariant> orbit_invariants(const PowerDigraph& g) {
  ShapeTable table;
  const ForestShapes fs(g, table);
  std::vector<OrbitInvariant> out;
  out.reserve(g.size());
  for (Vertex a = 0; a < g.size(); ++a) out.push_back(orbit_invariant(fs, a, g));
  return out;
}

inline OrbitInvariant orbit_invariant(std::uint64_t n, std::uint64_t k, std::uint64_t a) {
  const PowerDigraph g(n, k);
  g.check_vertex(a);
  ShapeTable table;
  const ForestShapes fs(g, table);
  return orbit_invariant(fs, static_cast<Vertex>(a), g);
}

}  // namespace pdg

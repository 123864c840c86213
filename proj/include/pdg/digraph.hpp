#pragma once

/**
 * @file digraph.hpp
 * @brief The explicit functional digraph G(n,k) and its brute-force anatomy.
 *
 * The cyclic group of order n is realized additively as Z/n: the power map
 * x -> x^k becomes a -> k*a mod n, the identity is vertex 0 and the order of
 * a is n / gcd(n, a). Everything in this header is computed from the successor
 * table alone, with no number-theoretic shortcuts, so it doubles as the
 * ground-truth oracle for the closed forms in structure.hpp.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdg/errors.hpp"
#include "pdg/numtheory.hpp"

namespace pdg {

using Vertex = std::uint32_t;

class PowerDigraph {
 public:
  PowerDigraph(std::uint64_t n, std::uint64_t k) : n_(n), k_(k) {
    if (n <= 1) throw DomainError("PowerDigraph: n must be > 1");
    if (k < 1 || k > n) throw DomainError("PowerDigraph: k must lie in 1..n");
    if (n > std::numeric_limits<Vertex>::max())
      throw DomainError("PowerDigraph: n too large for an explicit successor table");
    succ_.resize(n);
    const std::uint64_t step = k % n;
    std::uint64_t image = 0;
    for (std::uint64_t a = 0; a < n; ++a) {
      succ_[a] = static_cast<Vertex>(image);
      image += step;
      if (image >= n) image -= n;
    }
  }

  std::uint64_t n() const { return n_; }
  std::uint64_t k() const { return k_; }
  std::size_t size() const { return succ_.size(); }
  Vertex succ(Vertex a) const { return succ_[a]; }
  std::span<const Vertex> successors() const { return succ_; }

  void check_vertex(std::uint64_t a) const {
    if (a >= n_)
      throw DomainError("vertex " + std::to_string(a) + " out of range for n = " +
                        std::to_string(n_));
  }

 private:
  std::uint64_t n_;
  std::uint64_t k_;
  std::vector<Vertex> succ_;
};

inline PowerDigraph build(std::uint64_t n, std::uint64_t k) { return PowerDigraph(n, k); }

inline std::uint64_t vertex_order(std::uint64_t n, std::uint64_t a) {
  return n / std::gcd(n, a);  // gcd(n, 0) = n gives order 1 for the identity
}

inline std::uint64_t vertex_order(const PowerDigraph& g, std::uint64_t a) {
  g.check_vertex(a);
  return vertex_order(g.n(), a);
}

// Solves k*x = a (mod n). Either empty or exactly gcd(n, k) solutions, ascending.
inline std::vector<Vertex> preimages(const PowerDigraph& g, std::uint64_t a) {
  g.check_vertex(a);
  const std::uint64_t n = g.n();
  const std::uint64_t k = g.k() % n;
  const std::uint64_t d = std::gcd(n, k);  // k = 0 mod n gives d = n
  if (a % d != 0) return {};
  const std::uint64_t modulus = n / d;
  // Inverse of k/d modulo n/d by the extended Euclidean algorithm.
  std::int64_t old_r = static_cast<std::int64_t>((k / d) % modulus), r = static_cast<std::int64_t>(modulus);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  const std::int64_t m = static_cast<std::int64_t>(modulus);
  const std::uint64_t inverse = static_cast<std::uint64_t>(((old_s % m) + m) % m);
  const std::uint64_t x0 = modulus == 1 ? 0 : mul_mod((a / d) % modulus, inverse, modulus);
  std::vector<Vertex> out;
  out.reserve(d);
  for (std::uint64_t j = 0; j < d; ++j) out.push_back(static_cast<Vertex>(x0 + j * modulus));
  return out;
}

/// Reverse adjacency in compressed form: the preimages of v are
/// items[offsets[v] .. offsets[v+1]), ascending.
struct ReverseIndex {
  std::vector<std::uint32_t> offsets;
  std::vector<Vertex> items;

  std::span<const Vertex> of(Vertex v) const {
    return std::span<const Vertex>(items).subspan(offsets[v], offsets[v + 1] - offsets[v]);
  }
  std::size_t indegree(Vertex v) const { return offsets[v + 1] - offsets[v]; }
};

inline ReverseIndex reverse_index(const PowerDigraph& g) {
  const std::size_t n = g.size();
  ReverseIndex rev;
  rev.offsets.assign(n + 1, 0);
  for (Vertex a = 0; a < n; ++a) ++rev.offsets[g.succ(a) + 1];
  for (std::size_t v = 0; v < n; ++v) rev.offsets[v + 1] += rev.offsets[v];
  rev.items.resize(n);
  std::vector<std::uint32_t> fill(rev.offsets.begin(), rev.offsets.end() - 1);
  for (Vertex a = 0; a < n; ++a) rev.items[fill[g.succ(a)]++] = a;
  return rev;
}

struct CycleClass {
  std::uint64_t length = 0;
  std::uint64_t multiplicity = 0;

  bool operator==(const CycleClass&) const = default;
  auto operator<=>(const CycleClass&) const = default;
};

struct ComponentSummary {
  std::uint64_t cycle_length = 0;
  std::uint64_t size = 0;
  std::vector<Vertex> cycle_vertices;  // successor order, starting at the smallest label
  Vertex representative = 0;           // smallest cycle label
};

struct Decomposition {
  std::vector<std::uint8_t> cycle_flag;
  std::vector<std::uint32_t> height;
  std::vector<Vertex> root;  // f^{height(a)}(a)
  std::vector<std::uint32_t> component_id;
  std::vector<ComponentSummary> components;  // ordered by representative

  bool on_cycle(Vertex a) const { return cycle_flag[a] != 0; }
  std::uint32_t max_height() const {
    return height.empty() ? 0 : *std::max_element(height.begin(), height.end());
  }
};

// Indegree peeling finds the cycle vertices; heights and roots then follow by
// breadth-first search along reversed edges.
inline Decomposition decompose(const PowerDigraph& g, const ReverseIndex& rev) {
  const std::size_t n = g.size();
  Decomposition dec;
  dec.cycle_flag.assign(n, 1);
  std::vector<std::uint32_t> indeg(n);
  for (Vertex v = 0; v < n; ++v) indeg[v] = static_cast<std::uint32_t>(rev.indegree(v));

  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    dec.cycle_flag[v] = 0;
    if (--indeg[g.succ(v)] == 0) queue.push_back(g.succ(v));
  }

  dec.height.assign(n, 0);
  dec.root.assign(n, 0);
  dec.component_id.assign(n, std::numeric_limits<std::uint32_t>::max());
  queue.clear();
  for (Vertex v = 0; v < n; ++v) {
    if (!dec.on_cycle(v) || dec.component_id[v] != std::numeric_limits<std::uint32_t>::max())
      continue;
    ComponentSummary comp;
    comp.representative = v;
    const auto id = static_cast<std::uint32_t>(dec.components.size());
    Vertex c = v;
    do {
      comp.cycle_vertices.push_back(c);
      dec.component_id[c] = id;
      dec.root[c] = c;
      queue.push_back(c);
      c = g.succ(c);
    } while (c != v);
    comp.cycle_length = comp.cycle_vertices.size();
    dec.components.push_back(std::move(comp));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : rev.of(v)) {
      if (dec.on_cycle(u)) continue;
      dec.height[u] = dec.height[v] + 1;
      dec.root[u] = dec.root[v];
      dec.component_id[u] = dec.component_id[v];
      queue.push_back(u);
    }
  }
  for (Vertex v = 0; v < n; ++v) ++dec.components[dec.component_id[v]].size;
  return dec;
}

inline Decomposition decompose(const PowerDigraph& g) { return decompose(g, reverse_index(g)); }

inline std::uint64_t indegree_zero_count(const PowerDigraph& g) {
  std::vector<std::uint8_t> hit(g.size(), 0);
  for (Vertex a = 0; a < g.size(); ++a) hit[g.succ(a)] = 1;
  return static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 0));
}

inline std::vector<CycleClass> brute_cycle_length_multiset(const Decomposition& dec) {
  std::vector<std::uint64_t> lengths;
  for (const auto& c : dec.components) lengths.push_back(c.cycle_length);
  std::sort(lengths.begin(), lengths.end());
  std::vector<CycleClass> out;
  for (std::uint64_t len : lengths) {
    if (out.empty() || out.back().length != len) out.push_back({len, 0});
    ++out.back().multiplicity;
  }
  return out;
}

inline std::vector<CycleClass> brute_cycle_length_multiset(const PowerDigraph& g) {
  return brute_cycle_length_multiset(decompose(g));
}

struct LevelSizes {
  std::vector<std::uint64_t> total;         // |T^m|
  std::vector<std::uint64_t> tree_at_zero;  // |T_0^m|, the tree hanging at the identity
};

inline LevelSizes brute_level_sizes(const Decomposition& dec) {
  LevelSizes out;
  const std::size_t levels = static_cast<std::size_t>(dec.max_height()) + 1;
  out.total.assign(levels, 0);
  out.tree_at_zero.assign(levels, 0);
  for (std::size_t a = 0; a < dec.height.size(); ++a) {
    ++out.total[dec.height[a]];
    if (dec.root[a] == 0) ++out.tree_at_zero[dec.height[a]];
  }
  while (out.tree_at_zero.size() > 1 && out.tree_at_zero.back() == 0) out.tree_at_zero.pop_back();
  return out;
}

inline LevelSizes brute_level_sizes(const PowerDigraph& g) { return brute_level_sizes(decompose(g)); }

}  // namespace pdg

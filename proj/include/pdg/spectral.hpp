#pragma once

/**
 * @file spectral.hpp
 * @brief Characteristic and minimal polynomials of the adjacency matrix of
 * G(n,k) in closed form, the component/height-ordered adjacency matrix, and
 * the symbolic spectrum.
 *
 * A component whose cycle has length r holds r*w vertices and contributes
 * x^{r(w-1)} (x^r - 1) to the characteristic polynomial. The minimal
 * polynomial of the whole graph is x^{h0} (x^{L} - 1) with L the longest
 * cycle length, since every cycle length divides L.
 */

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "pdg/digraph.hpp"
#include "pdg/matrix.hpp"
#include "pdg/poly.hpp"
#include "pdg/structure.hpp"

namespace pdg {

inline FactoredPoly char_poly(std::uint64_t n, std::uint64_t k) {
  const CoprimeSplit split = coprime_split(n, k);
  const CycleStructure cs = cycle_structure(n, k);
  FactoredPoly f;
  for (const CycleClass& c : cs.by_length) {
    f.lambda_power += c.multiplicity * c.length * (split.w - 1);
    f.cycle_factors.push_back({c.length, c.multiplicity});
  }
  return f;
}

inline FactoredPoly min_poly(std::uint64_t n, std::uint64_t k) {
  FactoredPoly f;
  f.lambda_power = tree_profile(n, k).h0;
  f.cycle_factors.push_back({longest_cycle_length(n, k), 1});
  return f;
}

/// Rows and columns follow `ordering`; entry (i, j) is 1 iff
/// ordering[i] -> ordering[j] is an edge.
struct AdjacencyMatrix {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::vector<Vertex> ordering;
  std::vector<std::uint64_t> block_sizes;  // component blocks (canonical order only)
  std::vector<std::uint8_t> entries;       // row-major n*n

  std::size_t size() const { return ordering.size(); }
  int at(std::size_t i, std::size_t j) const { return entries[i * ordering.size() + j]; }

  IntMatrix to_int() const {
    IntMatrix m(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m(i, j) = at(i, j);
    return m;
  }
};

namespace detail {
inline AdjacencyMatrix matrix_for_ordering(const PowerDigraph& g, std::vector<Vertex> ordering) {
  AdjacencyMatrix m;
  m.n = g.n();
  m.k = g.k();
  const std::size_t n = ordering.size();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[ordering[i]] = i;
  m.entries.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m.entries[i * n + position[g.succ(ordering[i])]] = 1;
  m.ordering = std::move(ordering);
  return m;
}
}  // namespace detail

inline AdjacencyMatrix natural_matrix(const PowerDigraph& g) {
  std::vector<Vertex> ordering(g.size());
  std::iota(ordering.begin(), ordering.end(), Vertex{0});
  return detail::matrix_for_ordering(g, std::move(ordering));
}

// Component by component (identity component first); inside a component the
// cycle in successor order from its smallest label, then breadth-first by
// height with children listed under their parent's position, siblings by label.
inline AdjacencyMatrix canonical_matrix(const PowerDigraph& g) {
  const ReverseIndex rev = reverse_index(g);
  const Decomposition dec = decompose(g, rev);
  std::vector<Vertex> ordering;
  ordering.reserve(g.size());
  std::vector<std::uint64_t> blocks;
  for (const ComponentSummary& comp : dec.components) {
    const std::size_t start = ordering.size();
    ordering.insert(ordering.end(), comp.cycle_vertices.begin(), comp.cycle_vertices.end());
    for (std::size_t head = start; head < ordering.size(); ++head)
      for (Vertex u : rev.of(ordering[head]))
        if (!dec.on_cycle(u)) ordering.push_back(u);
    blocks.push_back(ordering.size() - start);
  }
  AdjacencyMatrix m = detail::matrix_for_ordering(g, std::move(ordering));
  m.block_sizes = std::move(blocks);
  return m;
}

/// exp(2*pi*i * exponent / order) with gcd(exponent, order) = 1, or zero.
struct Eigenvalue {
  bool is_zero = false;
  std::uint64_t order = 1;
  std::uint64_t exponent = 0;

  bool operator==(const Eigenvalue&) const = default;
  auto operator<=>(const Eigenvalue&) const = default;
};

struct SpectrumEntry {
  Eigenvalue value;
  std::uint64_t multiplicity = 0;

  bool operator==(const SpectrumEntry&) const = default;
};

inline std::string to_string(const Eigenvalue& v) {
  if (v.is_zero) return "0";
  if (v.order == 1) return "1";
  if (v.order == 2) return "-1";
  return "exp(2*pi*i*" + std::to_string(v.exponent) + "/" + std::to_string(v.order) + ")";
}

// Zero first, then roots of unity by (order, exponent).
inline std::vector<SpectrumEntry> spectrum(const FactoredPoly& f) {
  std::vector<SpectrumEntry> out;
  if (f.lambda_power > 0) out.push_back({{true, 0, 0}, f.lambda_power});
  std::vector<std::uint64_t> orders;
  for (const auto& factor : f.cycle_factors)
    for (std::uint64_t d : divisors(factor.r)) orders.push_back(d);
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  for (std::uint64_t order : orders) {
    std::uint64_t mult = 0;
    for (const auto& factor : f.cycle_factors)
      if (factor.r % order == 0) mult += factor.e;
    for (std::uint64_t j = 0; j < order; ++j)
      if (std::gcd(j, order) == 1) out.push_back({{false, order, j % order}, mult});
  }
  return out;
}

}  // namespace pdg

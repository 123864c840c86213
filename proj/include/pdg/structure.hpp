#pragma once

/**
 * @file structure.hpp
 * @brief Closed-form structure of G(n,k), computed without building the graph.
 *
 * Notation used throughout: n = t * w with t the largest divisor of n coprime
 * to k. Cycle vertices are exactly the elements whose order divides t; a cycle
 * of order d | t has length ord_d(k) and there are phi(d)/ord_d(k) of them.
 * Every tree hanging off a cycle vertex is isomorphic to the tree at the
 * identity, has w vertices and height h0 = min{h : w | k^h}.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "pdg/digraph.hpp"
#include "pdg/errors.hpp"
#include "pdg/numtheory.hpp"

namespace pdg {

struct CycleOrderRecord {
  std::uint64_t order = 0;   // d | t
  std::uint64_t length = 0;  // ord_d(k)
  std::uint64_t count = 0;   // phi(d) / length

  bool operator==(const CycleOrderRecord&) const = default;
};

struct CycleStructure {
  std::vector<CycleOrderRecord> per_order;  // ascending d
  std::vector<CycleClass> by_length;        // ascending length
  std::uint64_t total_cycles = 0;
  std::uint64_t longest = 0;

  bool operator==(const CycleStructure&) const = default;
};

struct TreeProfile {
  std::uint64_t h0 = 0;
  std::vector<std::uint64_t> per_tree_levels;  // |T_c^m|, m = 0..h0
  std::vector<std::uint64_t> total_levels;     // |T^m|,   m = 0..h0
  std::uint64_t tree_size = 0;                 // w

  bool operator==(const TreeProfile&) const = default;
};

struct Predicates {
  bool connected = false;
  bool regular = false;
  bool arc_transitive = false;
  bool vertex_transitive = false;
  bool generators_indegree_zero = false;

  bool operator==(const Predicates&) const = default;
};

struct GraphFacts {
  CoprimeSplit split;
  std::uint64_t gcd_nk = 0;
  CycleStructure cycles;
  TreeProfile trees;
  std::uint64_t indegree_zero = 0;
  Predicates predicates;

  bool operator==(const GraphFacts&) const = default;
};

namespace detail {
inline void check_nk(std::uint64_t n, std::uint64_t k) {
  if (n <= 1) throw DomainError("n must be > 1");
  if (k < 1 || k > n) throw DomainError("k must lie in 1..n");
}
}  // namespace detail

inline CycleStructure cycle_structure(std::uint64_t n, std::uint64_t k) {
  detail::check_nk(n, k);
  const CoprimeSplit split = coprime_split(n, k);
  CycleStructure cs;
  std::map<std::uint64_t, std::uint64_t> by_length;
  for (std::uint64_t d : divisors(split.t)) {
    const std::uint64_t len = mult_order(k % d, d);
    const std::uint64_t phi = euler_phi(d);
    if (phi % len != 0) throw InternalError("cycle_structure: ord_d k does not divide phi(d)");
    cs.per_order.push_back({d, len, phi / len});
    by_length[len] += phi / len;
    cs.total_cycles += phi / len;
  }
  for (auto [len, mult] : by_length) cs.by_length.push_back({len, mult});
  cs.longest = mult_order(k % split.t, split.t);
  return cs;
}

inline std::uint64_t longest_cycle_length(std::uint64_t n, std::uint64_t k) {
  detail::check_nk(n, k);
  const std::uint64_t t = coprime_split(n, k).t;
  return mult_order(k % t, t);
}

/// Number of cycles of exact length r: (1/r) * sum_{d | r} mu(d) gcd(k^{r/d} - 1, n).
inline std::uint64_t cycles_of_length(std::uint64_t n, std::uint64_t k, std::uint64_t r) {
  detail::check_nk(n, k);
  if (r == 0) throw DomainError("cycles_of_length: r must be >= 1");
  std::int64_t sum = 0;
  for (std::uint64_t d : divisors(r)) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    sum += mu * static_cast<std::int64_t>(gcd_pow_minus_one(k, r / d, n));
  }
  if (sum < 0 || sum % static_cast<std::int64_t>(r) != 0)
    throw InternalError("cycles_of_length: Moebius sum " + std::to_string(sum) +
                        " is not a nonnegative multiple of r = " + std::to_string(r));
  return static_cast<std::uint64_t>(sum) / r;
}

// gcd(m, k^e) without forming k^e.
inline std::uint64_t gcd_with_power(std::uint64_t m, std::uint64_t k, std::uint64_t e) {
  return std::gcd(m, pow_mod(k, e, m));
}

inline TreeProfile tree_profile(std::uint64_t n, std::uint64_t k) {
  detail::check_nk(n, k);
  const CoprimeSplit split = coprime_split(n, k);
  TreeProfile tp;
  tp.tree_size = split.w;
  tp.h0 = min_pow_divides(split.w, k);
  tp.per_tree_levels.push_back(1);
  tp.total_levels.push_back(split.t);
  for (std::uint64_t m = 1; m <= tp.h0; ++m) {
    tp.per_tree_levels.push_back(gcd_with_power(split.w, k, m) -
                                 gcd_with_power(split.w, k, m - 1));
    // |T^m| = (n, k^m t) - (n, k^{m-1} t)
    const std::uint64_t hi = std::gcd(n, mul_mod(pow_mod(k, m, n), split.t, n));
    const std::uint64_t lo = std::gcd(n, mul_mod(pow_mod(k, m - 1, n), split.t, n));
    tp.total_levels.push_back(hi - lo);
  }
  return tp;
}

/// Height of vertex a: least h with w_a | k^h, where ord(a) = t_a * w_a.
inline std::uint64_t vertex_height(std::uint64_t n, std::uint64_t k, std::uint64_t a) {
  detail::check_nk(n, k);
  if (a >= n) throw DomainError("vertex_height: vertex out of range");
  const std::uint64_t ord = vertex_order(n, a);
  const std::uint64_t t_a = coprime_part(ord, k);
  return min_pow_divides(ord / t_a, k);
}

struct LevelMembership {
  std::uint64_t root_order = 0;  // order of f^m(a), equal to t_a
  std::uint64_t level = 0;       // m = height of a

  bool operator==(const LevelMembership&) const = default;
};

inline LevelMembership level_membership(std::uint64_t n, std::uint64_t k, std::uint64_t a) {
  detail::check_nk(n, k);
  if (a >= n) throw DomainError("level_membership: vertex out of range");
  const std::uint64_t ord = vertex_order(n, a);
  const std::uint64_t t_a = coprime_part(ord, k);
  return {t_a, min_pow_divides(ord / t_a, k)};
}

inline std::uint64_t indegree_zero_count_formula(std::uint64_t n, std::uint64_t k) {
  detail::check_nk(n, k);
  const std::uint64_t d = std::gcd(n, k);
  return (d - 1) * (n / d);
}

/// Childless vertices at level m of a single tree, for 1 <= m <= h0 - 1.
inline std::uint64_t indegree_zero_in_level(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  const TreeProfile tp = tree_profile(n, k);
  if (tp.h0 < 2 || m < 1 || m > tp.h0 - 1)
    throw DomainError("indegree_zero_in_level: need h0 >= 2 and 1 <= m <= h0 - 1 (h0 = " +
                      std::to_string(tp.h0) + ", m = " + std::to_string(m) + ")");
  const std::uint64_t d = std::gcd(k, n);
  if (tp.per_tree_levels[m + 1] % d != 0)
    throw InternalError("indegree_zero_in_level: level size not divisible by gcd(k, n)");
  return tp.per_tree_levels[m] - tp.per_tree_levels[m + 1] / d;
}

inline Predicates predicates(std::uint64_t n, std::uint64_t k) {
  detail::check_nk(n, k);
  const CoprimeSplit split = coprime_split(n, k);
  const std::uint64_t d = std::gcd(n, k);
  Predicates p;
  p.connected = split.t == 1;
  p.regular = d == 1;
  // Transitive iff every vertex is fixed, i.e. n | k - 1.
  p.arc_transitive = (k - 1) % n == 0;
  p.vertex_transitive = p.arc_transitive;
  p.generators_indegree_zero = d != 1;
  return p;
}

/// phi(r1)/phi(r): elements of order r1 whose (r1/r)-th multiple is a fixed
/// element of order r, in a cyclic group of order m.
inline std::uint64_t count_order_preimages(std::uint64_t r, std::uint64_t r1, std::uint64_t m) {
  if (r == 0 || r1 == 0 || m == 0 || r1 % r != 0 || m % r1 != 0)
    throw DomainError("count_order_preimages: need r | r1 | m");
  return euler_phi(r1) / euler_phi(r);
}

inline GraphFacts graph_facts(std::uint64_t n, std::uint64_t k) {
  GraphFacts f;
  f.split = coprime_split(n, k);
  f.gcd_nk = std::gcd(n, k);
  f.cycles = cycle_structure(n, k);
  f.trees = tree_profile(n, k);
  f.indegree_zero = indegree_zero_count_formula(n, k);
  f.predicates = predicates(n, k);
  return f;
}

}  // namespace pdg

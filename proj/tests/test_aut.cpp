#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "oracles.hpp"
#include "pdg/aut.hpp"
#include "pdg/search.hpp"

using namespace pdg;

TEST(Aut, TreeCodeExamples) {
  EXPECT_EQ(tree_code(build(28, 2), 0).code, "((()()))");
  EXPECT_EQ(tree_code(build(28, 2), 0).vertex_count(), 4u);
  EXPECT_EQ(tree_code(build(6, 1), 3).code, "()");
  EXPECT_EQ(tree_code(build(40, 4), 0).code, "((()()()())()())");
  EXPECT_THROW(tree_code(build(28, 2), 14), DomainError);
  EXPECT_THROW(tree_code(build(28, 2), 28), DomainError);
}

TEST(Aut, TreeCodeMatchesRecursion) {
  for (std::uint64_t n = 2; n <= 60; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto s = oracle::successor_table(n, k);
      ASSERT_EQ(tree_code(build(n, k), 0).code, oracle::code_by_recursion(s, 0)) << n << " " << k;
    }
}

TEST(Aut, TreeAutOrderExamples) {
  EXPECT_EQ(tree_aut_order(build(28, 2), 0), 2);
  EXPECT_EQ(tree_aut_order(build(9, 1), 4), 1);
  EXPECT_EQ(tree_aut_order(build(6, 6), 0), 120);
}

TEST(Aut, AutOrderExamples) {
  const auto rep = aut_order(28, 2);
  EXPECT_EQ(rep.total_order, 2304);
  EXPECT_EQ(rep.tree_aut_order, 2);
  ASSERT_EQ(rep.per_class.size(), 2u);
  EXPECT_EQ(rep.per_class[1].component_order, 24);
  EXPECT_EQ(rep.structure, "((Aut(T1) wr C1) wr S1) x ((Aut(T1) wr C3) wr S2)");
  for (std::uint64_t n = 2; n <= 30; ++n) {
    EXPECT_EQ(aut_order(n, 1).total_order, big_factorial(n));
    EXPECT_EQ(aut_order(n, n).total_order, big_factorial(n - 1));
  }
}

TEST(Aut, PrimeKRecursionExamples) {
  EXPECT_EQ(prime_k_tree_aut_order(28, 2), 2);
  EXPECT_EQ(prime_k_tree_aut_order(8, 2), 8);
  EXPECT_EQ(prime_k_tree_aut_order(15, 5), 24);
  EXPECT_THROW(prime_k_tree_aut_order(12, 4), DomainError);
  EXPECT_THROW(prime_k_tree_aut_order(10, 3), DomainError);
}

TEST(Aut, TreeCodeConstantAcrossRoots) {
  for (std::uint64_t n = 2; n <= 300; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto g = build(n, k);
      ShapeTable table;
      const ForestShapes fs(g, table);
      for (const auto& comp : fs.dec.components)
        for (Vertex c : comp.cycle_vertices) ASSERT_EQ(fs.shape[c], fs.shape[0]) << n << " " << k;
      ASSERT_EQ(table.code(fs.shape[0]).size(), 2 * coprime_split(n, k).w);
    }
}

TEST(Aut, PrimeKMatchesAhu) {
  for (std::uint64_t k : {2u, 3u, 5u})
    for (std::uint64_t n = k; n <= 300; n += k)
      ASSERT_EQ(prime_k_tree_aut_order(n, k), tree_aut_order(build(n, k), 0)) << n << " " << k;
}

TEST(Aut, CoprimeCase) {
  for (std::uint64_t n = 2; n <= 200; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      const auto rep = aut_order(n, k);
      ASSERT_EQ(rep.tree_aut_order, 1);
      BigCount expected = 1;
      for (const auto& c : cycle_structure(n, k).by_length)
        expected *= big_pow(BigCount(c.length), c.multiplicity) * big_factorial(c.multiplicity);
      ASSERT_EQ(rep.total_order, expected);
    }
}

TEST(Aut, BruteForceExamples) {
  EXPECT_EQ(brute_aut_count(build(4, 2), AutSearchMode::exhaustive), 2);
  EXPECT_EQ(brute_aut_count(build(3, 1), AutSearchMode::exhaustive), 6);
  EXPECT_EQ(brute_aut_count(build(28, 2), AutSearchMode::backtracking), 2304);
  EXPECT_THROW(brute_aut_count(build(9, 2), AutSearchMode::exhaustive), CapExceeded);
  EXPECT_THROW(brute_aut_count(build(61, 2), AutSearchMode::backtracking), CapExceeded);
}

TEST(Aut, FormulaMatchesExhaustive) {
  for (std::uint64_t n = 2; n <= 8; ++n)
    for (std::uint64_t k = 1; k <= n; ++k)
      ASSERT_EQ(aut_order(n, k).total_order, brute_aut_count(build(n, k), AutSearchMode::exhaustive))
          << n << " " << k;
}

TEST(Aut, FormulaMatchesBacktracking) {
  for (std::uint64_t n = 2; n <= 24; ++n)
    for (std::uint64_t k = 1; k <= n; ++k)
      ASSERT_EQ(aut_order(n, k).total_order,
                brute_aut_count(build(n, k), AutSearchMode::backtracking))
          << n << " " << k;
  for (auto [n, k] : std::vector<std::pair<int, int>>{{28, 2}, {40, 4}, {48, 6}, {60, 2}, {32, 2}})
    ASSERT_EQ(aut_order(n, k).total_order, brute_aut_count(build(n, k), AutSearchMode::backtracking));
}

TEST(Aut, OrbitInvariantExamples) {
  EXPECT_EQ(orbit_invariant(28, 2, 4), orbit_invariant(28, 2, 8));
  EXPECT_EQ(orbit_invariant(28, 2, 7), orbit_invariant(28, 2, 21));
  const auto zero = orbit_invariant(28, 2, 0);
  for (Vertex a = 1; a < 28; ++a) EXPECT_NE(orbit_invariant(28, 2, a), zero);
}

TEST(Aut, EqualOrderGivesEqualInvariant) {
  for (std::uint64_t n = 2; n <= 200; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto inv = orbit_invariants(build(n, k));
      std::map<std::uint64_t, Vertex> first;
      for (Vertex a = 0; a < n; ++a) {
        const auto [it, fresh] = first.try_emplace(vertex_order(n, a), a);
        if (!fresh) ASSERT_EQ(inv[a], inv[it->second]) << n << " " << k << " " << a;
      }
    }
}

TEST(Aut, InvariantsMatchTrueOrbits) {
  for (std::uint64_t n = 2; n <= 8; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto g = build(n, k);
      const auto orbit = exhaustive_orbits(g);
      const auto inv = orbit_invariants(g);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
          ASSERT_EQ(orbit[a] == orbit[b], inv[a] == inv[b]) << n << " " << k << " " << a << " " << b;
          if (vertex_order(n, a) == vertex_order(n, b)) ASSERT_EQ(orbit[a], orbit[b]);
        }
    }
}

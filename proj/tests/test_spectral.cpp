#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "pdg/oracle.hpp"
#include "pdg/spectral.hpp"

using namespace pdg;

namespace {

DensePoly ints(std::vector<long long> c) { return DensePoly::from_ints(c); }
DensePoly neg(const DensePoly& p) { return DensePoly() - p; }

// Dense cofactor expansion of det(xI - A) over small matrices, as an
// independent check on the Berkowitz routine itself.
DensePoly det_by_expansion(const std::vector<std::vector<DensePoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return DensePoly::one();
  if (n == 1) return m[0][0];
  DensePoly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<DensePoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<DensePoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    DensePoly term = m[0][j] * det_by_expansion(minor);
    total = j % 2 == 0 ? total - neg(term) : total - term;
  }
  return total;
}

DensePoly char_poly_by_expansion(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<DensePoly>> m(n, std::vector<DensePoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      DensePoly e = a.at(i, j) ? neg(DensePoly::one()) : DensePoly();
      m[i][j] = i == j ? DensePoly::monomial(1) - neg(e) : e;
    }
  return det_by_expansion(m);
}

}  // namespace

TEST(Spectral, ClosedFormExamples) {
  EXPECT_EQ(to_string(char_poly(28, 2)), "x^21*(x-1)*(x^3-1)^2");
  EXPECT_EQ(char_poly(7, 1), (FactoredPoly{0, {{1, 7}}}));
  EXPECT_EQ(char_poly(6, 6), (FactoredPoly{5, {{1, 1}}}));
  EXPECT_EQ(min_poly(28, 2), (FactoredPoly{2, {{3, 1}}}));
  EXPECT_EQ(min_poly(7, 1), (FactoredPoly{0, {{1, 1}}}));
  EXPECT_EQ(min_poly(6, 6), (FactoredPoly{1, {{1, 1}}}));
  EXPECT_EQ(char_poly(28, 2).degree(), 28u);
}

TEST(Spectral, Expand) {
  EXPECT_EQ(expand(FactoredPoly{2, {{3, 1}}}), ints({0, 0, -1, 0, 0, 1}));
  EXPECT_EQ(expand(FactoredPoly{0, {{1, 2}}}), ints({1, -2, 1}));
  EXPECT_EQ(to_string(expand(FactoredPoly{2, {{3, 1}}})), "x^5 - x^2");
}

TEST(Spectral, Spectrum) {
  const auto s = spectrum(char_poly(28, 2));
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], (SpectrumEntry{{true, 0, 0}, 21}));
  EXPECT_EQ(s[1], (SpectrumEntry{{false, 1, 0}, 3}));
  EXPECT_EQ(s[2], (SpectrumEntry{{false, 3, 1}, 2}));
  EXPECT_EQ(s[3], (SpectrumEntry{{false, 3, 2}, 2}));
  const auto id = spectrum(char_poly(9, 1));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0], (SpectrumEntry{{false, 1, 0}, 9}));
  for (std::uint64_t n = 2; n <= 60; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      std::uint64_t total = 0;
      for (const auto& e : spectrum(char_poly(n, k))) total += e.multiplicity;
      ASSERT_EQ(total, n);
    }
}

TEST(Spectral, CanonicalMatrixShape) {
  const auto m = canonical_matrix(build(28, 2));
  EXPECT_EQ(m.block_sizes, (std::vector<std::uint64_t>{4, 12, 12}));
  EXPECT_EQ(m.at(0, 0), 1);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) EXPECT_EQ(m.at(4 + i, 4 + j), m.at(16 + i, 16 + j));
  for (std::size_t i = 0; i < 28; ++i)
    for (std::size_t j = 0; j < 28; ++j) {
      const bool same_block = (i < 4) == (j < 4) && (i < 16) == (j < 16);
      if (!same_block) EXPECT_EQ(m.at(i, j), 0);
    }
  const auto id = canonical_matrix(build(5, 1));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(id.at(i, j), i == j ? 1 : 0);
}

TEST(Spectral, MatrixSums) {
  for (std::uint64_t n = 2; n <= 64; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto m = canonical_matrix(build(n, k));
      const auto d = std::gcd(n, k);
      for (std::size_t i = 0; i < n; ++i) {
        int row = 0, col = 0;
        for (std::size_t j = 0; j < n; ++j) {
          row += m.at(i, j);
          col += m.at(j, i);
        }
        ASSERT_EQ(row, 1);
        ASSERT_TRUE(col == 0 || static_cast<std::uint64_t>(col) == d);
      }
    }
}

// Rows after a component's cycle only point to earlier rows of the same block.
TEST(Spectral, CanonicalMatrixIsBlockLowerTriangular) {
  for (std::uint64_t n = 2; n <= 64; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto g = build(n, k);
      const auto m = canonical_matrix(g);
      const auto dec = decompose(g);
      std::size_t start = 0;
      for (std::size_t b = 0; b < m.block_sizes.size(); ++b) {
        const std::size_t len = dec.components[b].cycle_length;
        for (std::size_t i = start; i < start + m.block_sizes[b]; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (!m.at(i, j)) continue;
            ASSERT_GE(j, start);
            ASSERT_LT(j, start + (i < start + len ? len : m.block_sizes[b]));
            if (i >= start + len) ASSERT_LT(j, i);
            ASSERT_LE(dec.height[m.ordering[j]], dec.height[m.ordering[i]]);
          }
        start += m.block_sizes[b];
      }
    }
}

TEST(Spectral, BerkowitzSmallCases) {
  AdjacencyMatrix id3 = natural_matrix(build(3, 1));
  EXPECT_EQ(oracle_char_poly(id3), ints({-1, 3, -3, 1}));
  AdjacencyMatrix cyc;
  cyc.ordering = {0, 1, 2};
  cyc.entries = {0, 1, 0, 0, 0, 1, 1, 0, 0};
  EXPECT_EQ(oracle_char_poly(cyc), ints({-1, 0, 0, 1}));
  EXPECT_EQ(oracle_char_poly(canonical_matrix(build(28, 2))), expand(char_poly(28, 2)));
  for (std::uint64_t n = 2; n <= 7; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto m = natural_matrix(build(n, k));
      ASSERT_EQ(oracle_char_poly(m), char_poly_by_expansion(m)) << n << " " << k;
    }
  EXPECT_THROW(oracle_char_poly(natural_matrix(build(65, 2))), CapExceeded);
  EXPECT_NO_THROW(oracle_char_poly(natural_matrix(build(65, 2)), 65));
}

TEST(Spectral, MinPolyOracleSmallCases) {
  EXPECT_EQ(oracle_min_poly(canonical_matrix(build(28, 2))), ints({0, 0, -1, 0, 0, 1}));
  EXPECT_EQ(oracle_min_poly(natural_matrix(build(4, 1))), ints({-1, 1}));
  EXPECT_EQ(oracle_min_poly(canonical_matrix(build(6, 6))), ints({0, -1, 1}));
  EXPECT_THROW(oracle_min_poly(natural_matrix(build(41, 2))), CapExceeded);
}

TEST(Spectral, CharPolyMatchesOracle) {
  for (std::uint64_t n = 2; n <= 64; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto cf = char_poly(n, k);
      ASSERT_EQ(cf.degree(), n);
      ASSERT_EQ(cf.lambda_power, n - coprime_split(n, k).t);
      ASSERT_EQ(expand(cf), oracle_char_poly(canonical_matrix(build(n, k)))) << n << " " << k;
    }
}

TEST(Spectral, MinPolyMatchesOracle) {
  for (std::uint64_t n = 2; n <= 40; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto m = canonical_matrix(build(n, k));
      const auto mf = min_poly(n, k);
      const auto me = expand(mf);
      ASSERT_EQ(me, oracle_min_poly(m)) << n << " " << k;
      ASSERT_TRUE(divides(me, expand(char_poly(n, k))));
      const auto a = m.to_int();
      ASSERT_TRUE(evaluate(me, a).is_zero());
      if (mf.lambda_power >= 1) {
        auto lower = mf;
        --lower.lambda_power;
        ASSERT_FALSE(evaluate(expand(lower), a).is_zero()) << n << " " << k;
      }
    }
}

TEST(Spectral, PolyArithmetic) {
  for (std::uint64_t e = 1; e <= 30; ++e) {
    DensePoly prod = DensePoly::one();
    for (std::uint64_t d : divisors(e)) prod = prod * cyclotomic(d);
    ASSERT_EQ(prod, DensePoly::power_minus_one(e));
  }
  const auto q = divmod_monic(ints({-1, 0, 0, 1}), ints({-1, 1}));
  EXPECT_EQ(q.quotient, ints({1, 1, 1}));
  EXPECT_TRUE(q.remainder.is_zero());
  EXPECT_FALSE(divides(ints({1, 1}), ints({-1, 0, 1, 1})));
}

#pragma once

/**
 * @file oracle.hpp
 * @brief Independent exact-matrix oracles for the spectral closed forms.
 *
 * oracle_char_poly runs the division-free Berkowitz algorithm over big
 * integers. oracle_min_poly factors that characteristic polynomial into x and
 * cyclotomic factors, then lowers each exponent as far as the matrix still
 * annihilates, and finally re-checks every maximal proper divisor. Neither
 * routine looks at n, k, cycle structure or heights.
 */

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pdg/errors.hpp"
#include "pdg/matrix.hpp"
#include "pdg/poly.hpp"
#include "pdg/spectral.hpp"

namespace pdg {

inline constexpr std::size_t kDefaultCharOracleCap = 64;
inline constexpr std::size_t kDefaultMinOracleCap = 40;

/// det(xI - A) by Berkowitz. `Matrix` needs size() and operator()(i, j) yielding
/// an integer convertible to BigCount.
template <class Matrix>
DensePoly berkowitz(const Matrix& a) {
  const std::size_t n = a.size();
  // Sparse rows: (column, value) with column ascending.
  std::vector<std::vector<std::pair<std::size_t, BigCount>>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) rows[i].emplace_back(j, BigCount(a(i, j)));

  std::vector<BigCount> p{1};  // descending coefficients of the leading r x r block
  std::vector<BigCount> v, mv;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<BigCount> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -BigCount(a(r, r));
    v.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) v[i] = BigCount(a(i, r));
    for (std::size_t j = 0; j < r; ++j) {
      BigCount dot = 0;
      for (const auto& [col, val] : rows[r]) {
        if (col >= r) break;
        if (v[col] != 0) dot += val * v[col];
      }
      toeplitz[j + 2] = -dot;
      if (j + 1 == r) break;
      mv.assign(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (const auto& [col, val] : rows[i]) {
          if (col >= r) break;
          if (v[col] != 0) mv[i] += val * v[col];
        }
      v.swap(mv);
    }
    std::vector<BigCount> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (p[j] != 0 && toeplitz[i - j] != 0) next[i] += toeplitz[i - j] * p[j];
    p.swap(next);
  }
  return DensePoly(std::vector<BigCount>(p.rbegin(), p.rend()));
}

namespace detail {
struct AdjacencyView {
  const AdjacencyMatrix& m;
  std::size_t size() const { return m.size(); }
  int operator()(std::size_t i, std::size_t j) const { return m.at(i, j); }
};

inline void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": matrix size " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
}
}  // namespace detail

inline DensePoly oracle_char_poly(const AdjacencyMatrix& m,
                                  std::size_t cap = kDefaultCharOracleCap) {
  detail::check_cap(m.size(), cap, "oracle_char_poly");
  return berkowitz(detail::AdjacencyView{m});
}

/// A^0 .. A^max_degree.
inline std::vector<IntMatrix> matrix_powers(const IntMatrix& a, std::size_t max_degree) {
  std::vector<IntMatrix> powers;
  powers.reserve(max_degree + 1);
  powers.push_back(IntMatrix::identity(a.size()));
  for (std::size_t i = 1; i <= max_degree; ++i) powers.push_back(powers.back() * a);
  return powers;
}

inline IntMatrix evaluate(const DensePoly& p, const std::vector<IntMatrix>& powers) {
  if (static_cast<long long>(powers.size()) <= p.degree())
    throw DomainError("evaluate: not enough matrix powers for the polynomial degree");
  IntMatrix out(powers.empty() ? 0 : powers.front().size());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i] == 0) continue;
    if (p.coeffs[i] > std::numeric_limits<std::int64_t>::max() ||
        p.coeffs[i] < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("evaluate: coefficient exceeds int64");
    out.add_scaled(powers[i], static_cast<std::int64_t>(p.coeffs[i]));
  }
  return out;
}

/// p(A) by exact matrix arithmetic.
inline IntMatrix evaluate(const DensePoly& p, const IntMatrix& a) {
  return evaluate(p, matrix_powers(a, p.degree() < 0 ? 0 : static_cast<std::size_t>(p.degree())));
}

/// Irreducible factors of a characteristic polynomial known to be a product
/// of x and cyclotomic polynomials.
struct CyclotomicFactorization {
  std::uint64_t x_power = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cyclotomic;  // (index e, multiplicity)
};

inline CyclotomicFactorization factor_cyclotomic(const DensePoly& p,
                                                 const std::vector<DensePoly>& table) {
  if (p.is_zero()) throw DomainError("factor_cyclotomic: zero polynomial");
  CyclotomicFactorization out;
  while (out.x_power < p.coeffs.size() && p.coeffs[out.x_power] == 0) ++out.x_power;
  DensePoly rest(std::vector<BigCount>(p.coeffs.begin() + static_cast<std::ptrdiff_t>(out.x_power),
                                       p.coeffs.end()));
  for (std::uint64_t e = 1; e < table.size() && rest.degree() > 0; ++e) {
    std::uint64_t mult = 0;
    while (rest.degree() >= table[e].degree()) {
      DivMod qr = divmod_monic(rest, table[e]);
      if (!qr.remainder.is_zero()) break;
      rest = std::move(qr.quotient);
      ++mult;
    }
    if (mult > 0) out.cyclotomic.emplace_back(e, mult);
  }
  if (rest != DensePoly::one())
    throw InternalError("factor_cyclotomic: characteristic polynomial has a non-cyclotomic factor");
  return out;
}

inline DensePoly oracle_min_poly(const AdjacencyMatrix& m, std::size_t cap = kDefaultMinOracleCap) {
  detail::check_cap(m.size(), cap, "oracle_min_poly");
  const DensePoly cp = oracle_char_poly(m, cap);
  const std::vector<DensePoly> table = cyclotomic_table(m.size());
  const CyclotomicFactorization fac = factor_cyclotomic(cp, table);

  // factors[0] is x, the rest are cyclotomic; exponents start at full multiplicity.
  std::vector<DensePoly> factors{DensePoly::monomial(1)};
  std::vector<std::uint64_t> exponent{fac.x_power};
  for (auto [e, mult] : fac.cyclotomic) {
    factors.push_back(table[e]);
    exponent.push_back(mult);
  }
  auto product = [&](const std::vector<std::uint64_t>& exps) {
    DensePoly p = DensePoly::one();
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::uint64_t j = 0; j < exps[i]; ++j) p = p * factors[i];
    return p;
  };
  const std::vector<IntMatrix> powers = matrix_powers(m.to_int(), m.size());
  auto annihilates = [&](const std::vector<std::uint64_t>& exps) {
    return evaluate(product(exps), powers).is_zero();
  };

  if (!annihilates(exponent))
    throw InternalError("oracle_min_poly: characteristic polynomial does not annihilate A");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::uint64_t full = exponent[i];
    for (std::uint64_t x = 0; x <= full; ++x) {
      exponent[i] = x;
      if (annihilates(exponent)) break;
    }
  }
  // No maximal proper divisor of the result may annihilate A.
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (exponent[i] == 0) continue;
    --exponent[i];
    const bool still = annihilates(exponent);
    ++exponent[i];
    if (still) throw InternalError("oracle_min_poly: result is not minimal");
  }
  return product(exponent);
}

}  // namespace pdg

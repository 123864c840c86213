#pragma once

/**
 * @file poly.hpp
 * @brief Univariate integer polynomials: dense (exact, big coefficients) and
 * the factored shape x^a * prod (x^r - 1)^e that every power-digraph
 * characteristic and minimal polynomial takes.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pdg/errors.hpp"
#include "pdg/numtheory.hpp"

namespace pdg {

/// Coefficients in ascending degree; the highest stored coefficient is nonzero
/// (the zero polynomial has no coefficients).
struct DensePoly {
  std::vector<BigCount> coeffs;

  DensePoly() = default;
  explicit DensePoly(std::vector<BigCount> c) : coeffs(std::move(c)) { trim(); }

  static DensePoly one() { return DensePoly({BigCount(1)}); }
  static DensePoly monomial(std::uint64_t degree) {
    std::vector<BigCount> c(degree + 1);
    c[degree] = 1;
    return DensePoly(std::move(c));
  }
  // x^r - 1
  static DensePoly power_minus_one(std::uint64_t r) {
    DensePoly p = monomial(r);
    p.coeffs[0] -= 1;
    p.trim();
    return p;
  }
  static DensePoly from_ints(const std::vector<long long>& c) {
    std::vector<BigCount> big(c.begin(), c.end());
    return DensePoly(std::move(big));
  }

  bool is_zero() const { return coeffs.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long long degree() const { return static_cast<long long>(coeffs.size()) - 1; }
  const BigCount& leading() const { return coeffs.back(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  bool operator==(const DensePoly&) const = default;
};

inline DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigCount> out(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return DensePoly(std::move(out));
}

inline DensePoly operator-(const DensePoly& a, const DensePoly& b) {
  std::vector<BigCount> out(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
  return DensePoly(std::move(out));
}

// Multiplies in place by x^r - 1.
inline void multiply_by_power_minus_one(DensePoly& p, std::uint64_t r) {
  if (p.is_zero()) return;
  std::vector<BigCount> out(p.coeffs.size() + r);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    out[i + r] += p.coeffs[i];
    out[i] -= p.coeffs[i];
  }
  p = DensePoly(std::move(out));
}

struct DivMod {
  DensePoly quotient;
  DensePoly remainder;
};

inline DivMod divmod_monic(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero() || b.leading() != 1) throw DomainError("divmod_monic: divisor must be monic");
  if (a.degree() < b.degree()) return {DensePoly(), a};
  std::vector<BigCount> rem = a.coeffs;
  const std::size_t db = b.coeffs.size() - 1;
  std::vector<BigCount> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    const BigCount c = rem[i];
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs[j];
  }
  return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

inline bool divides(const DensePoly& divisor, const DensePoly& p) {
  return divmod_monic(p, divisor).remainder.is_zero();
}

/// Phi_e, built as (x^e - 1) divided by Phi_d for every proper divisor d of e.
inline DensePoly cyclotomic(std::uint64_t e) {
  if (e == 0) throw DomainError("cyclotomic: index must be >= 1");
  DensePoly p = DensePoly::power_minus_one(e);
  for (std::uint64_t d : divisors(e)) {
    if (d == e) continue;
    DivMod qr = divmod_monic(p, cyclotomic(d));
    if (!qr.remainder.is_zero()) throw InternalError("cyclotomic: inexact division");
    p = std::move(qr.quotient);
  }
  return p;
}

// Phi_1 .. Phi_count (index 0 unused).
inline std::vector<DensePoly> cyclotomic_table(std::uint64_t count) {
  std::vector<DensePoly> table(count + 1);
  for (std::uint64_t e = 1; e <= count; ++e) {
    DensePoly p = DensePoly::power_minus_one(e);
    for (std::uint64_t d : divisors(e)) {
      if (d == e) continue;
      p = divmod_monic(p, table[d]).quotient;
    }
    table[e] = std::move(p);
  }
  return table;
}

inline std::string to_string(const DensePoly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    const BigCount& c = p.coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigCount mag = negative ? BigCount(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag;
    if (i > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

struct CycleFactor {
  std::uint64_t r = 0;  // (x^r - 1)
  std::uint64_t e = 0;  // exponent

  bool operator==(const CycleFactor&) const = default;
  auto operator<=>(const CycleFactor&) const = default;
};

/// x^lambda_power * prod (x^r - 1)^e, factors sorted by r.
struct FactoredPoly {
  std::uint64_t lambda_power = 0;
  std::vector<CycleFactor> cycle_factors;

  std::uint64_t degree() const {
    std::uint64_t d = lambda_power;
    for (const auto& f : cycle_factors) d += f.r * f.e;
    return d;
  }

  bool operator==(const FactoredPoly&) const = default;
};

inline DensePoly expand(const FactoredPoly& f) {
  DensePoly p = DensePoly::monomial(f.lambda_power);
  for (const auto& factor : f.cycle_factors)
    for (std::uint64_t i = 0; i < factor.e; ++i) multiply_by_power_minus_one(p, factor.r);
  return p;
}

inline std::string to_string(const FactoredPoly& f, const std::string& var = "x") {
  std::vector<std::string> parts;
  if (f.lambda_power > 0)
    parts.push_back(var + (f.lambda_power > 1 ? "^" + std::to_string(f.lambda_power) : ""));
  for (const auto& factor : f.cycle_factors) {
    std::string base = "(" + var + (factor.r > 1 ? "^" + std::to_string(factor.r) : "") + "-1)";
    if (factor.e > 1) base += "^" + std::to_string(factor.e);
    parts.push_back(base);
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

}  // namespace pdg

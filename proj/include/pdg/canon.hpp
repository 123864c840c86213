#pragma once

/**
 * @file canon.hpp
 * @brief Complete isomorphism certificates for power digraphs.
 *
 * All trees of G(n,k) are isomorphic to the tree at the identity, so a
 * component is fixed up to isomorphism by its cycle length, and the whole
 * graph by (n, tree code, multiset of cycle lengths).
 */

#include <cstdint>
#include <string>
#include <vector>

#include "pdg/aut.hpp"
#include "pdg/digraph.hpp"
#include "pdg/structure.hpp"

namespace pdg {

struct CanonicalCert {
  std::uint64_t vertex_count = 0;
  TreeCode tree_code;
  std::vector<CycleClass> cycle_multiset;

  bool operator==(const CanonicalCert&) const = default;
};

inline CanonicalCert certificate(std::uint64_t n, std::uint64_t k) {
  CanonicalCert cert;
  cert.vertex_count = n;
  cert.tree_code = tree_code(PowerDigraph(n, k), 0);
  cert.cycle_multiset = cycle_structure(n, k).by_length;
  return cert;
}

// "n|treecode|r1^m1,r2^m2,..."
inline std::string to_string(const CanonicalCert& cert) {
  std::string out = std::to_string(cert.vertex_count) + "|" + cert.tree_code.code + "|";
  for (std::size_t i = 0; i < cert.cycle_multiset.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(cert.cycle_multiset[i].length) + "^" +
           std::to_string(cert.cycle_multiset[i].multiplicity);
  }
  return out;
}

inline bool is_isomorphic(std::uint64_t n1, std::uint64_t k1, std::uint64_t n2, std::uint64_t k2) {
  detail::check_nk(n1, k1);
  detail::check_nk(n2, k2);
  if (n1 != n2) return false;
  return certificate(n1, k1) == certificate(n2, k2);
}

/// For prime n and 1 < k1 < k2 < n: G(n,k1) and G(n,k2) are isomorphic iff
/// ord_n k1 = ord_n k2. Refuses anything outside those hypotheses.
inline bool prime_iso_criterion(std::uint64_t n, std::uint64_t k1, std::uint64_t k2) {
  if (!is_prime(n)) throw DomainError("prime_iso_criterion: n must be prime");
  if (!(1 < k1 && k1 < k2 && k2 < n))
    throw DomainError("prime_iso_criterion: need 1 < k1 < k2 < n");
  return mult_order(k1, n) == mult_order(k2, n);
}

}  // namespace pdg

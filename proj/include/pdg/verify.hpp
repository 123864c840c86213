#pragma once

/**
 * @file verify.hpp
 * @brief Theory-versus-oracle sweep over every invariant of the library.
 *
 * Each suite recomputes a closed-form quantity from its brute-force
 * counterpart (explicit graph, exact matrix, permutation search) and records
 * one check per comparison. The run is single-threaded and visits cells in a
 * fixed order, so two runs with the same configuration print identical
 * reports.
 *
 * Ranges: graph sweeps stop at max_n; the arithmetic-only sweeps (totient and
 * Moebius sums, coprime splits, the level and cycle-length bounds) cover
 * n <= max(max_n, 500). Suites with a narrower natural range (orbits and the
 * order-preimage count up to 200, explicit bijections up to 40, the prime
 * criterion up to 61, backtracking samples up to 60) are further clipped to
 * max_n.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pdg/aut.hpp"
#include "pdg/canon.hpp"
#include "pdg/digraph.hpp"
#include "pdg/errors.hpp"
#include "pdg/numtheory.hpp"
#include "pdg/oracle.hpp"
#include "pdg/search.hpp"
#include "pdg/spectral.hpp"
#include "pdg/structure.hpp"

namespace pdg {

/// Deliberate corruption of one closed form, for checking that the harness
/// actually notices a wrong formula.
enum class InjectedFault { none, cycle_count, level_sizes, char_poly, aut_order };

inline InjectedFault parse_fault(const std::string& name) {
  if (name == "none") return InjectedFault::none;
  if (name == "cycle_count") return InjectedFault::cycle_count;
  if (name == "level_sizes") return InjectedFault::level_sizes;
  if (name == "char_poly") return InjectedFault::char_poly;
  if (name == "aut_order") return InjectedFault::aut_order;
  throw DomainError("unknown fault '" + name + "'");
}

struct VerifyConfig {
  std::uint64_t max_n = 300;
  std::uint64_t max_matrix_n = 64;
  std::uint64_t max_minpoly_n = 40;
  std::uint64_t max_exhaustive_n = 8;
  std::uint64_t backtracking_samples = 50;
  bool fail_fast = false;
  InjectedFault fault = InjectedFault::none;

  void validate() const {
    auto need = [](std::uint64_t v, const char* name) {
      if (v < 2) throw DomainError(std::string(name) + " must be at least 2");
    };
    need(max_n, "max_n");
    need(max_matrix_n, "max_matrix_n");
    need(max_minpoly_n, "max_minpoly_n");
    need(max_exhaustive_n, "max_exhaustive_n");
    need(backtracking_samples, "backtracking_samples");
  }
};

struct SuiteTally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;  // first few failures only
};

struct VerifyReport {
  std::map<std::string, SuiteTally> suites;
  bool stopped_early = false;

  std::uint64_t checks() const {
    std::uint64_t c = 0;
    for (const auto& [name, s] : suites) c += s.checks;
    return c;
  }
  std::uint64_t failures() const {
    std::uint64_t f = 0;
    for (const auto& [name, s] : suites) f += s.failures;
    return f;
  }
  bool ok() const { return failures() == 0; }

  std::string render() const {
    std::ostringstream out;
    for (const auto& [name, s] : suites)
      out << "suite " << name << ": checks " << s.checks << ", failures " << s.failures << "\n";
    for (const auto& [name, s] : suites) {
      std::vector<std::string> sorted = s.messages;
      std::sort(sorted.begin(), sorted.end());
      for (const auto& m : sorted) out << "FAIL " << name << ": " << m << "\n";
      if (s.failures > s.messages.size())
        out << "FAIL " << name << ": ... " << (s.failures - s.messages.size()) << " more\n";
    }
    if (stopped_early) out << "stopped at first failure\n";
    out << "checks: " << checks() << ", failures: " << failures() << "\n";
    return out.str();
  }
};

namespace detail {

inline constexpr std::size_t kKeptMessages = 20;
inline constexpr std::uint64_t kArithmeticLimit = 500;

class Verifier {
 public:
  explicit Verifier(const VerifyConfig& cfg) : cfg_(cfg) {}

  const VerifyConfig& cfg() const { return cfg_; }
  bool stopped() const { return report_.stopped_early; }
  VerifyReport take() { return std::move(report_); }

  // Records one comparison; `describe` is only evaluated on failure. After a
  // fail-fast stop nothing more is recorded.
  template <class Describe>
  void check(const std::string& suite, bool ok, Describe&& describe) {
    if (report_.stopped_early) return;
    SuiteTally& s = report_.suites[suite];
    ++s.checks;
    if (ok) return;
    ++s.failures;
    if (s.messages.size() < kKeptMessages) s.messages.push_back(describe());
    if (cfg_.fail_fast) report_.stopped_early = true;
  }

  // Converts an exception escaping a cell into a failed check.
  template <class Body>
  void guarded(const std::string& suite, const std::string& cell, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(suite, false, [&] { return cell + ": exception: " + e.what(); });
    }
  }

 private:
  VerifyConfig cfg_;
  VerifyReport report_;
};

inline std::string cell(std::uint64_t n, std::uint64_t k) {
  return "G(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

inline std::uint64_t phi_by_count(std::uint64_t m) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= m; ++i) c += std::gcd(i, m) == 1;
  return c;
}

inline std::uint64_t order_by_iteration(std::uint64_t k, std::uint64_t d) {
  if (d == 1) return 1;
  std::uint64_t x = k % d, e = 1;
  for (; x != 1; ++e) x = x * (k % d) % d;
  return e;
}

// ---- suites ------------------------------------------------------------------

inline void suite_numtheory(Verifier& v) {
  const std::string S = "numtheory";
  const std::uint64_t limit = std::max(v.cfg().max_n, kArithmeticLimit);
  for (std::uint64_t n = 1; n <= limit && !v.stopped(); ++n) {
    std::uint64_t phi_sum = 0;
    int mu_sum = 0;
    for (std::uint64_t d : divisors(n)) {
      phi_sum += euler_phi(d);
      mu_sum += moebius(d);
    }
    v.check(S, euler_phi(n) == phi_by_count(n), [&] { return "phi(" + std::to_string(n) + ")"; });
    v.check(S, phi_sum == n, [&] { return "totient divisor sum at " + std::to_string(n); });
    v.check(S, mu_sum == (n == 1 ? 1 : 0), [&] { return "Moebius divisor sum at " + std::to_string(n); });
    if (n < 2) continue;
    const auto ds = divisors(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      const CoprimeSplit s = coprime_split(n, k);
      bool ok = s.t * s.w == n && std::gcd(s.t, k) == 1 && std::gcd(s.t, s.w) == 1;
      for (std::uint64_t p : prime_factors(s.w)) ok = ok && k % p == 0;
      for (std::uint64_t d : ds) ok = ok && (std::gcd(d, k) != 1 || d <= s.t);
      v.check(S, ok, [&] { return "coprime_split" + cell(n, k); });
      const std::uint64_t h = min_pow_divides(s.w, k);
      const bool minimal = s.w == 1 ? h == 0
                                    : pow_mod(k, h, s.w) == 0 && (h == 0 || pow_mod(k, h - 1, s.w) != 0);
      v.check(S, minimal, [&] { return "min_pow_divides for " + cell(n, k); });
    }
  }
  for (std::uint64_t k = 1; k <= 30; ++k)
    for (std::uint64_t m = 1; m <= 30; ++m)
      for (std::uint64_t n = 1; n <= 30; ++n) {
        const BigCount big = gcd(big_pow(BigCount(k), m) - 1, BigCount(n));
        v.check(S, BigCount(gcd_pow_minus_one(k, m, n)) == big, [&] {
          return "gcd_pow_minus_one(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
        });
      }
  for (std::uint64_t d = 1; d <= 200; ++d)
    for (std::uint64_t k = 1; k <= 40; ++k)
      if (std::gcd(k, d) == 1)
        v.check(S, mult_order(k, d) == order_by_iteration(k, d),
                [&] { return "mult_order(" + std::to_string(k) + "," + std::to_string(d) + ")"; });
}

inline void graph_cell(Verifier& v, std::uint64_t n, std::uint64_t k) {
  const std::string D = "digraph", S = "structure";
  const InjectedFault fault = v.cfg().fault;
  const PowerDigraph g(n, k);
  const ReverseIndex rev = reverse_index(g);
  const Decomposition dec = decompose(g, rev);
  const CoprimeSplit split = coprime_split(n, k);
  const std::uint64_t d = std::gcd(n, k);
  const std::string c = cell(n, k);

  // Model-level invariants of the explicit graph.
  bool edges = true, indeg = true, pre = true, cyc = true, heights = true, orders = true, perm = true;
  std::vector<std::uint8_t> hit(n, 0);
  for (Vertex a = 0; a < n; ++a) {
    edges = edges && g.succ(a) < n;
    const std::size_t in = rev.indegree(a);
    indeg = indeg && (in == 0 || in == d) && ((in != 0) == (a % d == 0));
    const auto p = preimages(g, a);
    const auto r = rev.of(a);
    pre = pre && std::equal(p.begin(), p.end(), r.begin(), r.end());
    cyc = cyc && dec.on_cycle(a) == (split.t % vertex_order(n, a) == 0);
    heights = heights && (dec.height[a] == 0) == dec.on_cycle(a) && dec.on_cycle(dec.root[a]) &&
              dec.height[g.succ(a)] == (dec.height[a] == 0 ? 0 : dec.height[a] - 1) &&
              dec.component_id[a] == dec.component_id[g.succ(a)];
    if (dec.on_cycle(a)) {
      orders = orders && vertex_order(n, a) == vertex_order(n, g.succ(a));
      perm = perm && dec.on_cycle(g.succ(a)) && hit[g.succ(a)]++ == 0;
    }
  }
  v.check(D, edges && rev.items.size() == n, [&] { return c + ": outdegree"; });
  v.check(D, indeg, [&] { return c + ": indegree in {0, gcd(n,k)}"; });
  v.check(D, pre, [&] { return c + ": preimage solver"; });
  v.check(D, cyc, [&] { return c + ": cycle vertices are ord | t"; });
  v.check(D, heights, [&] { return c + ": heights and roots"; });
  v.check(D, orders, [&] { return c + ": constant order along cycles"; });
  v.check(D, perm, [&] { return c + ": succ permutes cycle vertices"; });

  std::uint64_t longest = 0;
  bool one_cycle = true, sizes = true;
  std::vector<std::uint32_t> cycles_per_comp(dec.components.size(), 0);
  for (const auto& comp : dec.components) {
    longest = std::max(longest, comp.cycle_length);
    ++cycles_per_comp[dec.component_id[comp.representative]];
    sizes = sizes && comp.size == comp.cycle_length * split.w;
  }
  for (auto x : cycles_per_comp) one_cycle = one_cycle && x == 1;
  v.check(D, one_cycle, [&] { return c + ": one cycle per component"; });
  v.check(D, sizes, [&] { return c + ": component size = r * w"; });
  bool gen_longest = true, gens_zero = true;
  for (Vertex a = 1; a < n; ++a) {
    if (std::gcd<std::uint64_t>(a, n) != 1) continue;
    gen_longest = gen_longest && dec.components[dec.component_id[a]].cycle_length == longest;
    gens_zero = gens_zero && rev.indegree(a) == 0;
  }
  v.check(D, gen_longest, [&] { return c + ": generators sit on a longest cycle"; });
  v.check(D, gens_zero == (d != 1), [&] { return c + ": generators indegree 0 iff gcd(n,k) != 1"; });

  // Closed forms against the graph.
  const CycleStructure cs = cycle_structure(n, k);
  const auto brute_cycles = brute_cycle_length_multiset(dec);
  v.check(S, cs.by_length == brute_cycles, [&] { return c + ": cycle multiset"; });
  std::uint64_t cyc_vertices = 0, total = 0;
  bool divides_longest = true;
  for (const auto& rec : cs.per_order) {
    cyc_vertices += rec.length * rec.count;
    divides_longest = divides_longest && cs.longest % rec.length == 0;
  }
  for (const auto& cl : cs.by_length) total += cl.multiplicity;
  v.check(S, cyc_vertices == split.t && total == cs.total_cycles && divides_longest,
          [&] { return c + ": cycle structure bookkeeping"; });
  v.check(S, longest_cycle_length(n, k) == longest, [&] { return c + ": longest cycle"; });
  for (std::uint64_t r = 1; r <= cs.longest; ++r) {
    std::uint64_t brute = 0;
    for (const auto& cl : brute_cycles)
      if (cl.length == r) brute = cl.multiplicity;
    std::uint64_t theory = cycles_of_length(n, k, r);
    if (fault == InjectedFault::cycle_count && r == 1) ++theory;
    v.check(S, theory == brute, [&] {
      return c + ": cycles_of_length(" + std::to_string(r) + ") = " + std::to_string(theory) + ", brute force " +
             std::to_string(brute);
    });
  }

  TreeProfile tp = tree_profile(n, k);
  if (fault == InjectedFault::level_sizes) ++tp.total_levels.back();
  const LevelSizes lv = brute_level_sizes(dec);
  v.check(S, tp.per_tree_levels == lv.tree_at_zero, [&] { return c + ": per-tree level sizes"; });
  v.check(S, tp.total_levels == lv.total, [&] { return c + ": total level sizes"; });
  std::uint64_t level_sum = 0;
  bool scaled = tp.per_tree_levels.size() == tp.total_levels.size();
  for (std::size_t m = 0; m < tp.per_tree_levels.size(); ++m) {
    level_sum += tp.per_tree_levels[m];
    scaled = scaled && tp.total_levels[m] == split.t * tp.per_tree_levels[m];
  }
  v.check(S, level_sum == split.w && scaled && tp.per_tree_levels[0] == 1,
          [&] { return c + ": level sums"; });

  bool h_ok = true, lm_ok = true;
  for (Vertex a = 0; a < n; ++a) {
    h_ok = h_ok && vertex_height(n, k, a) == dec.height[a];
    const LevelMembership lm = level_membership(n, k, a);
    lm_ok = lm_ok && lm.level == dec.height[a] && lm.root_order == vertex_order(n, dec.root[a]);
  }
  v.check(S, h_ok, [&] { return c + ": vertex heights"; });
  v.check(S, lm_ok, [&] { return c + ": level membership"; });
  v.check(S, indegree_zero_count_formula(n, k) == indegree_zero_count(g), [&] { return c + ": indegree-0 count"; });
  for (std::uint64_t m = 1; tp.h0 >= 2 && m < tp.h0; ++m) {
    std::uint64_t childless = 0;
    for (Vertex a = 0; a < n; ++a) childless += dec.root[a] == 0 && dec.height[a] == m && rev.indegree(a) == 0;
    v.check(S, indegree_zero_in_level(n, k, m) == childless,
            [&] { return c + ": indegree-0 vertices in level " + std::to_string(m); });
  }

  const Predicates p = predicates(n, k);
  bool regular = true, identity = true;
  for (Vertex a = 0; a < n; ++a) {
    regular = regular && rev.indegree(a) == 1;
    identity = identity && g.succ(a) == a;
  }
  v.check(S, p.connected == (dec.components.size() == 1), [&] { return c + ": connectivity"; });
  v.check(S, p.regular == regular, [&] { return c + ": regularity"; });
  v.check(S, p.arc_transitive == identity && p.vertex_transitive == identity, [&] { return c + ": transitivity"; });
  v.check(S, p.generators_indegree_zero == gens_zero, [&] { return c + ": generator indegree predicate"; });

  // lcm identity over all divisor pairs of t.
  const auto tdiv = divisors(split.t);
  std::vector<std::uint64_t> ell(tdiv.size());
  for (std::size_t i = 0; i < tdiv.size(); ++i) ell[i] = mult_order(k, tdiv[i]);
  bool lcm_ok = true;
  for (std::size_t i = 0; i < tdiv.size(); ++i)
    for (std::size_t j = 0; j < tdiv.size(); ++j) {
      const std::uint64_t l = std::lcm(tdiv[i], tdiv[j]);
      const std::size_t at = std::lower_bound(tdiv.begin(), tdiv.end(), l) - tdiv.begin();
      lcm_ok = lcm_ok && ell[at] == std::lcm(ell[i], ell[j]);
    }
  v.check(S, lcm_ok, [&] { return c + ": l(lcm(d,r)) = lcm(l(d), l(r))"; });

  // Subgroup unions: vertices at root order | d and height <= h are exactly
  // {a : ord(a) | k^h d}, a subgroup of order gcd(n, k^h d).
  auto union_ok = [&](std::uint64_t dd, std::uint64_t h) {
    std::uint64_t members = 0;
    bool same = true;
    for (Vertex a = 0; a < n; ++a) {
      const std::uint64_t ord = vertex_order(n, a);
      const bool by_graph = dd % vertex_order(n, dec.root[a]) == 0 && dec.height[a] <= h;
      const bool by_order = mul_mod(pow_mod(k, h, ord), dd % ord, ord) == 0;
      same = same && by_graph == by_order;
      members += by_order;
    }
    const BigCount expected = gcd(BigCount(dd) * big_pow(BigCount(k), h), BigCount(n));
    return same && BigCount(members) == expected;
  };
  bool unions = true;
  for (std::uint64_t dd : tdiv)
    for (std::uint64_t h = 0; h <= tp.h0; ++h) unions = unions && union_ok(dd, h);
  v.check(S, unions, [&] { return c + ": subgroup unions over divisors of t"; });
  bool unions_l = true;
  for (std::uint64_t l : divisors(cs.longest))
    for (std::uint64_t h = 0; h <= tp.h0; ++h) unions_l = unions_l && union_ok(std::gcd(split.t, gcd_pow_minus_one(k, l, n)), h);
  v.check(S, unions_l, [&] { return c + ": subgroup unions over gcd(t, k^l - 1)"; });

  // Order product: a in the identity tree at height h, c a cycle vertex and
  // c_h the cycle vertex with f^h(c_h) = c; then a + c_h hangs at c.
  bool product = true;
  for (Vertex a = 0; a < n; ++a) {
    if (dec.root[a] != 0 || dec.on_cycle(a)) continue;
    const std::uint64_t h = dec.height[a];
    for (const auto& comp : dec.components) {
      const std::uint64_t len = comp.cycle_length;
      for (std::uint64_t i = 0; i < len; ++i) {
        const Vertex target = comp.cycle_vertices[i];
        const Vertex ch = comp.cycle_vertices[(i + len - h % len) % len];
        const Vertex b = static_cast<Vertex>((a + ch) % n);
        product = product && dec.root[b] == target && dec.height[b] == h &&
                  vertex_order(n, b) == vertex_order(n, a) * vertex_order(n, ch);
      }
    }
  }
  v.check(S, product, [&] { return c + ": order product"; });
}

inline void suite_graphs(Verifier& v) {
  for (std::uint64_t n = 2; n <= v.cfg().max_n && !v.stopped(); ++n)
    for (std::uint64_t k = 1; k <= n && !v.stopped(); ++k)
      v.guarded("structure", cell(n, k), [&] { graph_cell(v, n, k); });
  v.check("structure", mult_order(2, 11) == 10 && mult_order(2, 15) == 4 &&
                           mult_order(2, std::gcd(11, 15)) != std::gcd(mult_order(2, 11), mult_order(2, 15)),
          [] { return std::string("gcd analogue of the lcm identity should fail at k=2, d=11, r=15"); });
}

inline void suite_bounds(Verifier& v) {
  const std::string S = "bounds";
  const std::uint64_t limit = std::max(v.cfg().max_n, kArithmeticLimit);
  for (std::uint64_t n = 2; n <= limit && !v.stopped(); ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const std::uint64_t d = std::gcd(n, k);
      if (d != 1) {
        const TreeProfile tp = tree_profile(n, k);
        v.check(S, 2 * tp.total_levels.back() >= n, [&] { return cell(n, k) + ": |T^h0| >= n/2"; });
        v.check(S, euler_phi(n) * d <= (d - 1) * n, [&] { return cell(n, k) + ": phi(n) <= (d-1)n/d"; });
      }
      if (n % 2 == 0 && n >= 6)
        v.check(S, 2 * longest_cycle_length(n, k) <= n - 2, [&] { return cell(n, k) + ": longest <= (n-2)/2"; });
    }
  for (std::uint64_t n : {8u, 16u, 32u})
    v.check(S, 2 * tree_profile(n, 6).total_levels.back() == n,
            [&] { return cell(n, 6) + ": |T^h0| = n/2 expected"; });
  v.check(S, 2 * longest_cycle_length(10, 2) == 8, [] { return std::string("G(10,2): longest = (n-2)/2 expected"); });
}

inline void suite_spectral(Verifier& v) {
  const std::string S = "spectral";
  const auto& cfg = v.cfg();
  const std::uint64_t char_limit = std::min(cfg.max_matrix_n, cfg.max_n);
  const std::uint64_t min_limit = std::min(cfg.max_minpoly_n, char_limit);
  for (std::uint64_t n = 2; n <= char_limit && !v.stopped(); ++n)
    for (std::uint64_t k = 1; k <= n && !v.stopped(); ++k) {
      const std::string c = cell(n, k);
      v.guarded(S, c, [&] {
        const PowerDigraph g(n, k);
        const AdjacencyMatrix m = canonical_matrix(g);
        FactoredPoly cp = char_poly(n, k);
        if (cfg.fault == InjectedFault::char_poly) ++cp.lambda_power;
        v.check(S, cp.degree() == n, [&] { return c + ": degree of characteristic polynomial"; });
        v.check(S, cp.lambda_power == n - coprime_split(n, k).t, [&] { return c + ": eigenvalue 0 multiplicity"; });
        const DensePoly cp_dense = expand(cp);
        v.check(S, cp_dense == oracle_char_poly(m, cfg.max_matrix_n),
                [&] { return c + ": characteristic polynomial vs Berkowitz"; });
        std::uint64_t spec_total = 0;
        for (const auto& e : spectrum(cp)) spec_total += e.multiplicity;
        v.check(S, spec_total == cp.degree(), [&] { return c + ": spectrum multiplicities"; });

        const std::uint64_t d = std::gcd(n, k);
        bool sums = true, blocks = true;
        std::vector<std::size_t> block_of(n);
        std::size_t start = 0;
        for (std::size_t b = 0; b < m.block_sizes.size(); ++b) {
          for (std::size_t i = 0; i < m.block_sizes[b]; ++i) block_of[start + i] = b;
          start += m.block_sizes[b];
        }
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t row = 0, col = 0;
          for (std::size_t j = 0; j < n; ++j) {
            row += m.at(i, j);
            col += m.at(j, i);
            if (m.at(i, j)) blocks = blocks && block_of[i] == block_of[j];
          }
          sums = sums && row == 1 && (col == 0 || col == d);
        }
        v.check(S, sums, [&] { return c + ": row and column sums"; });
        v.check(S, blocks, [&] { return c + ": block diagonal by component"; });

        if (n > min_limit) return;
        const FactoredPoly mp = min_poly(n, k);
        const DensePoly mp_dense = expand(mp);
        v.check(S, mp_dense == oracle_min_poly(m, cfg.max_minpoly_n),
                [&] { return c + ": minimal polynomial vs annihilation oracle"; });
        v.check(S, divides(mp_dense, cp_dense), [&] { return c + ": minimal divides characteristic"; });
        const IntMatrix a = m.to_int();
        v.check(S, evaluate(mp_dense, a).is_zero(), [&] { return c + ": minimal polynomial annihilates A"; });
        if (mp.lambda_power >= 1) {
          FactoredPoly lower = mp;
          --lower.lambda_power;
          v.check(S, !evaluate(expand(lower), a).is_zero(), [&] { return c + ": lower lambda power annihilates A"; });
        }
      });
    }
}

// (n, k) pairs with 2 <= n <= limit, sampled by a fixed stride, plus (28, 2).
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> backtracking_sample(std::uint64_t limit,
                                                                                 std::uint64_t samples) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> all;
  for (std::uint64_t n = 2; n <= limit; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) all.emplace_back(n, k);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (all.size() <= samples) {
    out = all;
  } else {
    for (std::uint64_t i = 0; i < samples; ++i) out.push_back(all[i * all.size() / samples]);
  }
  if (limit >= 28 && std::find(out.begin(), out.end(), std::pair<std::uint64_t, std::uint64_t>{28, 2}) == out.end())
    out.emplace_back(28, 2);
  return out;
}

inline void suite_aut(Verifier& v) {
  const std::string S = "aut";
  const auto& cfg = v.cfg();
  auto theory_order = [&](std::uint64_t n, std::uint64_t k) {
    BigCount o = aut_order(n, k).total_order;
    if (cfg.fault == InjectedFault::aut_order) o += 1;
    return o;
  };

  for (std::uint64_t n = 2; n <= cfg.max_n && !v.stopped(); ++n)
    for (std::uint64_t k = 1; k <= n && !v.stopped(); ++k) {
      const std::string c = cell(n, k);
      v.guarded(S, c, [&] {
        const PowerDigraph g(n, k);
        ShapeTable table;
        const ForestShapes fs(g, table);
        bool constant = true;
        for (const auto& comp : fs.dec.components)
          for (Vertex r : comp.cycle_vertices) constant = constant && fs.shape[r] == fs.shape[0];
        v.check(S, constant, [&] { return c + ": tree code constant across cycle roots"; });
        v.check(S, table.code(fs.shape[0]).size() == 2 * coprime_split(n, k).w,
                [&] { return c + ": tree code length 2w"; });
        if (std::gcd(n, k) == 1) {
          const AutReport rep = aut_order(n, k);
          BigCount expected = 1;
          for (const auto& cl : cycle_structure(n, k).by_length)
            expected *= big_pow(BigCount(cl.length), cl.multiplicity) * big_factorial(cl.multiplicity);
          v.check(S, rep.tree_aut_order == 1 && rep.total_order == expected,
                  [&] { return c + ": coprime automorphism order"; });
        }
        if (k == 1) v.check(S, theory_order(n, k) == big_factorial(n), [&] { return c + ": |Aut| = n!"; });
        if (k == n) v.check(S, theory_order(n, k) == big_factorial(n - 1), [&] { return c + ": |Aut| = (n-1)!"; });
        if ((k == 2 || k == 3 || k == 5) && n % k == 0)
          v.check(S, prime_k_tree_aut_order(n, k) == table.aut_order(fs.shape[0]),
                  [&] { return c + ": prime-k recursion vs AHU"; });
      });
    }

  const std::uint64_t ex_limit = std::min(cfg.max_exhaustive_n, cfg.max_n);
  for (std::uint64_t n = 2; n <= ex_limit && !v.stopped(); ++n)
    for (std::uint64_t k = 1; k <= n && !v.stopped(); ++k) {
      const std::string c = cell(n, k);
      v.guarded(S, c, [&] {
        const PowerDigraph g(n, k);
        const auto autos = exhaustive_automorphisms(g, cfg.max_exhaustive_n);
        v.check(S, theory_order(n, k) == autos.size(), [&] { return c + ": |Aut| vs exhaustive count"; });
        std::vector<Vertex> orbit(n);
        std::iota(orbit.begin(), orbit.end(), Vertex{0});
        for (const auto& sigma : autos)
          for (Vertex a = 0; a < n; ++a) orbit[a] = std::min(orbit[a], sigma[a]);
        const auto inv = orbit_invariants(g);
        bool same = true, by_order = true;
        for (Vertex a = 0; a < n; ++a)
          for (Vertex b = 0; b < n; ++b) {
            same = same && (orbit[a] == orbit[b]) == (inv[a] == inv[b]);
            if (vertex_order(n, a) == vertex_order(n, b)) by_order = by_order && orbit[a] == orbit[b];
          }
        v.check(S, same, [&] { return c + ": orbit invariant separates exhaustive orbits"; });
        v.check(S, by_order, [&] { return c + ": equal order implies same orbit"; });
      });
    }

  for (auto [n, k] : backtracking_sample(std::min<std::uint64_t>(60, cfg.max_n), cfg.backtracking_samples)) {
    if (v.stopped()) break;
    const std::string c = cell(n, k);
    v.guarded(S, c, [&] {
      v.check(S, theory_order(n, k) == brute_aut_count(PowerDigraph(n, k), AutSearchMode::backtracking, cfg.max_exhaustive_n, 60),
              [&] { return c + ": |Aut| vs backtracking count"; });
    });
  }

  const std::uint64_t orbit_limit = std::min<std::uint64_t>(200, cfg.max_n);
  for (std::uint64_t n = 2; n <= orbit_limit && !v.stopped(); ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const auto inv = orbit_invariants(PowerDigraph(n, k));
      std::map<std::uint64_t, Vertex> first;
      bool ok = true;
      for (Vertex a = 0; a < n; ++a) {
        const auto [it, fresh] = first.try_emplace(vertex_order(n, a), a);
        if (!fresh) ok = ok && inv[a] == inv[it->second];
      }
      v.check(S, ok, [&] { return cell(n, k) + ": equal order implies equal orbit invariant"; });
    }

  for (std::uint64_t m = 1; m <= orbit_limit && !v.stopped(); ++m)
    for (std::uint64_t r1 : divisors(m))
      for (std::uint64_t r : divisors(r1)) {
        const std::uint64_t q = r1 / r, expected = count_order_preimages(r, r1, m);
        bool ok = true;
        for (std::uint64_t b = 0; b < m; ++b) {
          if (m / std::gcd(m, b) != r) continue;
          std::uint64_t count = 0;
          for (std::uint64_t x = 0; x < m; ++x) count += m / std::gcd(m, x) == r1 && (q * x) % m == b;
          ok = ok && count == expected;
        }
        v.check(S, ok, [&] {
          return "order preimages r=" + std::to_string(r) + " r1=" + std::to_string(r1) + " m=" + std::to_string(m);
        });
      }
}

inline void suite_canon(Verifier& v) {
  const std::string S = "canon";
  const auto& cfg = v.cfg();
  const std::uint64_t prime_limit = std::min<std::uint64_t>(61, cfg.max_n);
  for (std::uint64_t n = 3; n <= prime_limit && !v.stopped(); ++n) {
    if (!is_prime(n)) continue;
    std::vector<CanonicalCert> certs(n + 1);
    for (std::uint64_t k = 2; k < n; ++k) certs[k] = certificate(n, k);
    for (std::uint64_t k1 = 2; k1 < n; ++k1)
      for (std::uint64_t k2 = k1 + 1; k2 < n; ++k2)
        v.check(S, prime_iso_criterion(n, k1, k2) == (certs[k1] == certs[k2]), [&] {
          return "prime criterion n=" + std::to_string(n) + " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
        });
  }
  v.check(S, is_isomorphic(10, 2, 10, 8), [] { return std::string("G(10,2) and G(10,8) should be isomorphic"); });

  for (std::uint64_t n = 2; n <= cfg.max_n && !v.stopped(); ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const CanonicalCert cert = certificate(n, k);
      std::uint64_t total = 0;
      for (const auto& cl : cert.cycle_multiset) total += cl.length * cl.multiplicity;
      v.check(S, total * cert.tree_code.vertex_count() == n, [&] { return cell(n, k) + ": certificate size"; });
    }

  const std::uint64_t iso_limit = std::min<std::uint64_t>(40, cfg.max_n);
  for (std::uint64_t n = 2; n <= iso_limit && !v.stopped(); ++n) {
    std::vector<CanonicalCert> certs(n + 1);
    for (std::uint64_t k = 1; k <= n; ++k) certs[k] = certificate(n, k);
    for (std::uint64_t k1 = 1; k1 <= n; ++k1)
      for (std::uint64_t k2 = k1; k2 <= n; ++k2) {
        const std::string c = cell(n, k1) + " vs " + cell(n, k2);
        v.guarded(S, c, [&] {
          const bool verdict = is_isomorphic(n, k1, n, k2);
          v.check(S, verdict == is_isomorphic(n, k2, n, k1) && verdict == (certs[k1] == certs[k2]),
                  [&] { return c + ": symmetry"; });
          const auto sigma = find_isomorphism(PowerDigraph(n, k1), PowerDigraph(n, k2), 60);
          v.check(S, sigma.has_value() == verdict, [&] { return c + ": explicit bijection search disagrees"; });
        });
      }
  }
}

// The documented examples, as single checks.
inline void suite_examples(Verifier& v) {
  const std::string S = "examples";
  auto ex = [&](bool ok, const char* what) { v.check(S, ok, [&] { return std::string(what); }); };
  v.guarded(S, "examples", [&] {
    const GraphFacts f = graph_facts(28, 2);
    ex(f.split.t == 7 && f.split.w == 4 && f.trees.h0 == 2, "G(28,2): t, w, h0");
    ex(f.cycles.by_length == std::vector<CycleClass>{{1, 1}, {3, 2}}, "G(28,2): cycles {1,3,3}");
    ex(f.indegree_zero == 14, "G(28,2): 14 indegree-0 vertices");
    ex(f.trees.per_tree_levels == std::vector<std::uint64_t>{1, 1, 2}, "G(28,2): levels [1,1,2]");
    const TreeProfile f3 = tree_profile(40, 4);
    ex(f3.h0 == 2 && f3.per_tree_levels == std::vector<std::uint64_t>{1, 3, 4}, "G(40,4): levels [1,3,4]");
    ex(indegree_zero_in_level(40, 4, 1) == 2, "G(40,4): 2 childless vertices in level 1");
    ex(aut_order(28, 2).total_order == 2304, "G(28,2): |Aut| = 2304");
    ex(to_string(char_poly(28, 2)) == "x^21*(x-1)*(x^3-1)^2", "G(28,2): characteristic polynomial");
    ex(min_poly(28, 2) == FactoredPoly{2, {{3, 1}}}, "G(28,2): minimal polynomial");
    ex(tree_code(PowerDigraph(28, 2), 0).code == "((()()))", "G(28,2): tree code");
    ex(certificate(10, 2) == certificate(10, 8), "G(10,2) = G(10,8) certificates");
    ex(!is_isomorphic(28, 2, 28, 4), "G(28,2) and G(28,4) differ");
    ex(prime_k_tree_aut_order(8, 2) == 8, "prime-k recursion on G(8,2)");
  });
}

}  // namespace detail

inline VerifyReport run_verify(const VerifyConfig& cfg) {
  cfg.validate();
  detail::Verifier v(cfg);
  const std::vector<std::function<void(detail::Verifier&)>> suites = {
      detail::suite_examples, detail::suite_numtheory, detail::suite_graphs, detail::suite_bounds,
      detail::suite_spectral, detail::suite_aut,       detail::suite_canon};
  for (const auto& suite : suites) {
    if (v.stopped()) break;
    suite(v);
  }
  return v.take();
}

}  // namespace pdg

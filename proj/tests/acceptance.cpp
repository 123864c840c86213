// Acceptance run: one PASS/FAIL line per criterion, each recomputed from the
// library and its brute-force oracles. Usage: pdg_acceptance <path-to-pdg>
// (the CLI is needed for the determinism criterion).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <sys/wait.h>

#include "pdg/pdg.hpp"

using namespace pdg;

namespace {

using Outcome = std::optional<std::string>;  // failure detail, or nothing on success

std::string cell(std::uint64_t n, std::uint64_t k) {
  return "G(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

int failed = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome fail;
  try {
    fail = body();
  } catch (const std::exception& e) {
    fail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!fail && limit_s > 0 && secs >= limit_s)
    fail = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s";
  if (fail) ++failed;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << "criterion " << id << ": " << (fail ? "FAIL" : "PASS") << "  " << title << "  (" << timing << ")";
  if (fail) std::cout << "  -- " << *fail;
  std::cout << std::endl;
}

Outcome g28_report() {
  const AnalysisReport r = analyze(28, 2);
  const GraphFacts& f = r.facts;
  if (f.split.t != 7 || f.split.w != 4 || f.trees.h0 != 2) return "t, w, h0";
  if (r.components != std::vector<ComponentClass>{{1, 1, 4}, {3, 2, 12}}) return "components";
  if (f.cycles.by_length != std::vector<CycleClass>{{1, 1}, {3, 2}}) return "cycle lengths";
  if (f.indegree_zero != 14) return "indegree-0 count";
  if (f.trees.per_tree_levels != std::vector<std::uint64_t>{1, 1, 2}) return "per-tree levels";
  return {};
}

Outcome g40_profile() {
  const TreeProfile tp = tree_profile(40, 4);
  if (tp.h0 != 2 || tp.per_tree_levels != std::vector<std::uint64_t>{1, 3, 4}) return "tree profile";
  if (indegree_zero_in_level(40, 4, 1) != 2) return "indegree_zero_in_level(40,4,1)";
  return {};
}

Outcome spectral() {
  for (std::uint64_t n = 2; n <= 64; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const AdjacencyMatrix m = canonical_matrix(PowerDigraph(n, k));
      if (expand(char_poly(n, k)) != oracle_char_poly(m, 64)) return cell(n, k) + ": characteristic polynomial";
      if (n > 40) continue;
      const FactoredPoly mp = min_poly(n, k);
      if (expand(mp) != oracle_min_poly(m, 40)) return cell(n, k) + ": minimal polynomial";
      const IntMatrix a = m.to_int();
      if (!evaluate(expand(mp), a).is_zero()) return cell(n, k) + ": minimal polynomial does not annihilate";
      if (mp.lambda_power >= 1) {
        FactoredPoly lower = mp;
        --lower.lambda_power;
        if (evaluate(expand(lower), a).is_zero()) return cell(n, k) + ": lower lambda power annihilates";
      }
    }
  return {};
}

Outcome cycle_counts() {
  for (std::uint64_t n = 2; n <= 300; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      std::map<std::uint64_t, std::uint64_t> brute;
      for (const auto& c : brute_cycle_length_multiset(PowerDigraph(n, k))) brute[c.length] = c.multiplicity;
      const std::uint64_t lt = mult_order(k, coprime_split(n, k).t);
      for (std::uint64_t r = 1; r <= lt; ++r) {
        const auto it = brute.find(r);
        if (cycles_of_length(n, k, r) != (it == brute.end() ? 0 : it->second))
          return cell(n, k) + ": r = " + std::to_string(r);
      }
    }
  return {};
}

Outcome tree_theory() {
  for (std::uint64_t n = 2; n <= 300; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const PowerDigraph g(n, k);
      ShapeTable table;
      const ForestShapes fs(g, table);
      const LevelSizes lv = brute_level_sizes(fs.dec);
      const TreeProfile tp = tree_profile(n, k);
      if (tp.per_tree_levels != lv.tree_at_zero || tp.total_levels != lv.total) return cell(n, k) + ": levels";
      for (Vertex a = 0; a < n; ++a)
        if (vertex_height(n, k, a) != fs.dec.height[a]) return cell(n, k) + ": height of " + std::to_string(a);
      for (const auto& comp : fs.dec.components)
        for (Vertex c : comp.cycle_vertices)
          if (fs.shape[c] != fs.shape[0]) return cell(n, k) + ": tree code at root " + std::to_string(c);

      const auto ds = divisors(coprime_split(n, k).t);
      for (std::uint64_t d : ds)
        for (std::uint64_t r : ds)
          if (mult_order(k, std::lcm(d, r)) != std::lcm(mult_order(k, d), mult_order(k, r)))
            return cell(n, k) + ": lcm identity at d = " + std::to_string(d) + ", r = " + std::to_string(r);
    }
  // The gcd analogue must fail: l(gcd(11,15)) = 1 but gcd(l(11), l(15)) = 2.
  const std::uint64_t lhs = mult_order(2, std::gcd(11, 15));
  const std::uint64_t rhs = std::gcd(mult_order(2, 11), mult_order(2, 15));
  if (lhs != 1 || rhs != 2) return "gcd counterexample witness not reproduced";
  return {};
}

Outcome automorphisms() {
  for (std::uint64_t n = 2; n <= 8; ++n)
    for (std::uint64_t k = 1; k <= n; ++k)
      if (aut_order(n, k).total_order != brute_aut_count(PowerDigraph(n, k), AutSearchMode::exhaustive))
        return cell(n, k) + ": exhaustive count";
  const auto sample = detail::backtracking_sample(60, 50);
  if (sample.size() < 50) return "fewer than 50 backtracking samples";
  for (auto [n, k] : sample)
    if (aut_order(n, k).total_order != brute_aut_count(PowerDigraph(n, k), AutSearchMode::backtracking))
      return cell(n, k) + ": backtracking count";
  if (brute_aut_count(PowerDigraph(28, 2), AutSearchMode::backtracking) != 2304) return "G(28,2) backtracking";
  for (std::uint64_t k : {2, 3, 5})
    for (std::uint64_t n = k; n <= 300; n += k)
      if (prime_k_tree_aut_order(n, k) != tree_aut_order(PowerDigraph(n, k), 0))
        return cell(n, k) + ": prime-k recursion";
  for (std::uint64_t n = 2; n <= 300; ++n) {
    if (aut_order(n, 1).total_order != big_factorial(n)) return cell(n, 1) + ": n!";
    if (aut_order(n, n).total_order != big_factorial(n - 1)) return cell(n, n) + ": (n-1)!";
  }
  return {};
}

Outcome isomorphism() {
  if (!is_isomorphic(10, 2, 10, 8)) return "G(10,2) vs G(10,8)";
  for (std::uint64_t n = 3; n <= 61; ++n) {
    if (!is_prime(n)) continue;
    for (std::uint64_t k1 = 2; k1 < n; ++k1)
      for (std::uint64_t k2 = k1 + 1; k2 < n; ++k2)
        if (prime_iso_criterion(n, k1, k2) != (certificate(n, k1) == certificate(n, k2)))
          return "prime criterion at n = " + std::to_string(n) + ", k = " + std::to_string(k1) + ", " +
                 std::to_string(k2);
  }
  for (std::uint64_t n = 2; n <= 40; ++n)
    for (std::uint64_t k1 = 1; k1 <= n; ++k1)
      for (std::uint64_t k2 = k1; k2 <= n; ++k2)
        if (find_isomorphism(PowerDigraph(n, k1), PowerDigraph(n, k2)).has_value() != is_isomorphic(n, k1, n, k2))
          return cell(n, k1) + " vs " + cell(n, k2);
  return {};
}

Outcome bounds() {
  for (std::uint64_t n = 2; n <= 500; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (std::gcd(n, k) != 1 && 2 * brute_level_sizes(PowerDigraph(n, k)).total.back() < n)
        return cell(n, k) + ": |T^h0| < n/2";
      if (n % 2 == 0 && n >= 6 && 2 * longest_cycle_length(n, k) > n - 2) return cell(n, k) + ": longest cycle";
    }
  for (std::uint64_t n : {8, 16, 32})
    if (2 * brute_level_sizes(PowerDigraph(n, 6)).total.back() != n) return cell(n, 6) + ": equality";
  if (2 * longest_cycle_length(10, 2) != 8) return "G(10,2): equality";
  return {};
}

Outcome orbits() {
  for (std::uint64_t n = 2; n <= 200; ++n)
    for (std::uint64_t k = 1; k <= n; ++k) {
      const PowerDigraph g(n, k);
      const auto inv = orbit_invariants(g);
      std::map<std::uint64_t, Vertex> first;
      for (Vertex a = 0; a < n; ++a) {
        const auto [it, fresh] = first.try_emplace(vertex_order(n, a), a);
        if (!fresh && !(inv[a] == inv[it->second])) return cell(n, k) + ": vertex " + std::to_string(a);
      }
      if (n > 8) continue;
      const auto orbit = exhaustive_orbits(g);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
          if ((orbit[a] == orbit[b]) != (inv[a] == inv[b])) return cell(n, k) + ": invariant vs exhaustive orbits";
          if (vertex_order(n, a) == vertex_order(n, b) && orbit[a] != orbit[b])
            return cell(n, k) + ": equal order, different orbits";
        }
    }
  return {};
}

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run(const std::string& command) {
  RunResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome determinism(const std::string& pdg) {
  if (pdg.empty()) return "path to the pdg executable not given";
  const RunResult a = run("'" + pdg + "' verify");
  const RunResult b = run("'" + pdg + "' verify");
  if (a.code != 0 || b.code != 0)
    return "exit codes " + std::to_string(a.code) + ", " + std::to_string(b.code) + "\n" + a.out;
  if (a.out != b.out) return "reports differ";
  if (a.out.find(", failures: 0\n") == std::string::npos) return "summary line missing";
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string pdg = argc > 1 ? argv[1] : "";
  criterion(1, "G(28,2) report: split, components, cycles, levels", 1, g28_report);
  criterion(2, "G(40,4) tree profile and level-1 leaves", 1, g40_profile);
  criterion(3, "characteristic and minimal polynomials vs oracles", 300, spectral);
  criterion(4, "Moebius cycle counts vs enumeration, n <= 300", 120, cycle_counts);
  criterion(5, "levels, heights, tree-code constancy, lcm identity, gcd witness", 0, tree_theory);
  criterion(6, "automorphism orders vs exhaustive, backtracking, recursion", 0, automorphisms);
  criterion(7, "isomorphism verdicts vs prime criterion and bijection search", 0, isomorphism);
  criterion(8, "level and cycle-length bounds with equality cases", 0, bounds);
  criterion(9, "equal vertex order implies equal orbit", 0, orbits);
  criterion(10, "verify is deterministic, clean, and fast", 600, [&] { return determinism(pdg); });
  std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << " (" << (10 - failed) << "/10)" << std::endl;
  return failed ? 1 : 0;
}

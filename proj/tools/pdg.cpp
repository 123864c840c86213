// pdg: command-line front end for the power digraph library.
//
// Exit codes: 0 success or isomorphic, 1 verification failure or not
// isomorphic, 2 usage error, 3 a brute-force cap was exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "pdg/pdg.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kCap = 3;

struct Pair {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
};

void add_pair(CLI::App* cmd, Pair& p) {
  cmd->add_option("N", p.n, "group order n > 1")->required();
  cmd->add_option("K", p.k, "exponent k, 1 <= k <= n")->required();
}

pdg::PowerDigraph graph_of(const Pair& p) { return pdg::PowerDigraph(p.n, p.k); }

void print_json(const pdg::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional digraphs of power maps on cyclic groups"};
  app.require_subcommand(1);

  Pair pr;
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "full structural report");
  add_pair(analyze, pr);
  analyze->add_flag("--json", json, "emit JSON instead of the text table");

  auto* dot = app.add_subcommand("dot", "Graphviz DOT on standard output");
  add_pair(dot, pr);

  std::string order = "canonical";
  auto* matrix = app.add_subcommand("matrix", "adjacency matrix");
  add_pair(matrix, pr);
  matrix->add_option("--order", order, "vertex ordering")->check(CLI::IsMember({"canonical", "natural"}));
  matrix->add_flag("--json", json, "emit JSON");

  bool expand = false, check = false;
  std::size_t max_matrix_n = pdg::kDefaultCharOracleCap, max_minpoly_n = pdg::kDefaultMinOracleCap;
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  add_pair(charpoly, pr);
  charpoly->add_flag("--expand", expand, "print expanded coefficients");
  charpoly->add_flag("--check", check, "compare against the Berkowitz oracle");
  charpoly->add_option("--max-matrix-n", max_matrix_n, "oracle size cap");
  auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial");
  add_pair(minpoly, pr);
  minpoly->add_flag("--expand", expand, "print expanded coefficients");
  minpoly->add_flag("--check", check, "compare against the annihilation oracle");
  minpoly->add_option("--max-minpoly-n", max_minpoly_n, "oracle size cap");

  bool brute = false;
  std::size_t max_backtrack_n = pdg::kDefaultBacktrackCap;
  auto* aut = app.add_subcommand("aut", "automorphism group order and structure");
  add_pair(aut, pr);
  aut->add_flag("--brute", brute, "also count automorphisms by backtracking search");
  aut->add_option("--max-backtrack-n", max_backtrack_n, "search size cap");
  aut->add_flag("--json", json, "emit JSON");

  auto* cert = app.add_subcommand("cert", "canonical certificate");
  add_pair(cert, pr);

  Pair second;
  auto* iso = app.add_subcommand("iso", "isomorphism test; exit 0 if isomorphic, 1 if not");
  iso->add_option("N1", pr.n)->required();
  iso->add_option("K1", pr.k)->required();
  iso->add_option("N2", second.n)->required();
  iso->add_option("K2", second.k)->required();

  std::uint64_t census_n = 0;
  auto* census = app.add_subcommand("census", "isomorphism classes of G(n,k) over k = 1..n");
  census->add_option("N", census_n)->required();

  pdg::VerifyConfig cfg;
  std::string fault = "none";
  auto* verify = app.add_subcommand("verify", "run every theory-versus-oracle suite");
  verify->add_option("--max-n", cfg.max_n, "graph sweep limit")->capture_default_str();
  verify->add_option("--max-matrix-n", cfg.max_matrix_n, "characteristic polynomial oracle cap")->capture_default_str();
  verify->add_option("--max-minpoly-n", cfg.max_minpoly_n, "minimal polynomial oracle cap")->capture_default_str();
  verify->add_option("--max-exhaustive-n", cfg.max_exhaustive_n, "exhaustive permutation cap")->capture_default_str();
  verify->add_option("--backtracking-samples", cfg.backtracking_samples, "backtracking sample count")
      ->capture_default_str();
  verify->add_flag("--fail-fast", cfg.fail_fast, "stop at the first failed check");
  verify->add_option("--inject-fault", fault, "corrupt one closed form (harness self-test)")
      ->check(CLI::IsMember({"none", "cycle_count", "level_sizes", "char_poly", "aut_order"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*analyze) {
      const auto g = graph_of(pr);
      const auto rep = pdg::analyze(g.n(), g.k());
      if (json) print_json(pdg::to_json(rep));
      else std::cout << pdg::to_text(rep);
    } else if (*dot) {
      std::cout << pdg::to_dot(graph_of(pr)) << "\n";
    } else if (*matrix) {
      const auto g = graph_of(pr);
      const auto m = order == "natural" ? pdg::natural_matrix(g) : pdg::canonical_matrix(g);
      if (json) print_json(pdg::matrix_json(m, order));
      else std::cout << pdg::matrix_text(m);
    } else if (charpoly->parsed() || minpoly->parsed()) {
      const auto g = graph_of(pr);
      const bool is_char = charpoly->parsed();
      const auto f = is_char ? pdg::char_poly(g.n(), g.k()) : pdg::min_poly(g.n(), g.k());
      std::cout << (expand ? pdg::to_string(pdg::expand(f)) : pdg::to_string(f)) << "\n";
      if (check) {
        const auto m = pdg::canonical_matrix(g);
        const auto oracle = is_char ? pdg::oracle_char_poly(m, max_matrix_n) : pdg::oracle_min_poly(m, max_minpoly_n);
        const bool same = oracle == pdg::expand(f);
        std::cout << "oracle: " << (same ? "agrees" : "DISAGREES " + pdg::to_string(oracle)) << "\n";
        if (!same) return 1;
      }
    } else if (*aut) {
      const auto g = graph_of(pr);
      const auto rep = pdg::aut_order(g.n(), g.k());
      if (json) {
        auto j = pdg::to_json(rep);
        if (brute)
          j["brute_force_order"] =
              pdg::to_decimal(pdg::brute_aut_count(g, pdg::AutSearchMode::backtracking, 0, max_backtrack_n));
        print_json(j);
      } else {
        std::cout << "|Aut(T1)| = " << pdg::to_decimal(rep.tree_aut_order) << "\n";
        std::cout << "|Aut| = " << pdg::to_decimal(rep.total_order) << "\n";
        std::cout << "Aut = " << rep.structure << "\n";
        if (brute)
          std::cout << "backtracking count = "
                    << pdg::to_decimal(pdg::brute_aut_count(g, pdg::AutSearchMode::backtracking, 0, max_backtrack_n))
                    << "\n";
      }
    } else if (*cert) {
      const auto g = graph_of(pr);
      std::cout << pdg::to_string(pdg::certificate(g.n(), g.k())) << "\n";
    } else if (*iso) {
      const auto g1 = graph_of(pr), g2 = graph_of(second);
      const auto c1 = pdg::certificate(g1.n(), g1.k()), c2 = pdg::certificate(g2.n(), g2.k());
      std::cout << pdg::to_string(c1) << "\n" << pdg::to_string(c2) << "\n";
      const bool same = c1 == c2;
      std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? 0 : 1;
    } else if (*census) {
      if (census_n < 2) throw pdg::DomainError("n must be at least 2");
      std::map<std::string, std::vector<std::uint64_t>> classes;
      std::vector<std::string> first_seen;
      for (std::uint64_t k = 1; k <= census_n; ++k) {
        const std::string c = pdg::to_string(pdg::certificate(census_n, k));
        auto& ks = classes[c];
        if (ks.empty()) first_seen.push_back(c);
        ks.push_back(k);
      }
      std::cout << "n = " << census_n << ": " << classes.size() << " classes\n";
      for (const auto& c : first_seen) {
        std::cout << c << "  k =";
        for (auto k : classes[c]) std::cout << " " << k;
        std::cout << "\n";
      }
    } else if (*verify) {
      cfg.fault = pdg::parse_fault(fault);
      const auto rep = pdg::run_verify(cfg);
      std::cout << rep.render();
      return rep.ok() ? 0 : 1;
    }
  } catch (const pdg::CapExceeded& e) {
    std::cerr << "pdg: " << e.what() << "\n";
    return kCap;
  } catch (const pdg::DomainError& e) {
    std::cerr << "pdg: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "pdg: internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

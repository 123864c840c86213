// Reproduces the running example G(28,2): three components, one fixed point
// and two 3-cycles, each cycle vertex carrying a tree with levels 1, 1, 2.

#include <iostream>

#include "pdg/pdg.hpp"

int main() {
  const pdg::AnalysisReport rep = pdg::analyze(28, 2);
  std::cout << pdg::to_text(rep) << "\n";

  const pdg::PowerDigraph g(28, 2);
  const pdg::Decomposition dec = pdg::decompose(g);
  for (const auto& comp : dec.components) {
    std::cout << "component at " << comp.representative << ": cycle";
    for (pdg::Vertex v : comp.cycle_vertices) std::cout << " " << v;
    std::cout << ", " << comp.size << " vertices\n";
  }
  std::cout << "\n" << pdg::to_dot(g) << "\n";
}

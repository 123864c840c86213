#pragma once

/**
 * @file report.hpp
 * @brief Full analysis of one G(n,k) and its export formats: JSON, a text
 * table, Graphviz DOT, and adjacency-matrix dumps.
 *
 * JSON keeps machine integers as numbers and every group order as a decimal
 * string. Fields marked "display" are derived from the others, written for
 * readers, and ignored when parsing back.
 */

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdg/aut.hpp"
#include "pdg/canon.hpp"
#include "pdg/spectral.hpp"
#include "pdg/structure.hpp"

namespace pdg {

using Json = nlohmann::ordered_json;

/// Components grouped by cycle length; each has cycle_length * w vertices.
struct ComponentClass {
  std::uint64_t cycle_length = 0;
  std::uint64_t count = 0;
  std::uint64_t size = 0;

  bool operator==(const ComponentClass&) const = default;
};

struct AnalysisReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  GraphFacts facts;
  std::vector<ComponentClass> components;
  FactoredPoly char_poly;
  FactoredPoly min_poly;
  std::vector<SpectrumEntry> spectrum;
  AutReport aut;
  CanonicalCert cert;

  bool operator==(const AnalysisReport&) const = default;
};

inline AnalysisReport analyze(std::uint64_t n, std::uint64_t k) {
  AnalysisReport rep;
  rep.n = n;
  rep.k = k;
  rep.facts = graph_facts(n, k);
  for (const auto& c : rep.facts.cycles.by_length)
    rep.components.push_back({c.length, c.multiplicity, c.length * rep.facts.split.w});
  rep.char_poly = char_poly(n, k);
  rep.min_poly = min_poly(n, k);
  rep.spectrum = spectrum(rep.char_poly);
  rep.aut = aut_order(n, k);
  rep.cert = certificate(n, k);
  return rep;
}

// ---- JSON ------------------------------------------------------------------

namespace detail {

inline BigCount big_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("expected a decimal string for a big integer");
  return from_decimal(j.get<std::string>());
}

inline Json cycle_classes_json(const std::vector<CycleClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) out.push_back({{"length", c.length}, {"multiplicity", c.multiplicity}});
  return out;
}

inline std::vector<CycleClass> cycle_classes_from(const Json& j) {
  std::vector<CycleClass> out;
  for (const auto& c : j) out.push_back({c.at("length").get<std::uint64_t>(), c.at("multiplicity").get<std::uint64_t>()});
  return out;
}

}  // namespace detail

inline Json to_json(const FactoredPoly& p) {
  Json factors = Json::array();
  for (const auto& f : p.cycle_factors) factors.push_back({{"r", f.r}, {"e", f.e}});
  return {{"lambda_power", p.lambda_power}, {"cycle_factors", factors}, {"text", to_string(p)}};
}

inline FactoredPoly factored_poly_from_json(const Json& j) {
  FactoredPoly p;
  p.lambda_power = j.at("lambda_power").get<std::uint64_t>();
  for (const auto& f : j.at("cycle_factors"))
    p.cycle_factors.push_back({f.at("r").get<std::uint64_t>(), f.at("e").get<std::uint64_t>()});
  return p;
}

inline Json to_json(const AutReport& a) {
  Json classes = Json::array();
  for (const auto& c : a.per_class)
    classes.push_back({{"cycle_length", c.cycle_length},
                       {"multiplicity", c.multiplicity},
                       {"component_order", to_decimal(c.component_order)}});
  return {{"tree_aut_order", to_decimal(a.tree_aut_order)},
          {"per_class", classes},
          {"total_order", to_decimal(a.total_order)},
          {"structure", a.structure}};
}

inline AutReport aut_report_from_json(const Json& j) {
  AutReport a;
  a.tree_aut_order = detail::big_from_json(j.at("tree_aut_order"));
  for (const auto& c : j.at("per_class"))
    a.per_class.push_back({c.at("cycle_length").get<std::uint64_t>(), c.at("multiplicity").get<std::uint64_t>(),
                           detail::big_from_json(c.at("component_order"))});
  a.total_order = detail::big_from_json(j.at("total_order"));
  a.structure = j.at("structure").get<std::string>();
  return a;
}

inline Json to_json(const CanonicalCert& c) {
  return {{"vertex_count", c.vertex_count},
          {"tree_code", c.tree_code.code},
          {"cycle_multiset", detail::cycle_classes_json(c.cycle_multiset)},
          {"text", to_string(c)}};
}

inline CanonicalCert certificate_from_json(const Json& j) {
  CanonicalCert c;
  c.vertex_count = j.at("vertex_count").get<std::uint64_t>();
  c.tree_code.code = j.at("tree_code").get<std::string>();
  c.cycle_multiset = detail::cycle_classes_from(j.at("cycle_multiset"));
  return c;
}

inline Json to_json(const AnalysisReport& r) {
  const GraphFacts& f = r.facts;
  Json per_order = Json::array();
  for (const auto& rec : f.cycles.per_order)
    per_order.push_back({{"order", rec.order}, {"length", rec.length}, {"count", rec.count}});
  Json components = Json::array();
  for (const auto& c : r.components)
    components.push_back({{"cycle_length", c.cycle_length}, {"count", c.count}, {"size", c.size}});
  Json spec = Json::array();
  for (const auto& e : r.spectrum)
    spec.push_back({{"zero", e.value.is_zero},
                    {"order", e.value.order},
                    {"exponent", e.value.exponent},
                    {"multiplicity", e.multiplicity},
                    {"value", to_string(e.value)}});
  return {
      {"n", r.n},
      {"k", r.k},
      {"t", f.split.t},
      {"w", f.split.w},
      {"gcd_nk", f.gcd_nk},
      {"cycles",
       {{"per_order", per_order},
        {"by_length", detail::cycle_classes_json(f.cycles.by_length)},
        {"total", f.cycles.total_cycles},
        {"longest", f.cycles.longest}}},
      {"trees",
       {{"h0", f.trees.h0},
        {"per_tree_levels", f.trees.per_tree_levels},
        {"total_levels", f.trees.total_levels},
        {"tree_size", f.trees.tree_size}}},
      {"indegree_zero", f.indegree_zero},
      {"predicates",
       {{"connected", f.predicates.connected},
        {"regular", f.predicates.regular},
        {"arc_transitive", f.predicates.arc_transitive},
        {"vertex_transitive", f.predicates.vertex_transitive},
        {"generators_indegree_zero", f.predicates.generators_indegree_zero}}},
      {"components", components},
      {"char_poly", to_json(r.char_poly)},
      {"min_poly", to_json(r.min_poly)},
      {"spectrum", spec},
      {"aut", to_json(r.aut)},
      {"certificate", to_json(r.cert)},
  };
}

inline AnalysisReport analysis_from_json(const Json& j) {
  AnalysisReport r;
  r.n = j.at("n").get<std::uint64_t>();
  r.k = j.at("k").get<std::uint64_t>();
  GraphFacts& f = r.facts;
  f.split = {r.n, r.k, j.at("t").get<std::uint64_t>(), j.at("w").get<std::uint64_t>()};
  f.gcd_nk = j.at("gcd_nk").get<std::uint64_t>();
  const Json& cy = j.at("cycles");
  for (const auto& rec : cy.at("per_order"))
    f.cycles.per_order.push_back({rec.at("order").get<std::uint64_t>(), rec.at("length").get<std::uint64_t>(),
                                  rec.at("count").get<std::uint64_t>()});
  f.cycles.by_length = detail::cycle_classes_from(cy.at("by_length"));
  f.cycles.total_cycles = cy.at("total").get<std::uint64_t>();
  f.cycles.longest = cy.at("longest").get<std::uint64_t>();
  const Json& tr = j.at("trees");
  f.trees.h0 = tr.at("h0").get<std::uint64_t>();
  f.trees.per_tree_levels = tr.at("per_tree_levels").get<std::vector<std::uint64_t>>();
  f.trees.total_levels = tr.at("total_levels").get<std::vector<std::uint64_t>>();
  f.trees.tree_size = tr.at("tree_size").get<std::uint64_t>();
  f.indegree_zero = j.at("indegree_zero").get<std::uint64_t>();
  const Json& pr = j.at("predicates");
  f.predicates = {pr.at("connected").get<bool>(), pr.at("regular").get<bool>(),
                  pr.at("arc_transitive").get<bool>(), pr.at("vertex_transitive").get<bool>(),
                  pr.at("generators_indegree_zero").get<bool>()};
  for (const auto& c : j.at("components"))
    r.components.push_back({c.at("cycle_length").get<std::uint64_t>(), c.at("count").get<std::uint64_t>(),
                            c.at("size").get<std::uint64_t>()});
  r.char_poly = factored_poly_from_json(j.at("char_poly"));
  r.min_poly = factored_poly_from_json(j.at("min_poly"));
  for (const auto& e : j.at("spectrum"))
    r.spectrum.push_back({{e.at("zero").get<bool>(), e.at("order").get<std::uint64_t>(),
                           e.at("exponent").get<std::uint64_t>()},
                          e.at("multiplicity").get<std::uint64_t>()});
  r.aut = aut_report_from_json(j.at("aut"));
  r.cert = certificate_from_json(j.at("certificate"));
  return r;
}

// ---- text ------------------------------------------------------------------

namespace detail {
inline std::string join(const std::vector<std::uint64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}
inline const char* yes_no(bool b) { return b ? "yes" : "no"; }
}  // namespace detail

inline std::string to_text(const AnalysisReport& r) {
  const GraphFacts& f = r.facts;
  std::ostringstream out;
  out << "G(" << r.n << "," << r.k << ")\n";
  out << "  t = " << f.split.t << ", w = " << f.split.w << ", gcd(n,k) = " << f.gcd_nk << "\n";
  out << "  h0 = " << f.trees.h0 << ", l(t) = " << f.cycles.longest << "\n";
  out << "  indegree-0 vertices = " << f.indegree_zero << "\n";
  out << "  connected: " << detail::yes_no(f.predicates.connected)
      << ", regular: " << detail::yes_no(f.predicates.regular)
      << ", transitive: " << detail::yes_no(f.predicates.vertex_transitive)
      << ", generators indegree 0: " << detail::yes_no(f.predicates.generators_indegree_zero) << "\n";
  out << "\ncycles by order\n" << std::setw(8) << "order" << std::setw(8) << "length" << std::setw(8) << "count" << "\n";
  for (const auto& rec : f.cycles.per_order)
    out << std::setw(8) << rec.order << std::setw(8) << rec.length << std::setw(8) << rec.count << "\n";
  out << "  total cycles = " << f.cycles.total_cycles << "\n";
  out << "\ncomponents\n" << std::setw(8) << "length" << std::setw(8) << "count" << std::setw(8) << "size" << "\n";
  for (const auto& c : r.components)
    out << std::setw(8) << c.cycle_length << std::setw(8) << c.count << std::setw(8) << c.size << "\n";
  out << "\nlevels\n" << std::setw(8) << "m" << std::setw(10) << "per tree" << std::setw(8) << "total" << "\n";
  for (std::size_t m = 0; m < f.trees.per_tree_levels.size(); ++m)
    out << std::setw(8) << m << std::setw(10) << f.trees.per_tree_levels[m] << std::setw(8) << f.trees.total_levels[m] << "\n";
  out << "\ncharacteristic polynomial  " << to_string(r.char_poly) << "\n";
  out << "minimal polynomial         " << to_string(r.min_poly) << "\n";
  out << "\n|Aut(T1)| = " << to_decimal(r.aut.tree_aut_order) << "\n";
  out << "|Aut| = " << to_decimal(r.aut.total_order) << "\n";
  out << "Aut = " << r.aut.structure << "\n";
  out << "certificate " << to_string(r.cert) << "\n";
  return out.str();
}

// ---- DOT and matrices ------------------------------------------------------

/// One edge line per vertex, ascending label, no layout hints, no trailing newline.
inline std::string to_dot(const PowerDigraph& g) {
  std::string out = "digraph G_" + std::to_string(g.n()) + "_" + std::to_string(g.k()) + " {\n";
  for (Vertex a = 0; a < g.size(); ++a) out += std::to_string(a) + " -> " + std::to_string(g.succ(a)) + ";\n";
  return out + "}";
}

inline std::string matrix_text(const AdjacencyMatrix& m) {
  std::string out;
  out.reserve(m.size() * m.size() * 2);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ' ';
      out += m.at(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

inline Json matrix_json(const AdjacencyMatrix& m, const std::string& order) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  Json out = {{"n", m.n}, {"k", m.k}, {"order", order}, {"ordering", m.ordering}};
  if (!m.block_sizes.empty()) out["blocks"] = m.block_sizes;
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace pdg

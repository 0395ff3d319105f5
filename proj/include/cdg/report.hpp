#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "cdg/checks.hpp"
#include "cdg/enumerate.hpp"
#include "cdg/io.hpp"
#include "cdg/lewis.hpp"

// JSON and terminal renderings. JSON objects keep insertion order so the same
// input always produces the same bytes.
namespace cdg::report {

using Json = nlohmann::ordered_json;

inline Json distance_json(Distance d) {
  return d == kUnreachable ? Json("infinite") : Json(d);
}

inline Json to_json(const CheckEntry& e) {
  return Json{{"id", e.id},
              {"verdict", to_string(e.verdict)},
              {"witness", e.witness},
              {"citation", e.citation},
              {"detail", e.detail}};
}

inline Json to_json(const TheoremVerdict& t) {
  return Json{{"id", t.id}, {"verdict", to_string(t.verdict)}, {"vacuous", t.vacuous}, {"detail", t.detail}};
}

inline Json to_json(const PartitionFlag& f) { return Json{{"ok", f.ok}, {"witness", f.witness}}; }

inline Json to_json(const PartitionValidity& v) {
  return Json{{"valid", v.valid()},
              {"all_nonempty", v.all_nonempty},
              {"rho12_complete", to_json(v.rho12_complete)},
              {"rho34_complete", to_json(v.rho34_complete)},
              {"no_rho1_to_rho34_edges", to_json(v.no_rho1_to_rho34_edges)},
              {"no_rho4_to_rho12_edges", to_json(v.no_rho4_to_rho12_edges)},
              {"rho2_rho3_mutual_adjacency", to_json(v.rho2_rho3_mutual_adjacency)}};
}

inline Json to_json(const OddDegreeVerdict& v) {
  return Json{{"is_all_odd", v.is_all_odd},
              {"is_block", v.is_block},
              {"rho12_size", v.rho12_size},
              {"rho12_even", v.rho12_even()},
              {"rho34_size", v.rho34_size},
              {"rho34_even", v.rho34_even()},
              {"rho23_eulerian", v.rho23_eulerian},
              {"eulerian_predicate", to_string(v.mode)},
              {"conditions_hold", v.conditions_hold()},
              {"characterization_holds", v.characterization_holds()}};
}

inline Json to_json(const LewisAnalysis& a) {
  const auto& p = a.partition;
  Json j{{"r", p.base},      {"s", p.far},       {"rho1", p.rho1},
         {"rho2", p.rho2},   {"rho3", p.rho3},   {"rho4", p.rho4},
         {"validity", to_json(a.validity)}};
  Json verdicts{{"odd_degree", a.odd_degree ? to_json(*a.odd_degree) : Json(nullptr)},
                {"rho2_cut_vertex", to_json(a.rho2_cut_vertex)},
                {"block_rho_sizes", to_json(a.block_rho_sizes)}};
  j["verdicts"] = std::move(verdicts);
  return j;
}

inline Json lewis_json(const Graph& g, EulerianMode mode) {
  Json j{{"graph", encode_graph6(g)}};
  if (auto a = analyze_lewis(g, mode)) {
    j["applicable"] = true;
    j["partition"] = to_json(*a);
  } else {
    j["applicable"] = false;
    j["reason"] = "graph is not connected with diameter exactly 3";
  }
  return j;
}

inline Json check_json(const Graph& g, const CheckReport& r, EulerianMode mode) {
  Json checks = Json::array();
  for (const auto& e : r.checks) checks.push_back(to_json(e));
  Json fitting = nullptr;
  if (r.fitting_height) {
    fitting = Json{{"witness", {r.fitting_height->first, r.fitting_height->second}},
                   {"note", r.fitting_height->note},
                   {"citation", r.fitting_height->citation}};
  }
  const auto reg = is_regular(g);
  Json analysis{{"vertices", g.size()},
                {"edges", g.edge_count()},
                {"degrees", degree_multiset(g)},
                {"all_degrees_odd", all_degrees_odd(g)},
                {"is_block", is_block(g)},
                {"is_complete", is_complete(g)},
                {"is_regular", reg.regular},
                {"diameter", distance_json(diameter(g))},
                {"odd_implies_block", to_json(check_odd_implies_block(g))},
                {"regular_not_odd", to_json(check_regular_not_odd(g))}};
  if (auto a = analyze_lewis(g, mode)) {
    analysis["lewis"] = to_json(*a);
  } else {
    analysis["lewis"] = nullptr;
  }
  return Json{{"graph", encode_graph6(g)},
              {"checks", std::move(checks)},
              {"overall", r.admissible() ? "admissible" : "not admissible"},
              {"fitting_height", std::move(fitting)},
              {"analysis", std::move(analysis)}};
}

inline Json to_json(const EnumerationSummary& s) {
  Json characterization = Json::object();
  for (const auto& [mode, list] : s.characterization_discrepancies) {
    characterization[std::string(to_string(mode))] = list;
  }
  return Json{{"n", s.n},
              {"total_nonisomorphic", s.total_nonisomorphic},
              {"admissible", s.admissible},
              {"all_odd_admissible", s.all_odd_admissible},
              {"non_regular_all_odd_admissible", s.non_regular_all_odd_admissible},
              {"diameter3_admissible", s.diameter3_admissible},
              {"valid_partition_admissible", s.valid_partition_admissible},
              {"characterization_discrepancies", std::move(characterization)},
              {"odd_block_discrepancies", s.odd_block_discrepancies},
              {"connected_odd_block_discrepancies", s.connected_odd_block_discrepancies},
              {"regular_odd_discrepancies", s.regular_odd_discrepancies},
              {"rho2_cut_vertex_discrepancies", s.rho2_cut_vertex_discrepancies},
              {"block_rho_sizes_discrepancies", s.block_rho_sizes_discrepancies},
              {"published_classified_count",
               s.published_classified_count ? Json(*s.published_classified_count) : Json(nullptr)}};
}

namespace detail {

inline std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline std::string lewis_text(const LewisAnalysis& a) {
  using detail::set_text;
  using detail::yes_no;
  const auto& p = a.partition;
  std::ostringstream out;
  out << "lewis partition (r=" << p.base << ", s=" << p.far << ")\n"
      << "  rho1 " << set_text(p.rho1) << "\n  rho2 " << set_text(p.rho2) << "\n  rho3 "
      << set_text(p.rho3) << "\n  rho4 " << set_text(p.rho4) << "\n"
      << "  valid: " << yes_no(a.validity.valid()) << "\n";
  auto flag = [&](const char* name, const PartitionFlag& f) {
    out << "    " << name << ": " << (f.ok ? "ok" : "violated " + set_text(f.witness)) << "\n";
  };
  flag("rho1 u rho2 complete", a.validity.rho12_complete);
  flag("rho3 u rho4 complete", a.validity.rho34_complete);
  flag("no rho1 -- rho3 u rho4 edges", a.validity.no_rho1_to_rho34_edges);
  flag("no rho4 -- rho1 u rho2 edges", a.validity.no_rho4_to_rho12_edges);
  flag("rho2/rho3 mutual adjacency", a.validity.rho2_rho3_mutual_adjacency);
  if (a.odd_degree) {
    const auto& v = *a.odd_degree;
    out << "  odd-degree characterization (" << to_string(v.mode) << " Eulerian predicate)\n"
        << "    all degrees odd: " << yes_no(v.is_all_odd) << "\n"
        << "    block: " << yes_no(v.is_block) << "\n"
        << "    |rho1 u rho2| = " << v.rho12_size << (v.rho12_even() ? " (even)" : " (odd)") << "\n"
        << "    |rho3 u rho4| = " << v.rho34_size << (v.rho34_even() ? " (even)" : " (odd)") << "\n"
        << "    rho2 u rho3 Eulerian: " << yes_no(v.rho23_eulerian) << "\n"
        << "    biconditional: " << (v.characterization_holds() ? "holds" : "DISCREPANCY") << "\n";
  }
  for (const auto* t : {&a.rho2_cut_vertex, &a.block_rho_sizes}) {
    out << "  " << t->id << ": " << to_string(t->verdict) << " (" << t->detail << ")\n";
  }
  return out.str();
}

inline std::string check_text(const Graph& g, const CheckReport& r, EulerianMode mode) {
  std::ostringstream out;
  out << "graph " << encode_graph6(g) << " (" << g.size() << " vertices, " << g.edge_count()
      << " edges)\n";
  for (const auto& e : r.checks) {
    out << "  [" << to_string(e.verdict) << "] " << e.id;
    if (!e.detail.empty()) out << ": " << e.detail;
    if (!e.witness.empty()) out << " witness " << detail::set_text(e.witness);
    out << "\n      " << e.citation << "\n";
  }
  out << "overall: " << (r.admissible() ? "admissible" : "not admissible")
      << " (necessary conditions only)\n";
  if (r.fitting_height) {
    out << "note: " << r.fitting_height->note << " (witness " << r.fitting_height->first << ","
        << r.fitting_height->second << ")\n      " << r.fitting_height->citation << "\n";
  }
  const auto d = diameter(g);
  out << "all-odd=" << (all_degrees_odd(g) ? "true" : "false")
      << " block=" << (is_block(g) ? "true" : "false")
      << " diameter=" << (d == kUnreachable ? std::string("infinite") : std::to_string(d)) << "\n";
  for (const auto& t : {check_odd_implies_block(g), check_regular_not_odd(g)}) {
    out << t.id << ": " << to_string(t.verdict) << (t.vacuous ? " (vacuous)" : "");
    if (!t.detail.empty()) out << " (" << t.detail << ")";
    out << "\n";
  }
  if (auto a = analyze_lewis(g, mode)) out << lewis_text(*a);
  return out.str();
}

}  // namespace cdg::report

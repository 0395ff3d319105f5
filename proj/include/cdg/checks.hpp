#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdg/canonical.hpp"
#include "cdg/graph.hpp"
#include "cdg/traversal.hpp"

namespace cdg {

enum class Verdict { pass, fail, not_applicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

namespace citation {
inline constexpr std::string_view kPalfy =
    "Palfy three-prime theorem: among any three vertices two are adjacent";
inline constexpr std::string_view kComponents =
    "Manz: a solvable group's degree graph has at most two connected components";
inline constexpr std::string_view kDiameter =
    "Manz-Staszewski-Willems: each component has diameter at most 3";
inline constexpr std::string_view kForbiddenPath =
    "Zhang, Theorem 5: the path on four vertices is not a solvable group's degree graph";
inline constexpr std::string_view kCutVertices =
    "Lewis, Theorem 1.1: a solvable group's degree graph has at most one cut vertex";
inline constexpr std::string_view kRegular =
    "Morresi Zuccari, Theorem A: a non-complete regular degree graph on n vertices is (n-2)-regular";
inline constexpr std::string_view kFittingHeight =
    "Lewis, Corollary B: two nonadjacent vertices of degree < n-2 force Fitting height >= 3";
}  // namespace citation

struct CheckEntry {
  std::string id;
  Verdict verdict = Verdict::pass;
  VertexSet witness;  // empty unless the check failed
  std::string citation;
  std::string detail;
};

struct FittingHeightNote {
  Vertex first;
  Vertex second;
  std::string note;
  std::string citation;
};

struct CheckReport {
  std::vector<CheckEntry> checks;
  std::optional<FittingHeightNote> fitting_height;

  // Passing every necessary condition. Not a certificate that the graph is
  // the degree graph of a solvable group.
  [[nodiscard]] bool admissible() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckEntry& c) { return c.verdict == Verdict::fail; });
  }

  [[nodiscard]] const CheckEntry* find(std::string_view id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
};

// Independence number <= 2. Witness: the lexicographically first independent
// triple.
inline CheckEntry check_palfy(const Graph& g) {
  CheckEntry e{"palfy", Verdict::pass, {}, std::string(citation::kPalfy), ""};
  const std::size_t n = g.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) && !g.adjacent(b, c)) {
          e.verdict = Verdict::fail;
          e.witness = {a, b, c};
          e.detail = "independent triple";
          return e;
        }
      }
    }
  }
  return e;
}

// Witness on failure: the smallest vertex of each of the first three
// components.
inline CheckEntry check_component_bound(const Graph& g) {
  CheckEntry e{"component_bound", Verdict::pass, {}, std::string(citation::kComponents), ""};
  const auto comps = connected_components(g);
  e.detail = std::to_string(comps.size()) + " component(s)";
  if (comps.size() > 2) {
    e.verdict = Verdict::fail;
    e.witness = {comps[0].front(), comps[1].front(), comps[2].front()};
  }
  return e;
}

// Applied per component: cross-component distances are ignored. Witness: a
// pair in one component at distance > 3.
inline CheckEntry check_diameter_bound(const Graph& g) {
  CheckEntry e{"diameter_bound", Verdict::pass, {}, std::string(citation::kDiameter), ""};
  Distance worst = 0;
  for (Vertex u = 0; u < g.size(); ++u) {
    const auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (dist[v] == kUnreachable) continue;
      if (dist[v] > worst) worst = dist[v];
      if (dist[v] > 3 && e.verdict == Verdict::pass) {
        e.verdict = Verdict::fail;
        e.witness = {u, v};
      }
    }
  }
  e.detail = "largest component diameter " + std::to_string(worst);
  return e;
}

// Exact isomorphism with the 4-vertex path, not subgraph containment.
// Witness: the vertices in path order.
inline CheckEntry check_forbidden_p4(const Graph& g) {
  CheckEntry e{"forbidden_p4", Verdict::pass, {}, std::string(citation::kForbiddenPath), ""};
  if (g.size() != 4 || g.edge_count() != 3) return e;
  static const Graph kPath = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  if (!is_isomorphic(g, kPath)) return e;
  Vertex end = 0;
  while (g.degree(end) != 1) ++end;
  VertexSet path{end};
  while (path.size() < 4) {
    for (Vertex v : g.neighbors(path.back())) {
      if (path.size() == 1 || v != path[path.size() - 2]) {
        path.push_back(v);
        break;
      }
    }
  }
  e.verdict = Verdict::fail;
  e.witness = std::move(path);
  e.detail = "graph is the path on four vertices";
  return e;
}

inline CheckEntry check_cut_vertices(const Graph& g) {
  CheckEntry e{"cut_vertices", Verdict::pass, {}, std::string(citation::kCutVertices), ""};
  auto cuts = block_decomposition(g).cut_vertices;
  e.detail = std::to_string(cuts.size()) + " cut vertex(es)";
  if (cuts.size() >= 2) {
    e.verdict = Verdict::fail;
    e.witness = std::move(cuts);
  }
  return e;
}

// Not applicable to complete or non-regular graphs. Witness on failure:
// vertex 0, whose degree is the common degree k != n-2.
inline CheckEntry check_regular_rule(const Graph& g) {
  CheckEntry e{"regular_rule", Verdict::not_applicable, {}, std::string(citation::kRegular), ""};
  const auto reg = is_regular(g);
  if (is_complete(g) || !reg.regular) return e;
  const std::size_t n = g.size();
  e.detail = std::to_string(reg.degree) + "-regular on " + std::to_string(n) + " vertices";
  if (reg.degree + 2 == n) {
    e.verdict = Verdict::pass;
  } else {
    e.verdict = Verdict::fail;
    e.witness = {0};
  }
  return e;
}

// Some pair of nonadjacent vertices each of degree < n-2; the smallest such
// pair is the witness.
inline std::optional<FittingHeightNote> infer_fitting_height(const Graph& g) {
  require_nonempty(g, "infer_fitting_height");
  const std::size_t n = g.size();
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) + 2 >= n) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) || g.degree(v) + 2 >= n) continue;
      return FittingHeightNote{u, v,
                               "any solvable group with this degree graph has Fitting height >= 3",
                               std::string(citation::kFittingHeight)};
    }
  }
  return std::nullopt;
}

// Cheap structural checks first, the isomorphism-based one last; every check
// runs even after a failure.
inline CheckReport run_battery(const Graph& g) {
  require_nonempty(g, "run_battery");
  CheckReport report;
  report.checks.push_back(check_palfy(g));
  report.checks.push_back(check_component_bound(g));
  report.checks.push_back(check_diameter_bound(g));
  report.checks.push_back(check_cut_vertices(g));
  report.checks.push_back(check_regular_rule(g));
  report.checks.push_back(check_forbidden_p4(g));
  report.fitting_height = infer_fitting_height(g);
  return report;
}

}  // namespace cdg

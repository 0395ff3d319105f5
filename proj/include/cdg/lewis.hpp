#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdg/checks.hpp"
#include "cdg/constructions.hpp"
#include "cdg/graph.hpp"
#include "cdg/traversal.hpp"

namespace cdg {

// Distance partition of a diameter-3 graph around a base vertex r of
// eccentricity 3:
//   rho4  vertices at distance 3 from r
//   rho3  vertices at distance 2
//   rho2  neighbors of r with a neighbor in rho3
//   rho1  r and its remaining neighbors
// `far` is the smallest vertex at distance 3.
struct LewisPartition {
  Vertex base = 0;
  Vertex far = 0;
  VertexSet rho1, rho2, rho3, rho4;

  [[nodiscard]] VertexSet united(const VertexSet& a, const VertexSet& b) const {
    VertexSet out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  [[nodiscard]] VertexSet rho12() const { return united(rho1, rho2); }
  [[nodiscard]] VertexSet rho23() const { return united(rho2, rho3); }
  [[nodiscard]] VertexSet rho34() const { return united(rho3, rho4); }
};

struct PartitionFlag {
  bool ok = true;
  VertexSet witness;  // violating vertices when !ok
};

struct PartitionValidity {
  bool all_nonempty = true;
  PartitionFlag rho12_complete;
  PartitionFlag rho34_complete;
  PartitionFlag no_rho1_to_rho34_edges;
  PartitionFlag no_rho4_to_rho12_edges;
  PartitionFlag rho2_rho3_mutual_adjacency;

  [[nodiscard]] bool valid() const {
    return all_nonempty && rho12_complete.ok && rho34_complete.ok && no_rho1_to_rho34_edges.ok &&
           no_rho4_to_rho12_edges.ok && rho2_rho3_mutual_adjacency.ok;
  }
};

// Which reading of "the rho2 u rho3 subgraph is Eulerian" to apply.
enum class EulerianMode { standard, even_only };

inline std::string_view to_string(EulerianMode m) {
  return m == EulerianMode::standard ? "standard" : "even-only";
}

inline bool eulerian_under(const Graph& g, EulerianMode mode) {
  return mode == EulerianMode::standard ? is_eulerian(g) : even_degree_subgraph_check(g);
}

// Thrown when a theorem check is asked to run outside its hypotheses.
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

inline std::optional<LewisPartition> lewis_partition(const Graph& g, Vertex base) {
  g.check_vertex(base);
  const auto dist = bfs_distances(g, base);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) return std::nullopt;
  if (*std::max_element(dist.begin(), dist.end()) != 3) return std::nullopt;

  LewisPartition p;
  p.base = base;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist[v] == 2) p.rho3.push_back(v);
    if (dist[v] == 3) p.rho4.push_back(v);
  }
  p.far = p.rho4.front();
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist[v] == 0) {
      p.rho1.push_back(v);
    } else if (dist[v] == 1) {
      const bool reaches_rho3 = std::any_of(p.rho3.begin(), p.rho3.end(),
                                            [&](Vertex w) { return g.adjacent(v, w); });
      (reaches_rho3 ? p.rho2 : p.rho1).push_back(v);
    }
  }
  return p;
}

namespace detail {

inline PartitionFlag clique_flag(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return {false, {s[i], s[j]}};
    }
  }
  return {};
}

inline PartitionFlag no_edges_flag(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex u : a) {
    for (Vertex v : b) {
      if (g.adjacent(u, v)) return {false, {std::min(u, v), std::max(u, v)}};
    }
  }
  return {};
}

inline std::optional<Vertex> first_without_neighbor_in(const Graph& g, const VertexSet& a,
                                                       const VertexSet& b) {
  for (Vertex u : a) {
    if (std::none_of(b.begin(), b.end(), [&](Vertex v) { return g.adjacent(u, v); })) return u;
  }
  return std::nullopt;
}

}  // namespace detail

// Re-evaluates every structural constraint against `g` itself, so a partition
// computed on one graph can be audited against a modified one.
inline PartitionValidity validate_partition(const Graph& g, const LewisPartition& p) {
  PartitionValidity out;
  out.all_nonempty = !p.rho1.empty() && !p.rho2.empty() && !p.rho3.empty() && !p.rho4.empty();
  out.rho12_complete = detail::clique_flag(g, p.rho12());
  out.rho34_complete = detail::clique_flag(g, p.rho34());
  out.no_rho1_to_rho34_edges = detail::no_edges_flag(g, p.rho1, p.rho34());
  out.no_rho4_to_rho12_edges = detail::no_edges_flag(g, p.rho4, p.rho12());
  if (auto v = detail::first_without_neighbor_in(g, p.rho2, p.rho3)) {
    out.rho2_rho3_mutual_adjacency = {false, {*v}};
  } else if (auto w = detail::first_without_neighbor_in(g, p.rho3, p.rho2)) {
    out.rho2_rho3_mutual_adjacency = {false, {*w}};
  }
  return out;
}

struct LewisEntry {
  LewisPartition partition;
  PartitionValidity validity;
};

// One entry per vertex of eccentricity 3, in vertex order; nullopt unless the
// graph is connected with diameter exactly 3.
inline std::optional<std::vector<LewisEntry>> enumerate_lewis_partitions(const Graph& g) {
  if (g.empty() || diameter(g) != 3) return std::nullopt;
  std::vector<LewisEntry> out;
  for (Vertex r = 0; r < g.size(); ++r) {
    if (auto p = lewis_partition(g, r)) {
      auto validity = validate_partition(g, *p);
      out.push_back({std::move(*p), std::move(validity)});
    }
  }
  return out;
}

struct OddDegreeVerdict {
  bool is_all_odd = false;
  bool is_block = false;
  std::size_t rho12_size = 0;
  std::size_t rho34_size = 0;
  bool rho23_eulerian = false;
  EulerianMode mode = EulerianMode::standard;

  [[nodiscard]] bool rho12_even() const { return rho12_size % 2 == 0; }
  [[nodiscard]] bool rho34_even() const { return rho34_size % 2 == 0; }
  [[nodiscard]] bool conditions_hold() const {
    return is_block && rho12_even() && rho34_even() && rho23_eulerian;
  }
  // all vertices odd <=> (block, both halves even, rho2 u rho3 Eulerian)
  [[nodiscard]] bool characterization_holds() const { return is_all_odd == conditions_hold(); }
};

inline OddDegreeVerdict check_odd_degree_characterization(const Graph& g, const LewisPartition& p,
                                                          EulerianMode mode = EulerianMode::standard) {
  if (!validate_partition(g, p).valid()) {
    throw HypothesisError("odd-degree characterization requires a valid diameter-3 partition");
  }
  OddDegreeVerdict v;
  v.is_all_odd = all_degrees_odd(g);
  v.is_block = is_block(g);
  v.rho12_size = p.rho1.size() + p.rho2.size();
  v.rho34_size = p.rho3.size() + p.rho4.size();
  v.rho23_eulerian = eulerian_under(induced_subgraph(g, p.rho23()).graph, mode);
  v.mode = mode;
  return v;
}

struct TheoremVerdict {
  std::string id;
  Verdict verdict = Verdict::not_applicable;
  bool vacuous = false;  // pass only because the premise is false
  std::string detail;
};

// Implication: all degrees odd => the graph is a block.
inline TheoremVerdict check_odd_implies_block(const Graph& g) {
  TheoremVerdict t{"odd_implies_block", Verdict::pass, false, ""};
  if (!all_degrees_odd(g)) {
    t.vacuous = true;
    t.detail = "not every degree is odd";
    return t;
  }
  if (!is_block(g)) {
    t.verdict = Verdict::fail;
    t.detail = "every degree is odd but the graph is not a block";
  } else {
    t.detail = "every degree is odd and the graph is a block";
  }
  return t;
}

// A non-complete regular graph never has all degrees odd. Not applicable to
// complete or irregular graphs.
inline TheoremVerdict check_regular_not_odd(const Graph& g) {
  TheoremVerdict t{"regular_not_odd", Verdict::not_applicable, false, ""};
  const auto reg = is_regular(g);
  if (!reg.regular || is_complete(g)) return t;
  const bool odd = reg.degree % 2 == 1;
  t.verdict = odd ? Verdict::fail : Verdict::pass;
  t.detail = std::to_string(reg.degree) + "-regular, n-2 = " + std::to_string(g.size() - 2);
  return t;
}

// K_n has all degrees odd; evaluated on the constructed graph, not by formula.
inline bool complete_graph_all_odd(std::size_t n) {
  if (n < 2) throw InputError("complete_graph_all_odd requires n >= 2");
  return all_degrees_odd(complete_graph(n));
}

// Exactly one cut vertex <=> |rho2| = 1, and then the cut vertex is the rho2
// vertex.
inline TheoremVerdict check_rho2_cut_vertex(const Graph& g, const LewisPartition& p) {
  TheoremVerdict t{"rho2_cut_vertex", Verdict::not_applicable, false, ""};
  if (g.empty() || diameter(g) != 3 || !validate_partition(g, p).valid()) return t;
  const auto cuts = block_decomposition(g).cut_vertices;
  const bool single_rho2 = p.rho2.size() == 1;
  const bool ok = (cuts.size() == 1) == single_rho2 && (!single_rho2 || cuts == p.rho2);
  t.verdict = ok ? Verdict::pass : Verdict::fail;
  t.detail = std::to_string(cuts.size()) + " cut vertex(es), |rho2| = " + std::to_string(p.rho2.size());
  if (!ok && !run_battery(g).admissible()) {
    t.detail += "; graph is not admissible, so the statement's hypotheses are not met";
  }
  return t;
}

// Block <=> |rho2| >= 2 and |rho3| >= 2.
inline TheoremVerdict check_block_rho_sizes(const Graph& g, const LewisPartition& p) {
  TheoremVerdict t{"block_rho_sizes", Verdict::not_applicable, false, ""};
  if (g.empty() || diameter(g) != 3 || !validate_partition(g, p).valid()) return t;
  const bool block = is_block(g);
  const bool large = p.rho2.size() >= 2 && p.rho3.size() >= 2;
  t.verdict = block == large ? Verdict::pass : Verdict::fail;
  t.detail = std::string(block ? "block" : "not a block") + ", |rho2| = " + std::to_string(p.rho2.size()) +
             ", |rho3| = " + std::to_string(p.rho3.size());
  return t;
}

// Everything reported for one graph around its smallest eccentricity-3 base.
struct LewisAnalysis {
  LewisPartition partition;
  PartitionValidity validity;
  std::optional<OddDegreeVerdict> odd_degree;  // only for valid partitions
  TheoremVerdict rho2_cut_vertex;
  TheoremVerdict block_rho_sizes;
};

inline std::optional<LewisAnalysis> analyze_lewis(const Graph& g,
                                                  EulerianMode mode = EulerianMode::standard) {
  auto entries = enumerate_lewis_partitions(g);
  if (!entries || entries->empty()) return std::nullopt;
  auto& [p, validity] = entries->front();
  LewisAnalysis out{p, validity, std::nullopt, check_rho2_cut_vertex(g, p), check_block_rho_sizes(g, p)};
  if (validity.valid()) out.odd_degree = check_odd_degree_characterization(g, p, mode);
  return out;
}

}  // namespace cdg

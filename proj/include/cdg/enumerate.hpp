#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cdg/canonical.hpp"
#include "cdg/checks.hpp"
#include "cdg/constructions.hpp"
#include "cdg/graph.hpp"
#include "cdg/io.hpp"
#include "cdg/lewis.hpp"
#include "cdg/traversal.hpp"

namespace cdg {

// 274,668 isomorphism classes at n = 9.
inline constexpr std::size_t kMaxEnumerationVertices = 9;

namespace detail {

inline void check_enumeration_order(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw InputError("exhaustive enumeration supports 1 <= n <= " +
                     std::to_string(kMaxEnumerationVertices) + ", got " + std::to_string(n));
  }
}

// Canonical forms of every one-vertex extension of `parents[i]` for the i
// handled by this worker. The new vertex must have maximum degree in the
// child; every graph has such a vertex, and deleting it leaves a graph
// isomorphic to some parent, so no class is missed.
inline std::unordered_set<std::string> extend_slice(const std::vector<Graph>& parents,
                                                    std::size_t worker, std::size_t workers) {
  std::unordered_set<std::string> out;
  if (parents.empty()) return out;
  const std::size_t k = parents.front().size();
  std::vector<std::uint64_t> rows(k + 1);
  std::vector<std::size_t> base_degree(k);
  for (std::size_t i = worker; i < parents.size(); i += workers) {
    const Graph& p = parents[i];
    for (Vertex v = 0; v < k; ++v) base_degree[v] = p.degree(v);
    for (std::uint64_t subset = 0; subset < (1ULL << k); ++subset) {
      const auto new_degree = static_cast<std::size_t>(std::popcount(subset));
      bool max_degree = true;
      for (Vertex v = 0; v < k && max_degree; ++v) {
        max_degree = base_degree[v] + ((subset >> v) & 1U) <= new_degree;
      }
      if (!max_degree) continue;
      for (Vertex v = 0; v < k; ++v) rows[v] = p.row_word(v) | (((subset >> v) & 1U) << k);
      rows[k] = subset;
      out.insert(canonical_form(Graph::from_rows(k + 1, rows)));
    }
  }
  return out;
}

}  // namespace detail

// One canonically labeled representative per isomorphism class, sorted by
// canonical form. Level k+1 is built from level k by vertex extension,
// partitioned across `threads` workers by parent index.
inline std::vector<Graph> enumerate_nonisomorphic(std::size_t n, unsigned threads = 1) {
  detail::check_enumeration_order(n);
  threads = std::max(1U, threads);
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::unordered_set<std::string>> parts(threads);
    if (threads == 1) {
      parts[0] = detail::extend_slice(level, 0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] { parts[w] = detail::extend_slice(level, w, threads); });
      }
    }
    std::vector<std::string> forms;
    for (auto& part : parts) forms.insert(forms.end(), part.begin(), part.end());
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    level.clear();
    level.reserve(forms.size());
    for (const auto& f : forms) level.push_back(decode_graph6(f));
  }
  return level;
}

struct AdmissibleGraph {
  Graph graph;
  CheckReport report;
};

inline std::vector<AdmissibleGraph> enumerate_admissible(std::size_t n, unsigned threads = 1) {
  std::vector<AdmissibleGraph> out;
  for (auto& g : enumerate_nonisomorphic(n, threads)) {
    auto report = run_battery(g);
    if (report.admissible()) out.push_back({std::move(g), std::move(report)});
  }
  return out;
}

// Discrepancies are graph6 strings of canonical representatives, in
// enumeration order.
struct EnumerationSummary {
  std::size_t n = 0;
  std::size_t total_nonisomorphic = 0;
  std::size_t admissible = 0;
  std::size_t all_odd_admissible = 0;
  std::size_t non_regular_all_odd_admissible = 0;
  std::size_t diameter3_admissible = 0;
  std::size_t valid_partition_admissible = 0;  // diameter 3 with >= 1 valid partition
  std::map<EulerianMode, std::vector<std::string>> characterization_discrepancies;
  std::vector<std::string> odd_block_discrepancies;
  std::size_t connected_odd_block_discrepancies = 0;  // subset with one component
  std::vector<std::string> regular_odd_discrepancies;
  std::vector<std::string> rho2_cut_vertex_discrepancies;
  std::vector<std::string> block_rho_sizes_discrepancies;
  // Published count of genuine six-vertex degree graphs, shown beside the
  // admissible count; the two are not expected to agree.
  std::optional<std::size_t> published_classified_count;
};

inline constexpr EulerianMode kEulerianModes[] = {EulerianMode::standard, EulerianMode::even_only};

// Runs the battery over every class and audits the odd-degree results on the
// admissible ones. Nothing is asserted here; violations are collected.
inline EnumerationSummary verify_odd_degree_results(std::size_t n, unsigned threads = 1) {
  EnumerationSummary s;
  s.n = n;
  for (auto mode : kEulerianModes) s.characterization_discrepancies[mode];
  if (n == 6) s.published_classified_count = 12;

  const auto graphs = enumerate_nonisomorphic(n, threads);
  s.total_nonisomorphic = graphs.size();
  for (const auto& g : graphs) {
    if (!run_battery(g).admissible()) continue;
    ++s.admissible;
    const bool odd = all_degrees_odd(g);
    if (odd) {
      ++s.all_odd_admissible;
      if (!is_regular(g).regular) ++s.non_regular_all_odd_admissible;
    }
    if (check_odd_implies_block(g).verdict == Verdict::fail) {
      s.odd_block_discrepancies.push_back(encode_graph6(g));
      if (is_connected(g)) ++s.connected_odd_block_discrepancies;
    }
    if (check_regular_not_odd(g).verdict == Verdict::fail) {
      s.regular_odd_discrepancies.push_back(encode_graph6(g));
    }

    auto entries = enumerate_lewis_partitions(g);
    if (!entries) continue;
    ++s.diameter3_admissible;
    bool any_valid = false;
    std::map<EulerianMode, bool> bad;
    bool bad_cut = false;
    bool bad_sizes = false;
    for (const auto& [p, validity] : *entries) {
      if (!validity.valid()) continue;
      any_valid = true;
      for (auto mode : kEulerianModes) {
        if (!check_odd_degree_characterization(g, p, mode).characterization_holds()) bad[mode] = true;
      }
      bad_cut = bad_cut || check_rho2_cut_vertex(g, p).verdict == Verdict::fail;
      bad_sizes = bad_sizes || check_block_rho_sizes(g, p).verdict == Verdict::fail;
    }
    if (!any_valid) continue;
    ++s.valid_partition_admissible;
    for (auto mode : kEulerianModes) {
      if (bad[mode]) s.characterization_discrepancies[mode].push_back(encode_graph6(g));
    }
    if (bad_cut) s.rho2_cut_vertex_discrepancies.push_back(encode_graph6(g));
    if (bad_sizes) s.block_rho_sizes_discrepancies.push_back(encode_graph6(g));
  }
  return s;
}

struct OddGraphInfo {
  Graph graph;
  bool regular = false;
  bool complete = false;
  bool block = false;
  Distance diameter = 0;
};

enum class SearchMode { exhaustive, constructive };

// Exhaustive: every admissible graph on n vertices with all degrees odd.
// Constructive: the single family member for n.
inline std::vector<OddGraphInfo> find_odd_degree_graphs(std::size_t n, SearchMode mode,
                                                        unsigned threads = 1) {
  if (n % 2 != 0) throw InputError("graphs with all degrees odd need an even vertex count");
  auto describe = [](Graph g) {
    OddGraphInfo info;
    info.regular = is_regular(g).regular;
    info.complete = is_complete(g);
    info.block = is_block(g);
    info.diameter = diameter(g);
    info.graph = std::move(g);
    return info;
  };
  std::vector<OddGraphInfo> out;
  if (mode == SearchMode::constructive) {
    out.push_back(describe(odd_family(FamilySpec(n))));
    return out;
  }
  for (auto& [g, report] : enumerate_admissible(n, threads)) {
    if (all_degrees_odd(g)) out.push_back(describe(std::move(g)));
  }
  return out;
}

}  // namespace cdg

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cdg/graph.hpp"
#include "cdg/io.hpp"

namespace cdg {

inline constexpr std::size_t kMaxCanonicalVertices = 64;

struct CanonicalLabeling {
  std::vector<Vertex> position;  // vertex v of the input becomes position[v]
  Graph graph;                   // input relabeled by `position`
};

namespace detail {

// Individualization-refinement search over ordered partitions.
//
// Refinement splits cells by (cell, neighbor count in each cell) until
// stable, so the cell order depends only on the graph and the sequence of
// individualized vertices. The first smallest non-singleton cell is branched
// on; vertices that are twins of an earlier branch are skipped because the
// transposition of twins is an automorphism fixing the partition. Among the
// discrete leaves the relabeled adjacency rows are compared lexicographically
// and the smallest wins.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.size()), rows_(g.size()) {
    for (Vertex v = 0; v < n_; ++v) rows_[v] = g.row_word(v);
  }

  CanonicalLabeling run() {
    std::vector<std::size_t> cell(n_, 0);
    std::size_t cells = n_ == 0 ? 0 : 1;
    refine(cell, cells);
    search(cell, cells);
    return {best_position_, Graph::from_rows(n_, best_rows_)};
  }

 private:
  void refine(std::vector<std::size_t>& cell, std::size_t& cells) const {
    std::vector<Vertex> order(n_);
    std::vector<std::uint64_t> masks;
    std::vector<std::uint32_t> keys;
    while (true) {
      masks.assign(cells, 0);
      for (Vertex v = 0; v < n_; ++v) masks[cell[v]] |= 1ULL << v;
      const std::size_t width = cells + 1;
      keys.assign(n_ * width, 0);
      for (Vertex v = 0; v < n_; ++v) {
        keys[v * width] = static_cast<std::uint32_t>(cell[v]);
        for (std::size_t c = 0; c < cells; ++c) {
          keys[v * width + 1 + c] = static_cast<std::uint32_t>(std::popcount(rows_[v] & masks[c]));
        }
      }
      auto key_less = [&](Vertex a, Vertex b) {
        return std::lexicographical_compare(keys.begin() + a * width, keys.begin() + (a + 1) * width,
                                            keys.begin() + b * width, keys.begin() + (b + 1) * width);
      };
      auto key_equal = [&](Vertex a, Vertex b) {
        return std::equal(keys.begin() + a * width, keys.begin() + (a + 1) * width,
                          keys.begin() + b * width);
      };
      std::iota(order.begin(), order.end(), Vertex{0});
      std::sort(order.begin(), order.end(), key_less);
      std::size_t next = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && !key_equal(order[i - 1], order[i])) ++next;
        cell[order[i]] = next;
      }
      const std::size_t refined = n_ == 0 ? 0 : next + 1;
      if (refined == cells) return;
      cells = refined;
    }
  }

  [[nodiscard]] bool twins(Vertex a, Vertex b) const {
    const std::uint64_t without = ~((1ULL << a) | (1ULL << b));
    return (rows_[a] & without) == (rows_[b] & without);
  }

  void search(const std::vector<std::size_t>& cell, std::size_t cells) {
    if (cells == n_) {
      consider_leaf(cell);
      return;
    }
    std::vector<std::size_t> sizes(cells, 0);
    for (Vertex v = 0; v < n_; ++v) ++sizes[cell[v]];
    std::size_t target = cells;
    for (std::size_t c = 0; c < cells; ++c) {
      if (sizes[c] > 1 && (target == cells || sizes[c] < sizes[target])) target = c;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (cell[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      std::vector<std::size_t> child(cell);
      for (Vertex u = 0; u < n_; ++u) {
        if (cell[u] > target || (cell[u] == target && u != v)) ++child[u];
      }
      std::size_t child_cells = cells + 1;
      refine(child, child_cells);
      search(child, child_cells);
    }
  }

  void consider_leaf(const std::vector<std::size_t>& position) {
    std::vector<std::uint64_t> relabeled(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t word = rows_[v];
      std::uint64_t out = 0;
      while (word != 0) {
        out |= 1ULL << position[static_cast<std::size_t>(std::countr_zero(word))];
        word &= word - 1;
      }
      relabeled[position[v]] = out;
    }
    if (best_position_.empty() || relabeled < best_rows_) {
      best_rows_ = std::move(relabeled);
      best_position_.assign(position.begin(), position.end());
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<Vertex> best_position_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.size() > kMaxCanonicalVertices) {
    throw InputError("canonical labeling supports at most 64 vertices");
  }
  return detail::Canonizer(g).run();
}

// graph6 encoding of the canonically relabeled graph. Equal strings if and
// only if the graphs are isomorphic.
inline std::string canonical_form(const Graph& g) {
  return encode_graph6(canonical_labeling(g).graph);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (degree_multiset(a) != degree_multiset(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cdg

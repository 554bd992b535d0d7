#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kgeo {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  explicit Graph(int vertex_count = 0);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Throws PreconditionError on a loop, a repeated edge or a bad index.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool is_complete() const noexcept;

  static Graph complete(int n);
  static Graph cycle(int n);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A graph whose vertices carry string labels (for import and export).
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

}  // namespace kgeo

#include "kgeo/graph.hpp"

#include <algorithm>
#include <string>

#include "kgeo/errors.hpp"

namespace kgeo {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(vertex_count);
}

void Graph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
  }
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto pos = std::lower_bound(nu.begin(), nu.end(), v);
  if (pos != nu.end() && *pos == v) {
    throw PreconditionError("repeated edge " + std::to_string(u) + " " + std::to_string(v));
  }
  nu.insert(pos, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_complete() const noexcept {
  const auto n = static_cast<std::size_t>(vertex_count());
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

}  // namespace kgeo

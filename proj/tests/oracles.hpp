#pragma once

// Brute-force reference computations, independent of the library's
// algorithms. Only suitable for small graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "kgeo/graph.hpp"

namespace oracle {

struct PathStats {
  int shortest = -1;
  std::int64_t count = 0;
};

// Enumerates every simple path from u to v and keeps the minimum-length ones.
inline PathStats all_simple_paths(const kgeo::Graph& g, int u, int v) {
  PathStats stats;
  std::vector<bool> used(g.vertex_count(), false);
  std::function<void(int, int)> walk = [&](int at, int length) {
    if (at == v) {
      if (stats.shortest == -1 || length < stats.shortest) {
        stats.shortest = length;
        stats.count = 1;
      } else if (length == stats.shortest) {
        ++stats.count;
      }
      return;
    }
    for (int w : g.neighbors(at)) {
      if (used[w]) continue;
      used[w] = true;
      walk(w, length + 1);
      used[w] = false;
    }
  };
  used[u] = true;
  walk(u, 0);
  return stats;
}

inline bool connected_without(const kgeo::Graph& g, const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

// Smallest vertex subset whose deletion disconnects; n - 1 for complete graphs.
inline int connectivity_by_deletion(const kgeo::Graph& g) {
  const int n = g.vertex_count();
  for (int size = 0; size < n - 1; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      if (!connected_without(g, pick)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

// Random connected graph: random spanning tree plus extra edges.
inline kgeo::Graph random_connected_graph(std::mt19937& rng, int n, double extra_density) {
  kgeo::Graph g(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    g.add_edge(order[i], order[parent(rng)]);
  }
  std::bernoulli_distribution coin(extra_density);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle

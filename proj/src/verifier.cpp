#include "kgeo/verifier.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "kgeo/errors.hpp"

namespace kgeo {

namespace {

constexpr int kUnreached = -1;

std::vector<int> bfs_distances(const Graph& graph, int source) {
  std::vector<int> dist(graph.vertex_count(), kUnreached);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : graph.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Unit-capacity flow network on the split graph: v_in = 2v, v_out = 2v + 1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& graph) : head_(2 * graph.vertex_count(), -1) {
    for (int v = 0; v < graph.vertex_count(); ++v) add_arc(2 * v, 2 * v + 1);
    for (auto [u, v] : graph.edges()) {
      add_arc(2 * u + 1, 2 * v);
      add_arc(2 * v + 1, 2 * u);
    }
  }

  int max_flow(int s, int t, int cap) {
    std::fill(flow_.begin(), flow_.end(), 0);
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int total = 0;
    std::vector<int> via(head_.size());
    while (total < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const int u = queue.front();
        queue.pop_front();
        for (int a = head_[u]; a != -1; a = next_[a]) {
          const int w = to_[a];
          if (via[w] == -1 && residual(a) > 0) {
            via[w] = a;
            queue.push_back(w);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int w = sink; w != source; w = to_[via[w] ^ 1]) {
        ++flow_[via[w]];
        --flow_[via[w] ^ 1];
      }
      ++total;
    }
    return total;
  }

 private:
  void add_arc(int u, int v) {
    for (auto [from, to, c] : {std::tuple{u, v, 1}, std::tuple{v, u, 0}}) {
      to_.push_back(to);
      capacity_.push_back(c);
      flow_.push_back(0);
      next_.push_back(head_[from]);
      head_[from] = static_cast<int>(to_.size()) - 1;
    }
  }

  int residual(int a) const { return capacity_[a] - flow_[a]; }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> capacity_;
  std::vector<int> flow_;
  std::vector<int> next_;
};

}  // namespace

GeodesicSpectrum geodesic_spectrum(const Graph& graph) {
  const int n = graph.vertex_count();
  GeodesicSpectrum spectrum;
  std::vector<int> dist(n);
  std::vector<PathCount> count(n);
  std::vector<int> order;
  order.reserve(n);

  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    for (auto& c : count) c = 0;
    order.clear();
    dist[s] = 0;
    count[s] = 1;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int u = order[head];
      for (int w : graph.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) count[w] += count[u];
      }
    }
    for (int t = s + 1; t < n; ++t) {
      if (dist[t] == kUnreached) throw DisconnectedGraph(s, t);
      if (dist[t] < 2) continue;
      spectrum.max_distance = std::max(spectrum.max_distance, dist[t]);
      if (count[t] > spectrum.max_count) spectrum.max_count = count[t];
      spectrum.records.push_back({s, t, dist[t], count[t]});
    }
  }
  return spectrum;
}

PathCount classify_geodetic(const GeodesicSpectrum& spectrum) {
  return spectrum.records.empty() ? PathCount(1) : spectrum.max_count;
}

int diameter(const Graph& graph) {
  int best = 0;
  for (int s = 0; s < graph.vertex_count(); ++s) {
    const auto dist = bfs_distances(graph, s);
    for (int t = 0; t < graph.vertex_count(); ++t) {
      if (dist[t] == kUnreached) throw DisconnectedGraph(std::min(s, t), std::max(s, t));
      best = std::max(best, dist[t]);
    }
  }
  return best;
}

int local_vertex_connectivity(const Graph& graph, int s, int t, int cap) {
  if (s == t || graph.has_edge(s, t)) {
    throw PreconditionError("local connectivity needs distinct nonadjacent vertices");
  }
  return SplitNetwork(graph).max_flow(s, t, cap);
}

int vertex_connectivity(const Graph& graph) {
  const int n = graph.vertex_count();
  if (n < 2) throw PreconditionError("connectivity needs at least two vertices");
  if (graph.is_complete()) return n - 1;

  int v = 0;
  for (int u = 1; u < n; ++u) {
    if (graph.degree(u) < graph.degree(v)) v = u;
  }
  int best = graph.degree(v);
  SplitNetwork network(graph);

  for (int w = 0; w < n && best > 0; ++w) {
    if (w != v && !graph.has_edge(v, w)) best = std::min(best, network.max_flow(v, w, best));
  }
  const auto nbrs = graph.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size() && best > 0; ++i) {
    for (std::size_t j = i + 1; j < nbrs.size() && best > 0; ++j) {
      if (!graph.has_edge(nbrs[i], nbrs[j])) {
        best = std::min(best, network.max_flow(nbrs[i], nbrs[j], best));
      }
    }
  }
  return best;
}

DegreeProfile degree_profile(const Graph& graph) {
  DegreeProfile profile;
  for (int v = 0; v < graph.vertex_count(); ++v) ++profile[graph.degree(v)];
  return profile;
}

bool is_biregular(const DegreeProfile& profile, int l, int k) {
  std::set<int> support;
  for (const auto& [degree, count] : profile) {
    if (count > 0) support.insert(degree);
  }
  return support == std::set<int>{l, k};
}

GeodeticReport full_report(const BlockDesign& design, const StarGraph& graph,
                           const TheoremClaims& claims) {
  const auto params = require_verified(design, "full_report");
  const auto expected = build_star(cover_from_design(design));
  if (expected.graph != graph.graph || expected.labels != graph.labels) {
    throw PreconditionError("full_report: graph is not the star graph of the design");
  }

  GeodeticReport report;
  const auto spectrum = geodesic_spectrum(graph.graph);
  report.measured_K = classify_geodetic(spectrum);
  report.nonadjacent_pairs = spectrum.records.size();
  report.diameter = diameter(graph.graph);
  report.connectivity = vertex_connectivity(graph.graph);
  report.degree_profile = degree_profile(graph.graph);
  report.vertex_count = graph.graph.vertex_count();
  report.edge_count = static_cast<std::int64_t>(graph.graph.edge_count());

  report.params = params;
  report.formula_vertex_count = params.n * (params.r + 1);
  report.formula_edge_count = params.n * params.r * (params.k + 1) / 2;
  report.mu = mu(design);
  report.predicted_diameter = predicted_diameter(design);
  report.claims = claims;

  report.counts_match_formula = report.vertex_count == report.formula_vertex_count &&
                                report.edge_count == report.formula_edge_count;
  report.vertex_count_ok = !claims.vertex_count || *claims.vertex_count == report.vertex_count;
  report.k_within_mu = report.measured_K <= report.mu;
  report.k_within_claim = report.measured_K <= claims.max_K;
  report.diameter_ok = (report.diameter == 4 || report.diameter == 5) &&
                       report.diameter == report.predicted_diameter &&
                       (!claims.diameter || *claims.diameter == report.diameter);
  report.connectivity_ok = report.connectivity == claims.connectivity;

  std::set<int> support;
  for (const auto& [degree, count] : report.degree_profile) support.insert(degree);
  report.degrees_ok = support == claims.degrees;
  return report;
}

}  // namespace kgeo

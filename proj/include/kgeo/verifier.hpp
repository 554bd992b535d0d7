#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kgeo/block_design.hpp"
#include "kgeo/graph.hpp"
#include "kgeo/star_graph.hpp"

namespace kgeo {

using PathCount = boost::multiprecision::cpp_int;

struct GeodesicRecord {
  int u;
  int v;
  int distance;
  PathCount count;
};

/// Shortest-path multiplicities of all nonadjacent pairs u < v.
struct GeodesicSpectrum {
  std::vector<GeodesicRecord> records;
  PathCount max_count = 0;
  int max_distance = 0;
};

/// One breadth-first layering per source with exact path-count
/// accumulation. Throws DisconnectedGraph naming a separated pair.
GeodesicSpectrum geodesic_spectrum(const Graph& graph);

/// Least K for which the graph is K-geodetic: the largest pair count, or 1
/// when there are no nonadjacent pairs.
PathCount classify_geodetic(const GeodesicSpectrum& spectrum);

/// Throws DisconnectedGraph.
int diameter(const Graph& graph);

/// Exact vertex connectivity by unit-capacity max flow on the split graph,
/// evaluated over the Esfahanian-Hakimi pair set. Complete graphs return
/// n - 1. Throws PreconditionError for fewer than two vertices.
int vertex_connectivity(const Graph& graph);

/// Maximum number of internally vertex-disjoint s-t paths for nonadjacent
/// s, t, stopping early once `cap` is reached.
int local_vertex_connectivity(const Graph& graph, int s, int t, int cap);

using DegreeProfile = std::map<int, std::int64_t>;  // degree -> multiplicity

DegreeProfile degree_profile(const Graph& graph);

/// Support of the profile is exactly {l, k} ({k} when l == k).
bool is_biregular(const DegreeProfile& profile, int l, int k);

/// Expected properties of a family member's star graph.
struct TheoremClaims {
  std::string source;
  int max_K = 1;
  int connectivity = 0;
  std::set<int> degrees;
  std::optional<std::int64_t> vertex_count;
  std::optional<int> diameter;  // when the family fixes it
};

struct GeodeticReport {
  PathCount measured_K = 0;
  std::size_t nonadjacent_pairs = 0;
  int diameter = 0;
  int connectivity = 0;
  DegreeProfile degree_profile;
  std::int64_t vertex_count = 0;
  std::int64_t edge_count = 0;

  std::optional<DesignParams> params;
  std::int64_t formula_vertex_count = 0;  // n(r+1)
  std::int64_t formula_edge_count = 0;    // nr(k+1)/2
  int mu = 0;
  int predicted_diameter = 0;
  TheoremClaims claims;

  bool counts_match_formula = false;
  bool vertex_count_ok = false;
  bool k_within_mu = false;
  bool k_within_claim = false;
  bool diameter_ok = false;
  bool connectivity_ok = false;
  bool degrees_ok = false;

  bool geodetic() const { return measured_K <= 1; }
  bool bigeodetic() const { return measured_K <= 2; }
  bool trigeodetic() const { return measured_K <= 3; }

  bool all_ok() const noexcept {
    return counts_match_formula && vertex_count_ok && k_within_mu && k_within_claim &&
           diameter_ok && connectivity_ok && degrees_ok;
  }
};

/// Measures everything and reconciles it with mu, the predicted diameter and
/// the claims. Throws PreconditionError unless `graph` is the star graph of
/// the design's cover.
GeodeticReport full_report(const BlockDesign& design, const StarGraph& graph,
                           const TheoremClaims& claims);

}  // namespace kgeo

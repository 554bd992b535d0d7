#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgeo/block_design.hpp"
#include "kgeo/graph.hpp"

namespace kgeo {

/// A family of vertex subsets of K_n, each standing for the complete
/// subgraph it induces. `theta` records whether the members are pairwise
/// edge-disjoint (no pair of vertices lies in two members).
struct Cover {
  int ground_size = 0;
  std::vector<Block> members;
  bool theta = false;
};

/// Validates the members (nonempty, in range, distinct elements, union is
/// the whole vertex set) and computes the theta flag. Throws
/// PreconditionError.
Cover make_cover(int ground_size, std::vector<Block> members);

/// One member per block. Throws PreconditionError unless the design
/// verifies. theta holds exactly when lambda = 1.
Cover cover_from_design(const BlockDesign& design);

/// hub(l) is the fresh vertex standing for ground element l; copy(i, x) is
/// the copy of element x inside the clique gadget of cover member i.
struct VertexLabel {
  enum class Kind { hub, copy };
  Kind kind = Kind::hub;
  int member = -1;  // -1 for hubs
  int element = 0;

  static VertexLabel hub(int l) { return {Kind::hub, -1, l}; }
  static VertexLabel copy(int i, int x) { return {Kind::copy, i, x}; }

  /// "h<l>" or "c<i>_<x>".
  std::string to_string() const;
  static std::optional<VertexLabel> parse(const std::string& text);

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

/// The star-of-cliques graph of a cover. Vertices are numbered hubs first
/// (hub(l) = l), then copies member by member in ascending element order.
struct StarGraph {
  Graph graph;
  std::vector<VertexLabel> labels;
  int ground_size = 0;
  std::vector<int> member_offset;  // vertex id of the first copy of member i

  int hub_vertex(int l) const { return l; }
  int copy_vertex(const Cover& cover, int i, int x) const;

  LabeledGraph labeled() const;
};

StarGraph build_star(const Cover& cover);

/// max(max |B_i n B_j| over i != j, lambda). PreconditionError for an
/// unverified design or b < 2.
int mu(const BlockDesign& design);

/// 4 when every two distinct blocks meet, 5 otherwise.
int predicted_diameter(const BlockDesign& design);

}  // namespace kgeo

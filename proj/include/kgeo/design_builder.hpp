#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kgeo/block_design.hpp"
#include "kgeo/design_params.hpp"

namespace kgeo {

class Catalog;

/// Steiner triple system on n points: Bose's construction for n = 3 (mod 6),
/// Skolem's for n = 1 (mod 6); n = 3 gives the single triple. Throws
/// InadmissibleParameters for any other n.
BlockDesign build_sts(int n);

/// All C(n, 3) triples of an n-set; a (C(n,3), n, C(n-1,2), 3, n-2)-design.
BlockDesign build_complete_triples(int n);

/// Points and lines of PG(2, q): 1- and 2-dimensional subspaces of GF(q)^3.
BlockDesign build_projective_plane(int q);

/// All translates B + i (mod v) of each base block, duplicates retained.
BlockDesign develop_difference_family(int v, const std::vector<Block>& base_blocks);

/// Replaces every block by its complement. Requires a verified design with
/// k <= n - 2 (PreconditionError otherwise).
BlockDesign complement_design(const BlockDesign& design);

enum class SolveStatus { found, exhausted, budget_exceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::exhausted;
  std::optional<BlockDesign> design;
  std::uint64_t nodes = 0;
};

/// Deterministic backtracking search for a design with the given parameters.
/// Branches on the lexicographically least under-covered pair and tries the
/// blocks through it in lexicographic order. The first block is fixed to
/// {0, ..., k-1}. Throws PreconditionError when params fail check_necessary.
SolveResult solve_design(const DesignParams& params, std::uint64_t node_budget);

inline constexpr std::uint64_t kDefaultSolverBudget = 5'000'000;

/// A triple system with replication lambda in {1, 2, 3}: direct
/// constructions first, then the catalog, then the solver.
/// Throws InadmissibleParameters or ConstructionUnavailable.
BlockDesign build_triple_system(int n, int lambda, const Catalog& catalog,
                                std::uint64_t node_budget = kDefaultSolverBudget);
BlockDesign build_triple_system(int n, int lambda);

}  // namespace kgeo

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kgeo/block_design.hpp"
#include "kgeo/catalog.hpp"
#include "kgeo/design_builder.hpp"
#include "kgeo/verifier.hpp"

namespace kgeo {

/// The six graph families: three from triple systems (lambda = 1, 2, 3) and
/// three from symmetric designs (lambda = 1, 2, 3).
enum class Family {
  thm5_sts,
  thm6_twofold,
  thm7_threefold,
  thm8_plane,
  thm9_biplane,
  thm10_threefold_symmetric,
};

std::string to_string(Family family);
/// Accepts the full names and the short forms "thm5" ... "thm10".
std::optional<Family> parse_family(const std::string& text);

struct FamilySpec {
  Family family;
  std::int64_t n;

  /// Throws PreconditionError when n violates the family's condition.
  FamilySpec(Family family, std::int64_t n);

  static bool admissible(Family family, std::int64_t n);

  int lambda() const;
  bool symmetric() const;
  DesignParams design_params() const;
  TheoremClaims claims() const;
};

/// Symmetric design with v = (n^2+n+lambda)/lambda, k = n+1: direct
/// constructions, then the catalog, then the solver.
BlockDesign build_symmetric_design(int n, int lambda, const Catalog& catalog,
                                   std::uint64_t node_budget = kDefaultSolverBudget);

/// Throws ConstructionUnavailable.
BlockDesign build_family_design(const FamilySpec& spec, const Catalog& catalog,
                                std::uint64_t node_budget = kDefaultSolverBudget);

}  // namespace kgeo

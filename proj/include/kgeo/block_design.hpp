#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kgeo/design_params.hpp"

namespace kgeo {

using Block = std::vector<int>;

/// A family of blocks over the ground set {0, ..., ground_size - 1}.
///
/// Always held in canonical form: each block ascending, the block list
/// sorted lexicographically. Repeated blocks are kept (multiset semantics)
/// and end up adjacent. Block sizes are not forced to agree here;
/// verify_design() reports that.
class BlockDesign {
 public:
  /// Throws PreconditionError on an empty block list, an empty block, an
  /// element outside the ground set or a repeated element inside a block.
  BlockDesign(int ground_size, std::vector<Block> blocks);

  int ground_size() const noexcept { return ground_size_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  // Size of the first block.
  int block_size() const noexcept { return static_cast<int>(blocks_.front().size()); }

  friend bool operator==(const BlockDesign&, const BlockDesign&) = default;

 private:
  int ground_size_;
  std::vector<Block> blocks_;
};

struct DesignCheckReport {
  bool uniform_block_size = false;
  std::vector<std::int64_t> replication;  // indexed by element
  bool replication_uniform = false;
  std::int64_t pair_min = 0;
  std::int64_t pair_max = 0;
  bool pair_uniform = false;  // pair_min == pair_max > 0
  std::optional<DesignParams> derived_params;

  bool ok() const noexcept { return derived_params.has_value(); }
};

/// Exhaustive check of the three design axioms: uniform block size, constant
/// replication, constant positive pair multiplicity. derived_params is set
/// only when all three hold.
DesignCheckReport verify_design(const BlockDesign& design);

/// verify_design(design).derived_params, or PreconditionError naming `what`.
DesignParams require_verified(const BlockDesign& design, const char* what);

/// Number of common elements of two ascending blocks.
int intersection_size(const Block& a, const Block& b);

}  // namespace kgeo

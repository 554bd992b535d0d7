#include "kgeo/block_design.hpp"

#include <algorithm>
#include <string>

#include "kgeo/errors.hpp"

namespace kgeo {

BlockDesign::BlockDesign(int ground_size, std::vector<Block> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)) {
  if (ground_size_ < 1) throw PreconditionError("ground set must be nonempty");
  if (blocks_.empty()) throw PreconditionError("a design needs at least one block");
  for (auto& block : blocks_) {
    if (block.empty()) throw PreconditionError("empty block");
    std::sort(block.begin(), block.end());
    if (block.front() < 0 || block.back() >= ground_size_) {
      throw PreconditionError("block element outside ground set of size " +
                              std::to_string(ground_size_));
    }
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw PreconditionError("repeated element inside a block");
    }
  }
  std::sort(blocks_.begin(), blocks_.end());
}

int intersection_size(const Block& a, const Block& b) {
  int common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

DesignCheckReport verify_design(const BlockDesign& design) {
  DesignCheckReport report;
  const int n = design.ground_size();
  const auto& blocks = design.blocks();
  const auto k = design.block_size();

  report.uniform_block_size = std::all_of(
      blocks.begin(), blocks.end(), [k](const Block& b) { return static_cast<int>(b.size()) == k; });

  report.replication.assign(n, 0);
  std::vector<std::int64_t> pairs(static_cast<std::size_t>(n) * n, 0);
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      ++report.replication[block[i]];
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        ++pairs[static_cast<std::size_t>(block[i]) * n + block[j]];
      }
    }
  }
  report.replication_uniform =
      std::all_of(report.replication.begin(), report.replication.end(),
                  [&](std::int64_t c) { return c == report.replication.front(); });

  if (n >= 2) {
    report.pair_min = pairs[1];
    report.pair_max = pairs[1];
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        const auto c = pairs[static_cast<std::size_t>(x) * n + y];
        report.pair_min = std::min(report.pair_min, c);
        report.pair_max = std::max(report.pair_max, c);
      }
    }
  }
  report.pair_uniform = n >= 2 && report.pair_min == report.pair_max && report.pair_min > 0;

  if (report.uniform_block_size && report.replication_uniform && report.pair_uniform && k >= 2) {
    report.derived_params = DesignParams(static_cast<std::int64_t>(blocks.size()), n,
                                         report.replication.front(), k, report.pair_min);
  }
  return report;
}

DesignParams require_verified(const BlockDesign& design, const char* what) {
  auto report = verify_design(design);
  if (!report.derived_params) {
    throw PreconditionError(std::string(what) + ": input is not a balanced incomplete block design");
  }
  return *report.derived_params;
}

}  // namespace kgeo

#include "kgeo/design_builder.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "kgeo/catalog.hpp"
#include "kgeo/errors.hpp"
#include "kgeo/finite_field.hpp"

namespace kgeo {

namespace {

// Points (x, i) of Z_m x Z_3 map to x + m*i.
int cell(int x, int i, int m) { return x + m * i; }

BlockDesign bose_sts(int n) {
  const int m = n / 3;  // odd
  const int half = (m + 1) / 2;  // inverse of 2 mod m
  auto op = [&](int a, int b) { return (a + b) % m * half % m; };
  std::vector<Block> blocks;
  for (int x = 0; x < m; ++x) blocks.push_back({cell(x, 0, m), cell(x, 1, m), cell(x, 2, m)});
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        blocks.push_back({cell(x, i, m), cell(y, i, m), cell(op(x, y), (i + 1) % 3, m)});
      }
    }
  }
  return BlockDesign(n, std::move(blocks));
}

BlockDesign skolem_sts(int n) {
  const int m = (n - 1) / 3;  // even, = 2t
  const int t = m / 2;
  // half-idempotent commutative quasigroup on Z_m
  auto op = [&](int a, int b) {
    const int s = (a + b) % m;
    return s % 2 == 0 ? s / 2 : s / 2 + t;
  };
  const int infinity = 3 * m;
  std::vector<Block> blocks;
  for (int x = 0; x < t; ++x) blocks.push_back({cell(x, 0, m), cell(x, 1, m), cell(x, 2, m)});
  for (int x = 0; x < t; ++x) {
    for (int i = 0; i < 3; ++i) {
      blocks.push_back({infinity, cell(x + t, i, m), cell(x, (i + 1) % 3, m)});
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        blocks.push_back({cell(x, i, m), cell(y, i, m), cell(op(x, y), (i + 1) % 3, m)});
      }
    }
  }
  return BlockDesign(n, std::move(blocks));
}

BlockDesign relabel(const BlockDesign& design, const std::vector<int>& perm) {
  std::vector<Block> blocks;
  blocks.reserve(design.block_count());
  for (const auto& block : design.blocks()) {
    Block image;
    for (int x : block) image.push_back(perm[x]);
    blocks.push_back(std::move(image));
  }
  return BlockDesign(design.ground_size(), std::move(blocks));
}

BlockDesign merge(const BlockDesign& a, const BlockDesign& b) {
  auto blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return BlockDesign(a.ground_size(), std::move(blocks));
}

bool shares_block(const BlockDesign& a, const BlockDesign& b) {
  const auto& x = a.blocks();
  const auto& y = b.blocks();
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// Second copy of an STS under an affine relabeling x -> a*x + s (mod n) that
// repeats no block, if one exists among the small affine maps.
BlockDesign twofold_from_sts(const BlockDesign& sts) {
  const int n = sts.ground_size();
  for (int a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    for (int s = 0; s < n; ++s) {
      if (a == 1 && s == 0) continue;
      std::vector<int> perm(n);
      for (int x = 0; x < n; ++x) perm[x] = (a * x + s) % n;
      auto copy = relabel(sts, perm);
      if (!shares_block(sts, copy)) return merge(sts, copy);
    }
  }
  return merge(sts, sts);
}

BlockDesign checked(BlockDesign design, const DesignParams& expected, const char* what) {
  const auto report = verify_design(design);
  if (!report.derived_params || *report.derived_params != expected) {
    throw std::logic_error(std::string(what) + " produced an invalid design");
  }
  return design;
}

class PairCoverSearch {
 public:
  PairCoverSearch(const DesignParams& params, std::uint64_t budget)
      : n_(static_cast<int>(params.n)),
        k_(static_cast<int>(params.k)),
        budget_(budget),
        need_(static_cast<std::size_t>(n_) * n_, static_cast<int>(params.lambda)) {}

  SolveResult run() {
    SolveResult result;
    Block first(k_);
    std::iota(first.begin(), first.end(), 0);
    apply(first, -1);
    chosen_.push_back(first);
    const bool ok = search(0, 1, first);
    result.nodes = nodes_;
    if (ok) {
      result.status = SolveStatus::found;
      result.design = BlockDesign(n_, chosen_);
    } else {
      result.status = aborted_ ? SolveStatus::budget_exceeded : SolveStatus::exhausted;
    }
    return result;
  }

 private:
  int& need(int x, int y) { return need_[static_cast<std::size_t>(x) * n_ + y]; }

  void apply(const Block& block, int delta) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) need(block[i], block[j]) += delta;
    }
  }

  bool next_pair(int& a, int& b) {
    for (int x = 0; x < n_; ++x) {
      for (int y = x + 1; y < n_; ++y) {
        if (need(x, y) > 0) {
          a = x;
          b = y;
          return true;
        }
      }
    }
    return false;
  }

  // Tries every block {a, b} + (k-2 elements above b) whose internal pairs
  // are all still needed, in lexicographic order. Each extension step counts
  // as one node.
  bool branch(int a, int b, bool same_pair, const Block& prev_block) {
    Block current{a, b};
    return extend(current, b + 1, a, b, same_pair, prev_block);
  }

  bool extend(Block& current, int from, int a, int b, bool same_pair, const Block& prev_block) {
    if (static_cast<int>(current.size()) == k_) {
      if (same_pair && current < prev_block) return false;
      apply(current, -1);
      chosen_.push_back(current);
      const Block placed = current;
      if (search(a, b, placed)) return true;
      chosen_.pop_back();
      apply(placed, +1);
      return false;
    }
    const int remaining = k_ - static_cast<int>(current.size());
    for (int x = from; x <= n_ - remaining; ++x) {
      if (aborted_) return false;
      bool fits = true;
      for (int y : current) {
        if (need(y, x) <= 0) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      if (++nodes_ > budget_) {
        aborted_ = true;
        return false;
      }
      current.push_back(x);
      const bool done = extend(current, x + 1, a, b, same_pair, prev_block);
      current.pop_back();
      if (done) return true;
    }
    return false;
  }

  bool search(int prev_a, int prev_b, const Block& prev_block) {
    int a = 0;
    int b = 0;
    if (!next_pair(a, b)) return true;
    return branch(a, b, a == prev_a && b == prev_b, prev_block);
  }

  int n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> need_;
  std::vector<Block> chosen_;
};

}  // namespace

BlockDesign build_sts(int n) {
  if (n < 3 || (n % 6 != 1 && n % 6 != 3)) {
    throw InadmissibleParameters("no Steiner triple system on " + std::to_string(n) +
                                 " points (need n = 1 or 3 mod 6)");
  }
  if (n == 3) return build_complete_triples(3);
  auto design = n % 6 == 3 ? bose_sts(n) : skolem_sts(n);
  return checked(std::move(design), triple_system_params(n, 1), "build_sts");
}

BlockDesign build_complete_triples(int n) {
  if (n < 3) throw PreconditionError("complete triples need n >= 3");
  std::vector<Block> blocks;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) blocks.push_back({x, y, z});
    }
  }
  return BlockDesign(n, std::move(blocks));
}

BlockDesign build_projective_plane(int q) {
  const FiniteField field(q);
  // Normalized representatives: first nonzero coordinate equals 1.
  std::vector<std::array<int, 3>> points;
  for (int y = 0; y < q; ++y) {
    for (int z = 0; z < q; ++z) points.push_back({1, y, z});
  }
  for (int z = 0; z < q; ++z) points.push_back({0, 1, z});
  points.push_back({0, 0, 1});

  const int v = static_cast<int>(points.size());
  std::vector<Block> lines;
  lines.reserve(v);
  for (const auto& line : points) {
    Block block;
    for (int i = 0; i < v; ++i) {
      const auto& p = points[i];
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot = field.add(dot, field.mul(p[c], line[c]));
      if (dot == 0) block.push_back(i);
    }
    lines.push_back(std::move(block));
  }
  return checked(BlockDesign(v, std::move(lines)), symmetric_params(q, 1),
                 "build_projective_plane");
}

BlockDesign develop_difference_family(int v, const std::vector<Block>& base_blocks) {
  if (v < 3) throw PreconditionError("development needs v >= 3");
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(v) * base_blocks.size());
  for (const auto& base : base_blocks) {
    for (int x : base) {
      if (x < 0 || x >= v) throw PreconditionError("base block element outside Z_v");
    }
    for (int shift = 0; shift < v; ++shift) {
      Block translate;
      for (int x : base) translate.push_back((x + shift) % v);
      blocks.push_back(std::move(translate));
    }
  }
  return BlockDesign(v, std::move(blocks));
}

BlockDesign complement_design(const BlockDesign& design) {
  const auto params = require_verified(design, "complement_design");
  if (params.k > params.n - 2) {
    throw PreconditionError("complement of a design with k > n - 2 is degenerate");
  }
  std::vector<Block> blocks;
  for (const auto& block : design.blocks()) {
    Block rest;
    for (int x = 0; x < design.ground_size(); ++x) {
      if (!std::binary_search(block.begin(), block.end(), x)) rest.push_back(x);
    }
    blocks.push_back(std::move(rest));
  }
  return BlockDesign(design.ground_size(), std::move(blocks));
}

SolveResult solve_design(const DesignParams& params, std::uint64_t node_budget) {
  if (!check_necessary(params)) {
    throw PreconditionError("parameters fail bk = nr, r(k-1) = lambda(n-1): " +
                            params.to_string());
  }
  auto result = PairCoverSearch(params, node_budget).run();
  if (result.design) {
    const auto report = verify_design(*result.design);
    if (!report.derived_params || *report.derived_params != params) {
      throw std::logic_error("solver returned an invalid design");
    }
  }
  return result;
}

BlockDesign build_triple_system(int n, int lambda, const Catalog& catalog,
                                std::uint64_t node_budget) {
  const auto params = triple_system_params(n, lambda);
  const bool steiner_order = n % 6 == 1 || n % 6 == 3;
  auto steiner = [&] { return build_sts(n); };

  std::optional<BlockDesign> design;
  if (lambda == 1) {
    design = steiner();
  } else if (lambda == 2 && steiner_order) {
    design = n == 3 ? merge(steiner(), steiner()) : twofold_from_sts(steiner());
  } else if (lambda == 3 && steiner_order) {
    const auto single = steiner();
    design = merge(single, n == 3 ? merge(single, single) : twofold_from_sts(single));
  } else if (lambda == 3 && n == 5) {
    design = build_complete_triples(5);
  }
  if (!design) design = catalog.lookup(params);
  if (!design) {
    auto solved = solve_design(params, node_budget);
    if (solved.design) design = std::move(solved.design);
  }
  if (!design) {
    throw ConstructionUnavailable("no construction available for triple system " +
                                  params.to_string());
  }
  return checked(std::move(*design), params, "build_triple_system");
}

BlockDesign build_triple_system(int n, int lambda) {
  return build_triple_system(n, lambda, Catalog::default_catalog());
}

}  // namespace kgeo

#include "kgeo/star_graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "kgeo/errors.hpp"

namespace kgeo {

namespace {

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  if (text.empty()) return std::nullopt;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 0) return std::nullopt;
  return value;
}

}  // namespace

Cover make_cover(int ground_size, std::vector<Block> members) {
  if (ground_size < 1) throw PreconditionError("cover of an empty vertex set");
  std::vector<bool> seen(ground_size, false);
  std::set<std::pair<int, int>> pairs;
  bool theta = true;
  for (auto& member : members) {
    if (member.empty()) throw PreconditionError("empty cover member");
    std::sort(member.begin(), member.end());
    if (member.front() < 0 || member.back() >= ground_size) {
      throw PreconditionError("cover member outside the vertex set");
    }
    if (std::adjacent_find(member.begin(), member.end()) != member.end()) {
      throw PreconditionError("repeated vertex in a cover member");
    }
    for (std::size_t i = 0; i < member.size(); ++i) {
      seen[member[i]] = true;
      for (std::size_t j = i + 1; j < member.size(); ++j) {
        if (!pairs.emplace(member[i], member[j]).second) theta = false;
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw PreconditionError("cover members do not cover every vertex");
  }
  return Cover{ground_size, std::move(members), theta};
}

Cover cover_from_design(const BlockDesign& design) {
  const auto params = require_verified(design, "cover_from_design");
  auto cover = make_cover(design.ground_size(), design.blocks());
  if (cover.theta != (params.lambda == 1)) throw std::logic_error("theta flag mismatch");
  return cover;
}

std::string VertexLabel::to_string() const {
  if (kind == Kind::hub) return "h" + std::to_string(element);
  return "c" + std::to_string(member) + "_" + std::to_string(element);
}

std::optional<VertexLabel> VertexLabel::parse(const std::string& text) {
  if (text.size() < 2) return std::nullopt;
  const std::string_view body(text.data() + 1, text.size() - 1);
  if (text[0] == 'h') {
    if (auto l = parse_int(body)) return hub(*l);
    return std::nullopt;
  }
  if (text[0] == 'c') {
    const auto sep = body.find('_');
    if (sep == std::string_view::npos) return std::nullopt;
    auto i = parse_int(body.substr(0, sep));
    auto x = parse_int(body.substr(sep + 1));
    if (i && x) return copy(*i, *x);
  }
  return std::nullopt;
}

int StarGraph::copy_vertex(const Cover& cover, int i, int x) const {
  const auto& member = cover.members.at(i);
  auto pos = std::lower_bound(member.begin(), member.end(), x);
  if (pos == member.end() || *pos != x) throw PreconditionError("element not in cover member");
  return member_offset.at(i) + static_cast<int>(pos - member.begin());
}

LabeledGraph StarGraph::labeled() const {
  LabeledGraph out{graph, {}};
  out.labels.reserve(labels.size());
  for (const auto& label : labels) out.labels.push_back(label.to_string());
  return out;
}

StarGraph build_star(const Cover& cover) {
  std::size_t total = cover.ground_size;
  for (const auto& member : cover.members) total += member.size();

  StarGraph star;
  star.ground_size = cover.ground_size;
  star.graph = Graph(static_cast<int>(total));
  star.labels.reserve(total);
  for (int l = 0; l < cover.ground_size; ++l) star.labels.push_back(VertexLabel::hub(l));

  int next = cover.ground_size;
  for (std::size_t i = 0; i < cover.members.size(); ++i) {
    const auto& member = cover.members[i];
    star.member_offset.push_back(next);
    for (int x : member) star.labels.push_back(VertexLabel::copy(static_cast<int>(i), x));
    for (std::size_t a = 0; a < member.size(); ++a) {
      star.graph.add_edge(next + static_cast<int>(a), member[a]);
      for (std::size_t b = a + 1; b < member.size(); ++b) {
        star.graph.add_edge(next + static_cast<int>(a), next + static_cast<int>(b));
      }
    }
    next += static_cast<int>(member.size());
  }
  return star;
}

int mu(const BlockDesign& design) {
  const auto params = require_verified(design, "mu");
  if (design.block_count() < 2) throw PreconditionError("mu needs at least two blocks");
  int best = static_cast<int>(params.lambda);
  const auto& blocks = design.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      best = std::max(best, intersection_size(blocks[i], blocks[j]));
    }
  }
  return best;
}

int predicted_diameter(const BlockDesign& design) {
  require_verified(design, "predicted_diameter");
  if (design.block_count() < 2) throw PreconditionError("predicted diameter needs at least two blocks");
  const auto& blocks = design.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (intersection_size(blocks[i], blocks[j]) == 0) return 5;
    }
  }
  return 4;
}

}  // namespace kgeo

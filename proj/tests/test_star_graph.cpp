#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kgeo/catalog.hpp"
#include "kgeo/design_builder.hpp"
#include "kgeo/errors.hpp"
#include "kgeo/star_graph.hpp"

using kgeo::BlockDesign;

namespace {

std::vector<BlockDesign> sample_designs() {
  std::vector<BlockDesign> out{kgeo::twofold_6_design(), kgeo::fano_plane_design(),
                               kgeo::biplane_7_design(), kgeo::build_complete_triples(5),
                               kgeo::build_complete_triples(4), kgeo::build_sts(9),
                               kgeo::build_sts(13), kgeo::build_projective_plane(3),
                               kgeo::build_projective_plane(4),
                               kgeo::develop_difference_family(11, {{1, 3, 4, 5, 9}})};
  for (const auto& e : kgeo::Catalog::default_catalog().entries()) out.push_back(e.design);
  return out;
}

}  // namespace

TEST_CASE("cover_from_design") {
  const auto fano = kgeo::cover_from_design(kgeo::fano_plane_design());
  CHECK(fano.members.size() == 7);
  CHECK(fano.theta);
  for (const auto& m : fano.members) CHECK(m.size() == 3);

  const auto twofold = kgeo::cover_from_design(kgeo::twofold_6_design());
  CHECK(twofold.members.size() == 10);
  CHECK_FALSE(twofold.theta);

  const auto single = kgeo::cover_from_design(kgeo::build_complete_triples(3));
  CHECK(single.members.size() == 1);
  CHECK(single.theta);

  CHECK_THROWS_AS(kgeo::cover_from_design(BlockDesign(4, {{0, 1, 2}, {0, 1, 3}})), kgeo::PreconditionError);
}

TEST_CASE("make_cover validation") {
  CHECK_THROWS_AS(kgeo::make_cover(4, {{0, 1, 2}}), kgeo::PreconditionError);
  CHECK_THROWS_AS(kgeo::make_cover(3, {{0, 1, 3}}), kgeo::PreconditionError);
  CHECK_THROWS_AS(kgeo::make_cover(3, {{0, 1}, {}}), kgeo::PreconditionError);
  // a cover of a path, not of K_n
  const auto path = kgeo::make_cover(3, {{0, 1}, {1, 2}});
  CHECK(path.theta);
  const auto star = kgeo::build_star(path);
  CHECK(star.graph.vertex_count() == 3 + 4);
  CHECK(star.graph.edge_count() == 2 + 4);
}

TEST_CASE("build_star counts") {
  auto star = kgeo::build_star(kgeo::cover_from_design(kgeo::fano_plane_design()));
  CHECK(star.graph.vertex_count() == 28);
  CHECK(star.graph.edge_count() == 42);

  star = kgeo::build_star(kgeo::cover_from_design(kgeo::twofold_6_design()));
  CHECK(star.graph.vertex_count() == 36);
  CHECK(star.graph.edge_count() == 60);

  star = kgeo::build_star(kgeo::cover_from_design(kgeo::build_complete_triples(3)));
  CHECK(star.graph.vertex_count() == 6);
  CHECK(star.graph.edge_count() == 6);
}

TEST_CASE("build_star structure") {
  for (const auto& design : sample_designs()) {
    const auto params = *kgeo::verify_design(design).derived_params;
    const auto cover = kgeo::cover_from_design(design);
    const auto star = kgeo::build_star(cover);
    const auto& g = star.graph;

    CHECK(g.vertex_count() == params.n * (params.r + 1));
    CHECK(static_cast<std::int64_t>(g.edge_count()) == params.n * params.r * (params.k + 1) / 2);

    for (int l = 0; l < cover.ground_size; ++l) CHECK(g.degree(star.hub_vertex(l)) == params.r);
    for (std::size_t i = 0; i < cover.members.size(); ++i) {
      for (int x : cover.members[i]) {
        const int v = star.copy_vertex(cover, static_cast<int>(i), x);
        CHECK(star.labels[v] == kgeo::VertexLabel::copy(static_cast<int>(i), x));
        CHECK(g.degree(v) == static_cast<int>(cover.members[i].size()));
        CHECK(g.has_edge(v, star.hub_vertex(x)));
      }
    }
    // labels are in canonical order
    CHECK(std::is_sorted(star.labels.begin(), star.labels.end()));

    // For lambda = 1 no two gadgets project onto a common edge of K_n.
    if (params.lambda == 1) {
      std::set<std::pair<int, int>> images;
      std::size_t clique_edges = 0;
      for (auto [u, v] : g.edges()) {
        const auto& a = star.labels[u];
        const auto& b = star.labels[v];
        if (a.kind == kgeo::VertexLabel::Kind::copy && b.kind == kgeo::VertexLabel::Kind::copy) {
          ++clique_edges;
          images.emplace(std::min(a.element, b.element), std::max(a.element, b.element));
        }
      }
      CHECK(images.size() == clique_edges);
    }
    CHECK(kgeo::build_star(cover).graph == g);
  }
}

TEST_CASE("vertex labels") {
  CHECK(kgeo::VertexLabel::hub(3).to_string() == "h3");
  CHECK(kgeo::VertexLabel::copy(12, 4).to_string() == "c12_4");
  CHECK(kgeo::VertexLabel::parse("c12_4") == kgeo::VertexLabel::copy(12, 4));
  CHECK(kgeo::VertexLabel::parse("h0") == kgeo::VertexLabel::hub(0));
  CHECK_FALSE(kgeo::VertexLabel::parse("x1").has_value());
  CHECK_FALSE(kgeo::VertexLabel::parse("c1").has_value());
  CHECK_FALSE(kgeo::VertexLabel::parse("h-1").has_value());
  CHECK_FALSE(kgeo::VertexLabel::parse("h").has_value());
  CHECK(kgeo::VertexLabel::hub(9) < kgeo::VertexLabel::copy(0, 0));
}

TEST_CASE("mu") {
  CHECK(kgeo::mu(kgeo::fano_plane_design()) == 1);
  CHECK(kgeo::mu(kgeo::twofold_6_design()) == 2);
  CHECK(kgeo::mu(kgeo::build_complete_triples(5)) == 3);
  CHECK(kgeo::mu(kgeo::build_sts(9)) == 1);
  CHECK_THROWS_AS(kgeo::mu(kgeo::build_complete_triples(3)), kgeo::PreconditionError);
}

TEST_CASE("predicted_diameter") {
  CHECK(kgeo::predicted_diameter(kgeo::fano_plane_design()) == 4);
  CHECK(kgeo::predicted_diameter(kgeo::build_sts(9)) == 5);
  CHECK(kgeo::predicted_diameter(kgeo::biplane_7_design()) == 4);
  CHECK(kgeo::predicted_diameter(kgeo::build_projective_plane(5)) == 4);
  for (const auto& e : kgeo::Catalog::default_catalog().entries()) {
    if (e.params.is_symmetric()) CHECK(kgeo::predicted_diameter(e.design) == 4);
  }
  CHECK_THROWS_AS(kgeo::predicted_diameter(kgeo::build_complete_triples(3)), kgeo::PreconditionError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kgeo/catalog.hpp"
#include "kgeo/design_builder.hpp"
#include "kgeo/errors.hpp"
#include "kgeo/graph_io.hpp"
#include "oracles.hpp"

namespace {

kgeo::LabeledGraph fano_star() {
  return kgeo::build_star(kgeo::cover_from_design(kgeo::fano_plane_design())).labeled();
}

}  // namespace

TEST_CASE("edge list round trip keeps canonical labels") {
  for (const auto& design : {kgeo::fano_plane_design(), kgeo::twofold_6_design(), kgeo::build_sts(9),
                             kgeo::build_projective_plane(3)}) {
    const auto star = kgeo::build_star(kgeo::cover_from_design(design)).labeled();
    const auto text = kgeo::write_edgelist(star);
    const auto back = kgeo::read_edgelist(text);
    CHECK(back.labels == star.labels);
    CHECK(back.graph == star.graph);
    CHECK(kgeo::write_edgelist(back) == text);
  }
}

TEST_CASE("round trip of shuffled generic graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 9;
    const auto g = oracle::random_connected_graph(rng, n, 0.3);
    kgeo::LabeledGraph labeled{g, {}};
    for (int v = 0; v < n; ++v) labeled.labels.push_back("v" + std::to_string((v * 7 + trial) % 97));
    const auto canon = kgeo::canonicalize(labeled);
    const auto back = kgeo::read_graph(kgeo::write_edgelist(labeled));
    CHECK(back.labels == canon.labels);
    CHECK(back.graph == canon.graph);
    const auto from_json = kgeo::read_graph(kgeo::write_graph(labeled, kgeo::GraphFormat::structured));
    CHECK(from_json.graph == canon.graph);
    CHECK(from_json.labels == canon.labels);
  }
}

TEST_CASE("edge list details") {
  const auto g = kgeo::read_edgelist("# comment\nh1 c0_1\nh0 c0_0   # trailing\n\nc0_0 c0_1\nh2\n");
  CHECK(g.labels == std::vector<std::string>{"h0", "h1", "h2", "c0_0", "c0_1"});
  CHECK(g.graph.edge_count() == 3);
  CHECK(g.graph.degree(2) == 0);
  const auto text = kgeo::write_edgelist(g);
  CHECK(text.find("\nh2\n") != std::string::npos);

  CHECK_THROWS_AS(kgeo::read_edgelist("a b c\n"), kgeo::ParseError);
  CHECK_THROWS_AS(kgeo::read_edgelist("a a\n"), kgeo::ParseError);
  CHECK_THROWS_AS(kgeo::read_edgelist("a b\nb a\n"), kgeo::ParseError);
  CHECK_THROWS_AS(kgeo::read_graph("{\"format\":\"kgeo-graph\",\"version\":1,\"vertices\":[\"a\"],"
                                   "\"edges\":[[\"a\",\"b\"]]}"),
                  kgeo::ParseError);
  CHECK_THROWS_AS(kgeo::read_graph("{broken"), kgeo::ParseError);
}

TEST_CASE("dot output") {
  const auto dot = kgeo::write_dot(fano_star());
  CHECK(dot.rfind("graph kgeo {", 0) == 0);
  CHECK(dot.find("\"h0\" [shape=box") != std::string::npos);
  CHECK(dot.find("\"c0_0\" [shape=circle]") != std::string::npos);
  CHECK(dot.find("\"h0\" -- \"c0_0\";") != std::string::npos);
  CHECK(dot == kgeo::write_dot(fano_star()));
}

TEST_CASE("report serialization") {
  const auto design = kgeo::fano_plane_design();
  const auto star = kgeo::build_star(kgeo::cover_from_design(design));
  kgeo::TheoremClaims claims{"test", 1, 3, {3}, 28, 4};
  const auto doc = kgeo::report_to_json(kgeo::full_report(design, star, claims));
  CHECK(doc["measured"]["K"] == "1");
  CHECK(doc["measured"]["diameter"] == 4);
  CHECK(doc["measured"]["connectivity"] == 3);
  CHECK(doc["predictions"]["mu"] == 1);
  CHECK(doc["flags"]["all_ok"] == true);
  CHECK(doc["params"] == nlohmann::json::array({7, 7, 3, 3, 1}));

  const auto summary = kgeo::spectrum_summary_json(kgeo::geodesic_spectrum(star.graph));
  CHECK(summary["max_count"] == "1");
  CHECK(summary["nonadjacent_pairs"] == 28 * 27 / 2 - 42);
}

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kgeo/catalog.hpp"
#include "kgeo/design_builder.hpp"
#include "kgeo/design_params.hpp"
#include "kgeo/star_graph.hpp"
#include "kgeo/verifier.hpp"
#include "oracles.hpp"

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Measured {
  int vertices;
  std::int64_t edges;
  kgeo::DegreeProfile degrees;
  kgeo::PathCount K;
  int diameter;
  int connectivity;
  int predicted_diameter;
  int mu;
};

Measured measure(const kgeo::BlockDesign& design) {
  const auto star = kgeo::build_star(kgeo::cover_from_design(design));
  const auto& g = star.graph;
  return {g.vertex_count(),
          static_cast<std::int64_t>(g.edge_count()),
          kgeo::degree_profile(g),
          kgeo::classify_geodetic(kgeo::geodesic_spectrum(g)),
          kgeo::diameter(g),
          kgeo::vertex_connectivity(g),
          kgeo::predicted_diameter(design),
          kgeo::mu(design)};
}

std::set<int> support(const kgeo::DegreeProfile& p) {
  std::set<int> s;
  for (const auto& [d, c] : p) s.insert(d);
  return s;
}

std::string describe(const Measured& m) {
  std::ostringstream os;
  os << m.vertices << "v " << m.edges << "e K=" << m.K << " diam=" << m.diameter
     << " conn=" << m.connectivity << " degrees={";
  bool first = true;
  for (int d : support(m.degrees)) {
    os << (first ? "" : ",") << d;
    first = false;
  }
  os << "}";
  return os.str();
}

kgeo::DesignParams params_of(const kgeo::BlockDesign& d) { return *kgeo::verify_design(d).derived_params; }

std::vector<std::pair<std::string, kgeo::BlockDesign>> acceptance_designs() {
  return {{"fano-plane", kgeo::fano_plane_design()},
          {"twofold-6", kgeo::twofold_6_design()},
          {"biplane-7", kgeo::biplane_7_design()},
          {"complete-triples-5", kgeo::build_complete_triples(5)},
          {"sts-9-bose", kgeo::build_sts(9)}};
}

std::vector<std::pair<std::string, kgeo::BlockDesign>> all_designs() {
  auto out = acceptance_designs();
  for (const auto& e : kgeo::Catalog::default_catalog().entries()) out.emplace_back(e.name, e.design);
  out.emplace_back("plane-3", kgeo::build_projective_plane(3));
  out.emplace_back("sts-7-skolem", kgeo::build_sts(7));
  out.emplace_back("sts-13-skolem", kgeo::build_sts(13));
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto design = kgeo::fano_plane_design();
  const auto m = measure(design);
  o.require(m.vertices == 28, "28 vertices");
  o.require(m.edges == 42, "42 edges");
  o.require(m.degrees == kgeo::DegreeProfile{{3, 28}}, "3-regular");
  o.require(m.K == 1, "K = 1");
  o.require(m.diameter == 4, "diameter 4");
  o.require(m.connectivity == 3, "connectivity 3");
  o.detail << describe(m);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto m = measure(kgeo::twofold_6_design());
  o.require(m.vertices == 36, "36 vertices");
  o.require(m.edges == 60, "60 edges");
  o.require(support(m.degrees) == std::set<int>{5, 3}, "degree support {5,3}");
  o.require(m.K <= 2, "K <= 2");
  o.require(m.diameter == 4 || m.diameter == 5, "diameter in {4,5}");
  o.require(m.diameter == m.predicted_diameter, "diameter = predicted");
  o.require(m.connectivity == 3, "connectivity 3");
  o.detail << describe(m) << " predicted=" << m.predicted_diameter;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto m = measure(kgeo::biplane_7_design());
  o.require(m.vertices == 35, "35 vertices");
  o.require(m.edges == 70, "70 edges");
  o.require(m.degrees == kgeo::DegreeProfile{{4, 35}}, "4-regular");
  o.require(m.K <= 2, "K <= 2");
  o.require(m.diameter == 4, "diameter 4");
  o.require(m.connectivity == 4, "connectivity 4");
  o.detail << describe(m);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto m = measure(kgeo::build_complete_triples(5));
  o.require(m.vertices == 35, "35 vertices");
  o.require(m.edges == 60, "60 edges");
  o.require(support(m.degrees) == std::set<int>{6, 3}, "degree support {6,3}");
  o.require(m.K <= 3, "K <= 3");
  o.require(m.diameter == 4, "diameter 4");
  o.require(m.connectivity == 3, "connectivity 3");
  o.detail << describe(m);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto m = measure(kgeo::build_sts(9));
  o.require(m.vertices == 45, "45 vertices");
  o.require(support(m.degrees) == std::set<int>{4, 3}, "degree support {4,3}");
  o.require(m.K == 1, "K = 1");
  o.require(m.predicted_diameter == 5, "predicted diameter 5");
  o.require(m.diameter == 5, "diameter 5");
  o.require(m.connectivity == 3, "connectivity 3");
  o.detail << describe(m) << " predicted=" << m.predicted_diameter;
  return o;
}

Outcome criterion6() {
  Outcome o;
  int designs = 0, symmetric = 0, steiner = 0;
  for (const auto& [name, design] : all_designs()) {
    const auto p = params_of(design);
    const auto g = kgeo::build_star(kgeo::cover_from_design(design)).graph;
    const auto K = kgeo::classify_geodetic(kgeo::geodesic_spectrum(g));
    o.require(K <= kgeo::mu(design), name + ": K <= mu");
    if (p.is_symmetric()) {
      o.require(K <= p.lambda, name + ": K <= lambda");
      ++symmetric;
    }
    if (p.lambda == 1) {
      o.require(K == 1, name + ": K = 1");
      ++steiner;
    }
    ++designs;
  }
  o.detail << designs << " designs, " << symmetric << " symmetric, " << steiner << " with lambda = 1";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int built = 0;
  for (int n = 3; n <= 99; ++n) {
    const bool admissible = n % 6 == 1 || n % 6 == 3;
    bool succeeded = false;
    try {
      const auto design = kgeo::build_sts(n);
      succeeded = true;
      const auto report = kgeo::verify_design(design);
      o.require(report.derived_params.has_value() &&
                    *report.derived_params == kgeo::triple_system_params(n, 1),
                "STS(" + std::to_string(n) + ") verifies");
      ++built;
    } catch (const std::exception&) {
      succeeded = false;
    }
    o.require(succeeded == admissible, "n = " + std::to_string(n));
  }
  o.detail << built << " systems built and verified for 3 <= n <= 99";
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto check_witness = [&](std::int64_t v, std::int64_t k, std::int64_t lambda) {
    const auto verdict = kgeo::brc_admissible(v, k, lambda);
    const std::string tag = "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + ")";
    o.require(verdict.brc_ok == kgeo::BrcStatus::pass, tag + " accepted");
    if (v % 2 == 1) {
      o.require(verdict.witness.has_value(), tag + " witness recorded");
      if (verdict.witness) {
        const auto [x, y, z] = *verdict.witness;
        const std::int64_t sign = ((v - 1) / 2) % 2 == 0 ? 1 : -1;
        o.require(x * x == (k - lambda) * y * y + sign * lambda * z * z && (x || y || z),
                  tag + " witness satisfies the form");
        o.detail << tag << " witness (" << x << "," << y << "," << z << ") ";
      }
    }
  };
  o.require(kgeo::brc_admissible(22, 7, 2).brc_ok == kgeo::BrcStatus::fail_even_square, "(22,7,2) rejected");
  o.require(kgeo::brc_admissible(43, 7, 1).brc_ok == kgeo::BrcStatus::fail_odd_form, "(43,7,1) rejected");
  check_witness(7, 3, 1);
  check_witness(11, 5, 2);
  check_witness(13, 4, 1);
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> size(4, 12);
  std::uniform_real_distribution<double> density(0.05, 0.5);
  std::size_t pairs = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = oracle::random_connected_graph(rng, size(rng), density(rng));
    for (const auto& rec : kgeo::geodesic_spectrum(g).records) {
      const auto brute = oracle::all_simple_paths(g, rec.u, rec.v);
      o.require(rec.distance == brute.shortest && rec.count == brute.count,
                "trial " + std::to_string(trial) + " pair counts");
      ++pairs;
    }
    o.require(kgeo::vertex_connectivity(g) == oracle::connectivity_by_deletion(g),
              "trial " + std::to_string(trial) + " connectivity");
  }
  o.detail << "25 graphs, " << pairs << " nonadjacent pairs compared";
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto designs = all_designs();
  for (int n = 7; n <= 33; ++n) {
    if (n % 6 == 1 || n % 6 == 3) designs.emplace_back("sts-" + std::to_string(n), kgeo::build_sts(n));
  }
  for (int q : {2, 3, 4, 5, 7, 8, 9}) designs.emplace_back("plane-" + std::to_string(q), kgeo::build_projective_plane(q));
  for (int lambda = 1; lambda <= 3; ++lambda) {
    for (int n = 3; n <= 13; ++n) {
      if (kgeo::hanani_admissible(n, lambda)) {
        designs.emplace_back("ts-" + std::to_string(n) + "-" + std::to_string(lambda),
                             kgeo::build_triple_system(n, lambda));
      }
    }
  }
  for (const auto& [name, design] : designs) {
    const auto p = params_of(design);
    const auto g = kgeo::build_star(kgeo::cover_from_design(design)).graph;
    o.require(g.vertex_count() == p.n * (p.r + 1), name + " vertex count");
    o.require(static_cast<std::int64_t>(g.edge_count()) == p.n * p.r * (p.k + 1) / 2, name + " edge count");
  }
  o.detail << designs.size() << " star graphs checked";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Fano plane pipeline", criterion1},
      {"2 twofold (10,6,5,3,2) pipeline", criterion2},
      {"3 biplane (7,7,4,4,2) pipeline", criterion3},
      {"4 complete triples n=5", criterion4},
      {"5 Bose STS(9)", criterion5},
      {"6 mu / lambda / geodetic bounds", criterion6},
      {"7 Steiner screen 3..99", criterion7},
      {"8 Bruck-Ryser-Chowla screen", criterion8},
      {"9 brute-force oracle equivalence", criterion9},
      {"10 vertex/edge count formulas", criterion10},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail << " [exception: " << e.what() << "]";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << outcome.detail.str()
              << " (" << ms.count() << " ms)\n";
    if (!outcome.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}

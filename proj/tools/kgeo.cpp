// kgeo: block designs, star-of-cliques graphs and their geodetic properties.
//
// Exit codes: 0 success, 2 usage or parse error, 3 construction unavailable,
// 4 property violation (inadmissible parameters, failed claim, disconnected
// graph, design failing verification).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kgeo/catalog.hpp"
#include "kgeo/design_builder.hpp"
#include "kgeo/design_io.hpp"
#include "kgeo/design_params.hpp"
#include "kgeo/errors.hpp"
#include "kgeo/families.hpp"
#include "kgeo/graph_io.hpp"
#include "kgeo/star_graph.hpp"
#include "kgeo/verifier.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnavailable = 3;
constexpr int kExitViolation = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kgeo::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void emit(const std::string& content, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << content;
  } else {
    write_file(output, content);
  }
}

kgeo::Catalog open_catalog(const std::string& path) {
  if (path.empty()) return kgeo::Catalog::default_catalog();
  if (!fs::exists(path)) return kgeo::Catalog::builtin();
  return kgeo::Catalog::load(path);
}

json verdict_json(const kgeo::AdmissibilityVerdict& v) {
  json doc{{"necessary_ok", v.necessary_ok}, {"admissible", v.admissible()}};
  if (v.hanani_ok) doc["hanani_ok"] = *v.hanani_ok;
  if (v.brc_ok) doc["brc"] = kgeo::to_string(*v.brc_ok);
  if (v.witness) doc["witness"] = *v.witness;
  if (v.search_bound) doc["search_bound"] = *v.search_bound;
  return doc;
}

int cmd_params(bool triple, bool symmetric, const std::vector<std::int64_t>& args) {
  if (triple == symmetric) throw UsageError("params: give exactly one of --triple or --symmetric");
  json out;
  kgeo::AdmissibilityVerdict verdict;
  if (triple) {
    if (args.size() != 2) throw UsageError("params --triple expects: n lambda");
    const auto n = args[0];
    const auto lambda = args[1];
    if (n < 3 || lambda < 1) throw UsageError("params --triple needs n >= 3 and lambda >= 1");
    verdict.hanani_ok = kgeo::hanani_admissible(n, lambda);
    out["kind"] = "triple";
    out["n"] = n;
    out["lambda"] = lambda;
    if (*verdict.hanani_ok) {
      const kgeo::DesignParams p(lambda * n * (n - 1) / 6, n, lambda * (n - 1) / 2, 3, lambda);
      verdict.necessary_ok = kgeo::check_necessary(p);
      out["params"] = kgeo::params_to_json(p);
    }
  } else {
    std::int64_t v = 0, k = 0, lambda = 0;
    if (args.size() == 2) {
      const auto p = kgeo::symmetric_params(args[0], args[1]);
      v = p.n;
      k = p.k;
      lambda = p.lambda;
    } else if (args.size() == 3) {
      v = args[0];
      k = args[1];
      lambda = args[2];
    } else {
      throw UsageError("params --symmetric expects: n lambda, or v k lambda");
    }
    out["kind"] = "symmetric";
    out["v"] = v;
    out["k"] = k;
    out["lambda"] = lambda;
    if (lambda * (v - 1) == k * (k - 1) && k >= 2 && k <= v) {
      verdict = kgeo::brc_admissible(v, k, lambda);
      out["params"] = kgeo::params_to_json(kgeo::DesignParams(v, v, k, k, lambda));
    } else {
      verdict.necessary_ok = false;
    }
  }
  out["verdict"] = verdict_json(verdict);
  std::cout << kgeo::format_json(out);
  return verdict.admissible() ? kExitOk : kExitViolation;
}

int cmd_family(const std::string& name, std::int64_t n, const std::string& out_dir,
               const std::string& catalog_path, std::uint64_t budget) {
  const auto family = kgeo::parse_family(name);
  if (!family) throw UsageError("unknown family '" + name + "'");
  if (!kgeo::FamilySpec::admissible(*family, n)) {
    throw UsageError("n = " + std::to_string(n) + " is outside the range of " + kgeo::to_string(*family));
  }
  const kgeo::FamilySpec spec(*family, n);
  const auto catalog = open_catalog(catalog_path);
  const auto design = kgeo::build_family_design(spec, catalog, budget);
  const auto cover = kgeo::cover_from_design(design);
  const auto star = kgeo::build_star(cover);
  const auto report = kgeo::full_report(design, star, spec.claims());
  const auto labeled = star.labeled();

  json bundle;
  bundle["format"] = "kgeo-family";
  bundle["version"] = kgeo::kFormatVersion;
  bundle["family"] = kgeo::to_string(*family);
  bundle["n"] = n;
  bundle["design"] = kgeo::design_to_json(design);
  bundle["cover"] = kgeo::cover_to_json(cover);
  bundle["graph"] = kgeo::graph_to_json(labeled);
  bundle["report"] = kgeo::report_to_json(report);

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_file(dir / "design.json", kgeo::write_design(design));
    write_file(dir / "graph.edgelist", kgeo::write_edgelist(labeled));
    write_file(dir / "graph.dot", kgeo::write_dot(labeled));
    write_file(dir / "report.json", kgeo::format_json(kgeo::report_to_json(report)));
    write_file(dir / "bundle.json", kgeo::format_json(bundle));
  }
  std::cout << kgeo::format_json(kgeo::report_to_json(report));
  return report.all_ok() ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& path) {
  const auto graph = kgeo::read_graph(read_file(path));
  const auto& g = graph.graph;
  if (g.vertex_count() < 2) throw kgeo::ParseError("graph needs at least two vertices");
  const auto spectrum = kgeo::geodesic_spectrum(g);
  json degrees = json::array();
  for (const auto& [degree, count] : kgeo::degree_profile(g)) degrees.push_back({degree, count});
  json out{{"vertex_count", g.vertex_count()},
           {"edge_count", g.edge_count()},
           {"spectrum", kgeo::spectrum_summary_json(spectrum)},
           {"K", kgeo::classify_geodetic(spectrum).str()},
           {"diameter", kgeo::diameter(g)},
           {"connectivity", kgeo::vertex_connectivity(g)},
           {"degree_profile", std::move(degrees)}};
  std::cout << kgeo::format_json(out);
  return kExitOk;
}

int cmd_catalog(const std::string& action, const std::string& file, const std::string& catalog_path) {
  const std::string path = catalog_path.empty() ? kgeo::default_catalog_path().string() : catalog_path;
  if (action == "list") {
    const auto catalog = open_catalog(path);
    for (const auto& e : catalog.entries()) {
      std::cout << e.params << "  " << e.name << (e.builtin ? "  [builtin]" : "") << "\n";
    }
    return kExitOk;
  }
  if (action == "validate") {
    // load() re-verifies every entry and throws on the first bad one.
    const auto catalog = open_catalog(path);
    for (const auto& e : catalog.entries()) {
      std::cout << "ok  " << e.params << "  " << e.name << "\n";
    }
    std::cout << catalog.entries().size() << " entries verified\n";
    return kExitOk;
  }
  if (action == "add") {
    if (file.empty()) throw UsageError("catalog add needs a design file");
    const auto design = kgeo::read_design(read_file(file));
    const auto check = kgeo::verify_design(design);
    if (!check.ok()) {
      std::cerr << "kgeo: refusing to add " << file << ": not a block design\n";
      return kExitViolation;
    }
    auto catalog = fs::exists(path) ? kgeo::Catalog::load(path) : kgeo::Catalog::builtin();
    catalog.add(fs::path(file).stem().string(), "added from " + fs::path(file).filename().string(), design);
    catalog.save(path);
    std::cout << "added " << *check.derived_params << " to " << path << "\n";
    return kExitOk;
  }
  throw UsageError("catalog action must be list, validate or add");
}

int cmd_export(const std::string& input, const std::string& format, const std::string& output) {
  const auto fmt = kgeo::parse_graph_format(format);
  if (!fmt) throw UsageError("unknown format '" + format + "'");
  emit(kgeo::write_graph(kgeo::read_graph(read_file(input)), *fmt), output);
  return kExitOk;
}

int cmd_star(const std::string& input, const std::string& format, const std::string& output) {
  const auto fmt = kgeo::parse_graph_format(format);
  if (!fmt) throw UsageError("unknown format '" + format + "'");
  const auto design = kgeo::read_design(read_file(input));
  if (!kgeo::verify_design(design).ok()) {
    std::cerr << "kgeo: " << input << " is not a block design\n";
    return kExitViolation;
  }
  emit(kgeo::write_graph(kgeo::build_star(kgeo::cover_from_design(design)).labeled(), *fmt), output);
  return kExitOk;
}

int cmd_check_design(const std::string& input) {
  const auto design = kgeo::read_design(read_file(input));
  const auto r = kgeo::verify_design(design);
  json out{{"uniform_block_size", r.uniform_block_size},
           {"replication", r.replication},
           {"replication_uniform", r.replication_uniform},
           {"pair_min", r.pair_min},
           {"pair_max", r.pair_max},
           {"pair_uniform", r.pair_uniform}};
  if (r.derived_params) {
    out["params"] = kgeo::params_to_json(*r.derived_params);
    if (design.block_count() >= 2) {
      out["mu"] = kgeo::mu(design);
      out["predicted_diameter"] = kgeo::predicted_diameter(design);
    }
  }
  std::cout << kgeo::format_json(out);
  return r.ok() ? kExitOk : kExitViolation;
}

std::vector<kgeo::Block> parse_base_blocks(const std::vector<std::string>& specs) {
  std::vector<kgeo::Block> blocks;
  for (const auto& spec : specs) {
    kgeo::Block block;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        block.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw UsageError("bad base block '" + spec + "'");
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

int cmd_design(const std::string& kind, const std::vector<std::int64_t>& args,
               const std::vector<std::string>& base, const std::string& input,
               const std::string& output, const std::string& catalog_path, std::uint64_t budget) {
  auto need = [&](std::size_t count, const char* usage) {
    if (args.size() != count) throw UsageError(std::string("design ") + kind + " expects: " + usage);
  };
  auto as_int = [](std::int64_t x) {
    if (x < 0 || x > kgeo::kMaxDerivedN) throw UsageError("argument out of range");
    return static_cast<int>(x);
  };
  std::optional<kgeo::BlockDesign> design;
  if (kind == "sts") {
    need(1, "n");
    design = kgeo::build_sts(as_int(args[0]));
  } else if (kind == "triples") {
    need(1, "n");
    design = kgeo::build_complete_triples(as_int(args[0]));
  } else if (kind == "plane") {
    need(1, "q");
    design = kgeo::build_projective_plane(as_int(args[0]));
  } else if (kind == "triple-system") {
    need(2, "n lambda");
    design = kgeo::build_triple_system(as_int(args[0]), as_int(args[1]), open_catalog(catalog_path), budget);
  } else if (kind == "symmetric") {
    need(2, "n lambda");
    design = kgeo::build_symmetric_design(as_int(args[0]), as_int(args[1]), open_catalog(catalog_path), budget);
  } else if (kind == "develop") {
    need(1, "v (with --base)");
    if (base.empty()) throw UsageError("design develop needs at least one --base block");
    design = kgeo::develop_difference_family(as_int(args[0]), parse_base_blocks(base));
  } else if (kind == "complement") {
    if (input.empty()) throw UsageError("design complement needs --input");
    design = kgeo::complement_design(kgeo::read_design(read_file(input)));
  } else if (kind == "solve") {
    need(5, "b n r k lambda");
    const kgeo::DesignParams params(args[0], args[1], args[2], args[3], args[4]);
    const auto result = kgeo::solve_design(params, budget);
    if (!result.design) {
      std::cerr << "kgeo: no design " << params << " ("
                << (result.status == kgeo::SolveStatus::exhausted ? "search exhausted" : "node budget exceeded")
                << " after " << result.nodes << " nodes)\n";
      return kExitUnavailable;
    }
    design = result.design;
  } else {
    throw UsageError("unknown design kind '" + kind + "'");
  }
  emit(kgeo::write_design(*design), output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block designs, star-of-cliques graphs and K-geodetic verification"};
  app.require_subcommand(1);

  bool triple = false, symmetric = false;
  std::vector<std::int64_t> ints;
  std::string name, out_dir, catalog_path, file, format = "edgelist", output, input, action;
  std::vector<std::string> base;
  std::int64_t n = 0;
  std::uint64_t budget = kgeo::kDefaultSolverBudget;

  auto* params = app.add_subcommand("params", "Derive parameters and run the admissibility screens");
  params->add_flag("--triple", triple, "Triple system from n lambda");
  params->add_flag("--symmetric", symmetric, "Symmetric design from n lambda, or v k lambda");
  params->add_option("values", ints, "Integers")->required();

  auto* family = app.add_subcommand("family", "Build and verify one member of a graph family");
  family->add_option("name", name, "thm5_sts | thm6_twofold | thm7_threefold | thm8_plane | "
                                   "thm9_biplane | thm10_threefold_symmetric (or thm5..thm10)")
      ->required();
  family->add_option("n", n, "The family parameter")->required();
  family->add_option("-o,--out", out_dir, "Directory for design, graph and report files");
  family->add_option("--catalog", catalog_path, "Catalog data file");
  family->add_option("--budget", budget, "Solver node budget");

  auto* verify = app.add_subcommand("verify", "Measure K, diameter, connectivity and degrees of a graph");
  verify->add_option("graph", file, "Edge list or structured graph file")->required();

  auto* catalog = app.add_subcommand("catalog", "List, validate or extend the design catalog");
  catalog->add_option("action", action, "list | validate | add")->required();
  catalog->add_option("design", file, "Design file for add");
  catalog->add_option("--catalog", catalog_path, "Catalog data file");

  auto* exporter = app.add_subcommand("export", "Convert a graph file between formats");
  exporter->add_option("graph", file, "Input graph file")->required();
  exporter->add_option("-f,--format", format, "dot | edgelist | structured");
  exporter->add_option("-o,--output", output, "Output file (default stdout)");

  auto* star = app.add_subcommand("star", "Build the star graph of a design file");
  star->add_option("design", file, "Design file")->required();
  star->add_option("-f,--format", format, "dot | edgelist | structured");
  star->add_option("-o,--output", output, "Output file (default stdout)");

  auto* check = app.add_subcommand("check-design", "Verify the design axioms for a design file");
  check->add_option("design", file, "Design file")->required();

  auto* design = app.add_subcommand("design", "Construct a design");
  design->add_option("kind", name, "sts | triples | plane | triple-system | symmetric | develop | complement | solve")
      ->required();
  design->add_option("values", ints, "Integer arguments");
  design->add_option("--base", base, "Base block for develop, e.g. 0,1,3");
  design->add_option("-i,--input", input, "Design file for complement");
  design->add_option("-o,--output", output, "Output file (default stdout)");
  design->add_option("--catalog", catalog_path, "Catalog data file");
  design->add_option("--budget", budget, "Solver node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*params) return cmd_params(triple, symmetric, ints);
    if (*family) return cmd_family(name, n, out_dir, catalog_path, budget);
    if (*verify) return cmd_verify(file);
    if (*catalog) return cmd_catalog(action, file, catalog_path);
    if (*exporter) return cmd_export(file, format, output);
    if (*star) return cmd_star(file, format, output);
    if (*check) return cmd_check_design(file);
    if (*design) return cmd_design(name, ints, base, input, output, catalog_path, budget);
  } catch (const UsageError& e) {
    std::cerr << "kgeo: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kgeo::ParseError& e) {
    std::cerr << "kgeo: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kgeo::ConstructionUnavailable& e) {
    std::cerr << "kgeo: " << e.what() << "\n";
    return kExitUnavailable;
  } catch (const kgeo::DisconnectedGraph& e) {
    std::cerr << "kgeo: " << e.what() << "\n";
    return kExitViolation;
  } catch (const kgeo::InadmissibleParameters& e) {
    std::cerr << "kgeo: " << e.what() << "\n";
    return kExitViolation;
  } catch (const kgeo::PreconditionError& e) {
    std::cerr << "kgeo: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

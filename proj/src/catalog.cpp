#include "kgeo/catalog.hpp"

#include <fstream>
#include <sstream>

#include "kgeo/design_io.hpp"
#include "kgeo/errors.hpp"

#ifndef KGEO_DEFAULT_CATALOG
#define KGEO_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace kgeo {

using nlohmann::json;

namespace {

BlockDesign from_one_based(int n, std::vector<Block> blocks) {
  for (auto& block : blocks) {
    for (auto& x : block) --x;
  }
  return BlockDesign(n, std::move(blocks));
}

CatalogEntry make_entry(std::string name, std::string source, BlockDesign design, bool builtin) {
  const auto report = verify_design(design);
  if (!report.derived_params) {
    throw PreconditionError("catalog entry '" + name + "' is not a block design");
  }
  return CatalogEntry{std::move(name), std::move(source), std::move(design),
                      *report.derived_params, builtin};
}

}  // namespace

BlockDesign twofold_6_design() {
  return from_one_based(6, {{1, 2, 4}, {1, 2, 3}, {3, 4, 5}, {2, 4, 5}, {2, 5, 6},
                            {1, 5, 6}, {2, 3, 6}, {1, 3, 5}, {1, 4, 6}, {3, 4, 6}});
}

BlockDesign fano_plane_design() {
  return from_one_based(7, {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}});
}

BlockDesign biplane_7_design() {
  return from_one_based(7, {{1, 2, 3, 4}, {1, 3, 5, 7}, {1, 4, 5, 6}, {1, 2, 6, 7},
                            {2, 3, 5, 6}, {2, 4, 5, 7}, {3, 4, 6, 7}});
}

Catalog Catalog::builtin() {
  Catalog catalog;
  catalog.entries_.push_back(make_entry("twofold-6", "built-in block list", twofold_6_design(), true));
  catalog.entries_.push_back(make_entry("fano-plane", "built-in block list", fano_plane_design(), true));
  catalog.entries_.push_back(make_entry("biplane-7", "built-in block list", biplane_7_design(), true));
  return catalog;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("catalog " + path.string() + " is not JSON: " + e.what());
  }

  Catalog catalog = builtin();
  try {
    if (doc.at("format") != "kgeo-catalog") throw ParseError("not a kgeo catalog: " + path.string());
    if (doc.at("version").get<int>() != kFormatVersion) {
      throw ParseError("unsupported catalog version " + doc.at("version").dump());
    }
    for (const auto& item : doc.at("entries")) {
      const auto name = item.at("name").get<std::string>();
      json design_doc = item;
      design_doc.erase("name");
      design_doc.erase("source");
      auto design = design_from_json(design_doc);
      if (!item.contains("params")) throw ParseError("catalog entry '" + name + "' has no params");
      try {
        catalog.add(name, item.value("source", ""), std::move(design));
      } catch (const PreconditionError& e) {
        throw ParseError(e.what());
      }
    }
  } catch (const json::exception& e) {
    throw ParseError("malformed catalog " + path.string() + ": " + e.what());
  }
  return catalog;
}

const Catalog& Catalog::default_catalog() {
  static const Catalog catalog = [] {
    const auto path = default_catalog_path();
    return std::filesystem::exists(path) ? load(path) : builtin();
  }();
  return catalog;
}

std::optional<BlockDesign> Catalog::lookup(const DesignParams& params) const {
  for (const auto& entry : entries_) {
    if (entry.params == params) return entry.design;
  }
  return std::nullopt;
}

void Catalog::add(std::string name, std::string source, BlockDesign design) {
  entries_.push_back(make_entry(std::move(name), std::move(source), std::move(design), false));
}

void Catalog::save(const std::filesystem::path& path) const {
  json doc;
  doc["format"] = "kgeo-catalog";
  doc["version"] = kFormatVersion;
  doc["entries"] = json::array();
  for (const auto& entry : entries_) {
    if (entry.builtin) continue;
    json item;
    item["name"] = entry.name;
    item["source"] = entry.source;
    item["params"] = params_to_json(entry.params);
    item["ground_size"] = entry.design.ground_size();
    item["blocks"] = entry.design.blocks();
    doc["entries"].push_back(std::move(item));
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write catalog file " + path.string());
  out << format_json(doc);
}

std::optional<BlockDesign> catalog_lookup(const DesignParams& params) {
  return Catalog::default_catalog().lookup(params);
}

std::filesystem::path default_catalog_path() { return KGEO_DEFAULT_CATALOG; }

}  // namespace kgeo

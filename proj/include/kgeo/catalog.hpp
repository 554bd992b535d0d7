#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kgeo/block_design.hpp"
#include "kgeo/design_params.hpp"

namespace kgeo {

struct CatalogEntry {
  std::string name;
  std::string source;
  BlockDesign design;
  DesignParams params;  // derived by verify_design, never read from disk
  bool builtin = false;
};

/// Bundled explicit designs. Three small designs are compiled in; further entries come from a JSON data file (see
/// data/README.md for the schema). Every entry is re-verified on insertion.
class Catalog {
 public:
  /// Only the compiled-in designs.
  static Catalog builtin();

  /// Built-ins plus the entries of `path`. Throws ParseError on malformed
  /// JSON, a wrong format tag or version, an entry that is not a design, or
  /// stored params that disagree with the blocks.
  static Catalog load(const std::filesystem::path& path);

  /// Built-ins plus the bundled data file when it exists.
  static const Catalog& default_catalog();

  std::optional<BlockDesign> lookup(const DesignParams& params) const;
  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

  /// Throws PreconditionError if the design fails verification.
  void add(std::string name, std::string source, BlockDesign design);

  /// Writes the non-builtin entries.
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<CatalogEntry> entries_;
};

std::optional<BlockDesign> catalog_lookup(const DesignParams& params);

/// Path of the bundled catalog data file.
std::filesystem::path default_catalog_path();

// Fixed block lists on points 0..n-1.
BlockDesign twofold_6_design();   // (10, 6, 5, 3, 2)
BlockDesign fano_plane_design();  // (7, 7, 3, 3, 1)
BlockDesign biplane_7_design();   // (7, 7, 4, 4, 2)

}  // namespace kgeo

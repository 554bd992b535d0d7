#pragma once

#include <string>

#include "kgeo/block_design.hpp"
#include "kgeo/catalog.hpp"
#include <json.hpp>

namespace kgeo {

inline constexpr int kFormatVersion = 1;

nlohmann::json design_to_json(const BlockDesign& design);

/// Reads {"format": "kgeo-design", "version": 1, "ground_size": n,
/// "blocks": [[...], ...]}. An optional "params" array is checked against
/// the blocks when present. Throws ParseError.
BlockDesign design_from_json(const nlohmann::json& doc);

std::string write_design(const BlockDesign& design);
BlockDesign read_design(const std::string& text);

nlohmann::json params_to_json(const DesignParams& params);

}  // namespace kgeo

namespace kgeo {

/// Two-space indented JSON with innermost integer arrays kept on one line.
std::string format_json(const nlohmann::json& doc);

}  // namespace kgeo

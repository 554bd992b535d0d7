#include "kgeo/design_io.hpp"

#include "kgeo/errors.hpp"

namespace kgeo {

using nlohmann::json;

json params_to_json(const DesignParams& p) { return json::array({p.b, p.n, p.r, p.k, p.lambda}); }

json design_to_json(const BlockDesign& design) {
  json doc;
  doc["format"] = "kgeo-design";
  doc["version"] = kFormatVersion;
  const auto report = verify_design(design);
  if (report.derived_params) doc["params"] = params_to_json(*report.derived_params);
  doc["ground_size"] = design.ground_size();
  doc["blocks"] = design.blocks();
  return doc;
}

BlockDesign design_from_json(const json& doc) {
  try {
    if (doc.contains("format") && doc.at("format") != "kgeo-design") {
      throw ParseError("unexpected format tag " + doc.at("format").dump());
    }
    if (doc.contains("version") && doc.at("version").get<int>() != kFormatVersion) {
      throw ParseError("unsupported design format version " + doc.at("version").dump());
    }
    BlockDesign design(doc.at("ground_size").get<int>(), doc.at("blocks").get<std::vector<Block>>());
    if (doc.contains("params")) {
      const auto stored = doc.at("params").get<std::vector<std::int64_t>>();
      const auto report = verify_design(design);
      if (stored.size() != 5 || !report.derived_params ||
          params_to_json(*report.derived_params) != json(stored)) {
        throw ParseError("stored params " + doc.at("params").dump() + " disagree with the blocks");
      }
    }
    return design;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed design document: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid design: ") + e.what());
  }
}

std::string write_design(const BlockDesign& design) { return format_json(design_to_json(design)); }

BlockDesign read_design(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("design file is not JSON: ") + e.what());
  }
  return design_from_json(doc);
}

}  // namespace kgeo

#include <regex>

namespace kgeo {

std::string format_json(const nlohmann::json& doc) {
  static const std::regex int_array(R"(\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\])");
  static const std::regex spaces(R"(,\s+)");
  const std::string text = doc.dump(2);
  std::string out;
  auto begin = std::sregex_iterator(text.begin(), text.end(), int_array);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    out.append(text, last, it->position() - last);
    out += "[" + std::regex_replace((*it)[1].str(), spaces, ", ") + "]";
    last = it->position() + it->length();
  }
  out.append(text, last);
  return out + "\n";
}

}  // namespace kgeo

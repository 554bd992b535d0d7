#pragma once

#include <string>

#include <json.hpp>

#include "kgeo/graph.hpp"
#include "kgeo/star_graph.hpp"
#include "kgeo/verifier.hpp"

namespace kgeo {

enum class GraphFormat { dot, edgelist, structured };

std::optional<GraphFormat> parse_graph_format(const std::string& text);

/// Vertices in canonical label order: hubs by element, copies by (member,
/// element), any other labels afterwards in byte order.
LabeledGraph canonicalize(const LabeledGraph& graph);

/// Plain text: a comment header, one "label" line per isolated vertex,
/// then one "label label" line per edge in lexicographic vertex order.
std::string write_edgelist(const LabeledGraph& graph);

/// Inverse of write_edgelist; '#' starts a comment. The result is
/// canonicalized. Throws ParseError.
LabeledGraph read_edgelist(const std::string& text);

/// Graphviz; hub vertices drawn as filled boxes, copy vertices as circles.
std::string write_dot(const LabeledGraph& graph);

nlohmann::json graph_to_json(const LabeledGraph& graph);
LabeledGraph graph_from_json(const nlohmann::json& doc);

std::string write_graph(const LabeledGraph& graph, GraphFormat format);

/// Reads either an edge list or a structured JSON graph (sniffed from the
/// first non-blank character). Throws ParseError.
LabeledGraph read_graph(const std::string& text);

nlohmann::json spectrum_summary_json(const GeodesicSpectrum& spectrum);
nlohmann::json report_to_json(const GeodeticReport& report);
nlohmann::json cover_to_json(const Cover& cover);

}  // namespace kgeo

#include "kgeo/graph_io.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "kgeo/design_io.hpp"
#include "kgeo/errors.hpp"

namespace kgeo {

using nlohmann::json;

namespace {

struct LabelKey {
  int group;  // 0 hub, 1 copy, 2 other
  VertexLabel parsed;
  std::string text;

  friend bool operator<(const LabelKey& a, const LabelKey& b) {
    if (a.group != b.group) return a.group < b.group;
    if (a.group < 2) return a.parsed < b.parsed;
    return a.text < b.text;
  }
};

LabelKey key_of(const std::string& label) {
  if (auto parsed = VertexLabel::parse(label)) {
    // Round-trip check keeps "h01" style labels in the generic group.
    if (parsed->to_string() == label) {
      return {parsed->kind == VertexLabel::Kind::hub ? 0 : 1, *parsed, label};
    }
  }
  return {2, {}, label};
}

LabeledGraph build_labeled(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<int>(i)).second) {
      throw ParseError("duplicate vertex label " + labels[i]);
    }
  }
  LabeledGraph out{Graph(static_cast<int>(labels.size())), std::move(labels)};
  for (const auto& [a, b] : edges) {
    try {
      out.graph.add_edge(index.at(a), index.at(b));
    } catch (const std::out_of_range&) {
      throw ParseError("edge " + a + " " + b + " names an undeclared vertex");
    } catch (const PreconditionError& e) {
      throw ParseError("bad edge " + a + " " + b + ": " + e.what());
    }
  }
  return canonicalize(out);
}

}  // namespace

std::optional<GraphFormat> parse_graph_format(const std::string& text) {
  if (text == "dot") return GraphFormat::dot;
  if (text == "edgelist") return GraphFormat::edgelist;
  if (text == "structured" || text == "json") return GraphFormat::structured;
  return std::nullopt;
}

LabeledGraph canonicalize(const LabeledGraph& graph) {
  const int n = graph.graph.vertex_count();
  std::vector<LabelKey> keys;
  keys.reserve(n);
  for (const auto& label : graph.labels) keys.push_back(key_of(label));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  LabeledGraph out{Graph(n), {}};
  for (int i = 0; i < n; ++i) out.labels.push_back(graph.labels[order[i]]);
  for (auto [u, v] : graph.graph.edges()) out.graph.add_edge(position[u], position[v]);
  return out;
}

std::string write_edgelist(const LabeledGraph& graph) {
  std::ostringstream os;
  os << "# kgeo edgelist: " << graph.graph.vertex_count() << " vertices, "
     << graph.graph.edge_count() << " edges\n";
  for (int v = 0; v < graph.graph.vertex_count(); ++v) {
    if (graph.graph.degree(v) == 0) os << graph.labels[v] << "\n";
  }
  for (auto [u, v] : graph.graph.edges()) os << graph.labels[u] << ' ' << graph.labels[v] << "\n";
  return os.str();
}

LabeledGraph read_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> labels;
  std::map<std::string, bool> known;
  std::vector<std::pair<std::string, std::string>> edges;
  auto note = [&](const std::string& label) {
    if (known.emplace(label, true).second) labels.push_back(label);
  };
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 1 or 2 labels");
    }
    for (const auto& tok : tokens) note(tok);
    if (tokens.size() == 2) edges.emplace_back(tokens[0], tokens[1]);
  }
  return build_labeled(std::move(labels), edges);
}

std::string write_dot(const LabeledGraph& graph) {
  std::ostringstream os;
  os << "graph kgeo {\n";
  for (const auto& label : graph.labels) {
    const bool hub = key_of(label).group == 0;
    os << "  \"" << label << "\" [shape=" << (hub ? "box, style=filled, fillcolor=lightgray" : "circle")
       << "];\n";
  }
  for (auto [u, v] : graph.graph.edges()) {
    os << "  \"" << graph.labels[u] << "\" -- \"" << graph.labels[v] << "\";\n";
  }
  os << "}\n";
  return os.str();
}

json graph_to_json(const LabeledGraph& graph) {
  json doc;
  doc["format"] = "kgeo-graph";
  doc["version"] = kFormatVersion;
  doc["vertices"] = graph.labels;
  json edges = json::array();
  for (auto [u, v] : graph.graph.edges()) edges.push_back({graph.labels[u], graph.labels[v]});
  doc["edges"] = std::move(edges);
  return doc;
}

LabeledGraph graph_from_json(const json& doc) {
  try {
    if (doc.at("format") != "kgeo-graph") throw ParseError("not a kgeo graph document");
    if (doc.at("version").get<int>() != kFormatVersion) throw ParseError("unsupported graph version");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair of labels");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return build_labeled(doc.at("vertices").get<std::vector<std::string>>(), edges);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what());
  }
}

std::string write_graph(const LabeledGraph& graph, GraphFormat format) {
  switch (format) {
    case GraphFormat::dot:
      return write_dot(graph);
    case GraphFormat::edgelist:
      return write_edgelist(graph);
    case GraphFormat::structured:
      return graph_to_json(graph).dump(2) + "\n";
  }
  return {};
}

LabeledGraph read_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("graph file is not valid JSON: ") + e.what());
    }
    return graph_from_json(doc);
  }
  return read_edgelist(text);
}

json spectrum_summary_json(const GeodesicSpectrum& spectrum) {
  std::map<std::pair<int, std::string>, std::int64_t> histogram;
  for (const auto& rec : spectrum.records) ++histogram[{rec.distance, rec.count.str()}];
  json rows = json::array();
  for (const auto& [key, pairs] : histogram) {
    rows.push_back({{"distance", key.first}, {"count", key.second}, {"pairs", pairs}});
  }
  return {{"nonadjacent_pairs", spectrum.records.size()},
          {"max_count", spectrum.max_count.str()},
          {"max_distance", spectrum.max_distance},
          {"histogram", std::move(rows)}};
}

json report_to_json(const GeodeticReport& r) {
  json degrees = json::array();
  for (const auto& [degree, count] : r.degree_profile) degrees.push_back({degree, count});
  json claims{{"source", r.claims.source},
              {"max_K", r.claims.max_K},
              {"connectivity", r.claims.connectivity},
              {"degrees", r.claims.degrees}};
  if (r.claims.vertex_count) claims["vertex_count"] = *r.claims.vertex_count;
  if (r.claims.diameter) claims["diameter"] = *r.claims.diameter;

  json doc;
  doc["format"] = "kgeo-report";
  doc["version"] = kFormatVersion;
  if (r.params) doc["params"] = params_to_json(*r.params);
  doc["measured"] = {{"K", r.measured_K.str()},
                     {"nonadjacent_pairs", r.nonadjacent_pairs},
                     {"diameter", r.diameter},
                     {"connectivity", r.connectivity},
                     {"degree_profile", std::move(degrees)},
                     {"vertex_count", r.vertex_count},
                     {"edge_count", r.edge_count},
                     {"geodetic", r.geodetic()},
                     {"bigeodetic", r.bigeodetic()},
                     {"trigeodetic", r.trigeodetic()}};
  doc["predictions"] = {{"mu", r.mu},
                        {"predicted_diameter", r.predicted_diameter},
                        {"formula_vertex_count", r.formula_vertex_count},
                        {"formula_edge_count", r.formula_edge_count},
                        {"claims", std::move(claims)}};
  doc["flags"] = {{"counts_match_formula", r.counts_match_formula},
                  {"vertex_count_ok", r.vertex_count_ok},
                  {"k_within_mu", r.k_within_mu},
                  {"k_within_claim", r.k_within_claim},
                  {"diameter_ok", r.diameter_ok},
                  {"connectivity_ok", r.connectivity_ok},
                  {"degrees_ok", r.degrees_ok},
                  {"all_ok", r.all_ok()}};
  return doc;
}

json cover_to_json(const Cover& cover) {
  return {{"ground_size", cover.ground_size}, {"theta", cover.theta}, {"members", cover.members}};
}

}  // namespace kgeo

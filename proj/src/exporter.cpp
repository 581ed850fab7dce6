// Copyright 2026 The Cardex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exporter.hpp"

#include <optional>
#include <sstream>

#include "json.hpp"

#include "errors.hpp"

namespace cardex {

namespace {

using nlohmann::json;

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

const char* dot_color(NodeKind k) {
  switch (k) {
    case NodeKind::model: return "blue";
    case NodeKind::licence:
    case NodeKind::application: return "red";
    case NodeKind::unknown: return "gray";
  }
  return "gray";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::optional<NodeKind> kind_from_name(const std::string& name) {
  if (name == "model") return NodeKind::model;
  if (name == "licence") return NodeKind::licence;
  if (name == "application") return NodeKind::application;
  if (name == "unknown") return NodeKind::unknown;
  return std::nullopt;
}

}  // namespace

std::string export_dot(const KnowledgeGraph& g) {
  std::ostringstream os;
  os << "digraph {\n";
  for (const auto& [id, kind] : g.nodes())
    os << "  " << dot_quote(id) << " [color=" << dot_color(kind) << "];\n";
  for (const auto& [key, prov] : g.edges()) {
    (void)prov;
    const auto& [from, to, label] = key;
    os << "  " << dot_quote(from) << " -> " << dot_quote(to)
       << " [label=" << dot_quote(label) << ", color=green];\n";
  }
  os << "}";
  return os.str();
}

std::string export_graphml(const KnowledgeGraph& g) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
     << "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n"
     << "  <key id=\"label\" for=\"edge\" attr.name=\"label\" attr.type=\"string\"/>\n"
     << "  <graph id=\"G\" edgedefault=\"directed\">\n";
  for (const auto& [id, kind] : g.nodes())
    os << "    <node id=\"" << xml_escape(id) << "\"><data key=\"kind\">"
       << node_kind_name(kind) << "</data></node>\n";
  for (const auto& [key, prov] : g.edges()) {
    (void)prov;
    const auto& [from, to, label] = key;
    os << "    <edge source=\"" << xml_escape(from) << "\" target=\""
       << xml_escape(to) << "\"><data key=\"label\">" << xml_escape(label)
       << "</data></edge>\n";
  }
  os << "  </graph>\n</graphml>\n";
  return os.str();
}

std::string export_json(const KnowledgeGraph& g) {
  json nodes = json::array();
  for (const auto& [id, kind] : g.nodes())
    nodes.push_back({{"id", id}, {"kind", node_kind_name(kind)}});
  json edges = json::array();
  for (const auto& [key, provs] : g.edges()) {
    const auto& [from, to, label] = key;
    json plist = json::array();
    for (const Provenance& p : provs)
      plist.push_back({{"doc_id", p.doc_id},
                       {"sentence_index", p.sentence_index},
                       {"sentence_text", p.sentence_text}});
    edges.push_back(
        {{"from", from}, {"to", to}, {"label", label}, {"provenance", plist}});
  }
  json j;
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

KnowledgeGraph import_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(0, e.what());
  }
  KnowledgeGraph g;
  try {
    if (!j.contains("nodes") || !j.contains("edges"))
      throw FormatError(0, "graph JSON needs \"nodes\" and \"edges\"");
    for (const json& n : j.at("nodes")) {
      const std::string id = n.at("id").get<std::string>();
      const std::string kind_name = n.at("kind").get<std::string>();
      const auto kind = kind_from_name(kind_name);
      if (!kind) throw FormatError(0, "unknown node kind \"" + kind_name + "\"");
      if (g.has_node(id))
        throw InvariantViolation("duplicate node \"" + id + "\"");
      g.add_node(id, *kind);
    }
    for (const json& e : j.at("edges")) {
      const std::string from = e.at("from").get<std::string>();
      const std::string to = e.at("to").get<std::string>();
      const std::string label = e.at("label").get<std::string>();
      if (g.edges().count(EdgeKey{from, to, label}))
        throw InvariantViolation("duplicate edge (" + from + ", " + to + ", " +
                                 label + ")");
      for (const json& p : e.at("provenance")) {
        Provenance prov;
        prov.doc_id = p.at("doc_id").get<std::string>();
        prov.sentence_index = p.at("sentence_index").get<int>();
        prov.sentence_text = p.at("sentence_text").get<std::string>();
        g.add_edge(from, to, label, prov);
      }
      if (!g.edges().count(EdgeKey{from, to, label}))
        throw InvariantViolation("edge (" + from + ", " + to +
                                 ") has no provenance entries");
    }
  } catch (const json::exception& e) {
    throw FormatError(0, e.what());
  }
  return g;
}

}  // namespace cardex

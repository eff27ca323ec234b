#pragma once

// Crushtacean file codec.  The on-disk form is a JSON document:
//
//   { "format": "crushtacean/1",
//     "vertices": n,
//     "edges": [[u,v], ...],
//     "rotation": [[e,e,e], ...],
//     "painted": [edge ids],
//     "twisted": [edge ids] }
//
// rotation[v] lists the three incident edge occurrences in counterclockwise
// cyclic order.  parse(serialize(g)) is structurally equal to g and serialize
// is deterministic.

#include <string>

#include <json.hpp>

#include "falbelt/core.hpp"

namespace falbelt {

struct CodecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw CodecError(std::string("missing field \"") + name + "\"");
  return *it;
}

inline int require_int(const nlohmann::json& value, const std::string& where) {
  if (!value.is_number_integer()) throw CodecError(where + " must be an integer");
  return value.get<int>();
}

}  // namespace detail

inline PaintedCrushtacean crushtacean_from_json(const nlohmann::json& doc) {
  using detail::require_field;
  using detail::require_int;
  if (!doc.is_object()) throw CodecError("document must be a JSON object");

  const auto& format = require_field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != "crushtacean/1")
    throw CodecError("field \"format\" must be the string \"crushtacean/1\"");

  PaintedCrushtacean g;
  g.vertex_count = require_int(require_field(doc, "vertices"), "field \"vertices\"");
  if (g.vertex_count < 0) throw CodecError("field \"vertices\" must be non-negative");

  const auto& edges = require_field(doc, "edges");
  if (!edges.is_array()) throw CodecError("field \"edges\" must be an array of [u,v] pairs");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& pair = edges[i];
    if (!pair.is_array() || pair.size() != 2)
      throw CodecError("edges[" + std::to_string(i) + "] must be a pair [u,v]");
    int u = require_int(pair[0], "edges[" + std::to_string(i) + "][0]");
    int v = require_int(pair[1], "edges[" + std::to_string(i) + "][1]");
    g.edges.emplace_back(u, v);
  }

  const auto& rotation = require_field(doc, "rotation");
  if (!rotation.is_array()) throw CodecError("field \"rotation\" must be an array");
  if (static_cast<int>(rotation.size()) != g.vertex_count)
    throw CodecError("field \"rotation\" must have one entry per vertex (got " +
                     std::to_string(rotation.size()) + ", expected " +
                     std::to_string(g.vertex_count) + ")");
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    const auto& rot = rotation[v];
    if (!rot.is_array())
      throw CodecError("rotation[" + std::to_string(v) + "] must be an array of edge ids");
    std::vector<int> order;
    for (std::size_t k = 0; k < rot.size(); ++k)
      order.push_back(require_int(rot[k], "rotation[" + std::to_string(v) + "][" + std::to_string(k) + "]"));
    g.rotation.push_back(std::move(order));
  }

  const auto& painted = require_field(doc, "painted");
  if (!painted.is_array()) throw CodecError("field \"painted\" must be an array of edge ids");
  for (std::size_t i = 0; i < painted.size(); ++i)
    g.painted.insert(require_int(painted[i], "painted[" + std::to_string(i) + "]"));

  if (auto it = doc.find("twisted"); it != doc.end()) {
    if (!it->is_array()) throw CodecError("field \"twisted\" must be an array of edge ids");
    for (std::size_t i = 0; i < it->size(); ++i)
      g.twisted.insert(require_int((*it)[i], "twisted[" + std::to_string(i) + "]"));
  }
  for (int e : g.twisted)
    if (!g.painted.count(e)) throw CodecError("twisted not subset of painted");
  return g;
}

inline PaintedCrushtacean parse_crushtacean(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw CodecError(std::string("not valid JSON: ") + err.what());
  }
  return crushtacean_from_json(doc);
}

inline nlohmann::ordered_json crushtacean_to_json(const PaintedCrushtacean& g) {
  nlohmann::ordered_json doc;
  doc["format"] = "crushtacean/1";
  doc["vertices"] = g.vertex_count;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  auto rotation = nlohmann::ordered_json::array();
  for (const auto& rot : g.rotation) rotation.push_back(rot);
  doc["rotation"] = std::move(rotation);
  doc["painted"] = std::vector<int>(g.painted.begin(), g.painted.end());
  doc["twisted"] = std::vector<int>(g.twisted.begin(), g.twisted.end());
  return doc;
}

inline std::string serialize_crushtacean(const PaintedCrushtacean& g) {
  return crushtacean_to_json(g).dump(2) + "\n";
}

inline bool structurally_equal(const PaintedCrushtacean& a, const PaintedCrushtacean& b) {
  return a.vertex_count == b.vertex_count && a.edges == b.edges && a.rotation == b.rotation &&
         a.painted == b.painted && a.twisted == b.twisted;
}

}  // namespace falbelt

#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stpart/constructions.hpp"
#include "stpart/st_partition.hpp"

namespace stpart::model {

using json = nlohmann::ordered_json;

inline json part_to_json(const STPart& part) {
  if (part.is_star()) {
    const Star& s = part.star();
    return json{{"type", "star"}, {"center", s.center}, {"leaves", s.leaves}};
  }
  const Triangle& t = part.triangle();
  return json{{"type", "triangle"},
              {"vertices", std::vector<int>{t.vertices.begin(), t.vertices.end()}}};
}

inline STPart part_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw std::invalid_argument("part_from_json: expected an object with a \"type\" string");
  }
  std::string type = j.at("type").get<std::string>();
  if (type == "star") {
    if (!j.contains("center") || !j.contains("leaves")) {
      throw std::invalid_argument("part_from_json: star needs \"center\" and \"leaves\"");
    }
    return STPart(Star(j.at("center").get<int>(), j.at("leaves").get<std::vector<int>>()));
  }
  if (type == "triangle") {
    if (!j.contains("vertices") || !j.at("vertices").is_array() || j.at("vertices").size() != 3) {
      throw std::invalid_argument("part_from_json: triangle needs a 3-element \"vertices\" array");
    }
    auto v = j.at("vertices").get<std::vector<int>>();
    return STPart(Triangle(v[0], v[1], v[2]));
  }
  throw std::invalid_argument("part_from_json: unknown part type '" + type + "'");
}

inline json partition_to_json(const STPartition& p) {
  json parts = json::array();
  for (const STPart& part : p.parts) parts.push_back(part_to_json(part));
  return json{{"n", p.host.vertex_count()}, {"parts", std::move(parts)}};
}

// The host comes back as (n, union of the parts' edges), which recovers the
// original host exactly when the serialized partition was valid.
inline STPartition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("parts") || !j.at("parts").is_array()) {
    throw std::invalid_argument("partition_from_json: expected {\"n\":...,\"parts\":[...]}");
  }
  int n = j.at("n").get<int>();
  std::vector<STPart> parts;
  for (const json& pj : j.at("parts")) parts.push_back(part_from_json(pj));
  std::set<Edge> edges;
  for (const STPart& part : parts) {
    for (Edge e : part.edges()) edges.insert(e);
  }
  SimpleGraph host(n, std::vector<Edge>(edges.begin(), edges.end()));
  return STPartition{std::move(host), std::move(parts)};
}

inline json coloring_to_json(const Coloring& c) {
  json colors = json::object();
  for (const auto& [v, col] : c.assignment()) colors[v.key()] = col;
  return json{{"n", c.n()}, {"k", c.k()}, {"colors", std::move(colors)}};
}

inline Coloring coloring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("colors") ||
      !j.at("colors").is_object()) {
    throw std::invalid_argument("coloring_from_json: expected {\"n\":...,\"k\":...,\"colors\":{...}}");
  }
  core::KneserDescriptor d(j.at("n").get<int>(), j.at("k").get<int>());
  std::map<core::KSubset, int> assignment;
  for (const auto& [key, val] : j.at("colors").items()) {
    assignment[core::parse_ksubset_key(key)] = val.get<int>();
  }
  return Coloring(d, std::move(assignment));
}

}  // namespace stpart::model

namespace stpart::constructions {

inline nlohmann::ordered_json witness_to_json(const MultipartiteWitness& w) {
  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  for (const auto& part : w.parts) {
    nlohmann::ordered_json keys = nlohmann::ordered_json::array();
    for (const KSubset& v : part) keys.push_back(v.key());
    parts.push_back(std::move(keys));
  }
  return nlohmann::ordered_json{{"parts", std::move(parts)}};
}

inline MultipartiteWitness witness_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("parts") || !j.at("parts").is_array()) {
    throw std::invalid_argument("witness_from_json: expected {\"parts\":[[...],...]}");
  }
  MultipartiteWitness w;
  for (const nlohmann::ordered_json& pj : j.at("parts")) {
    if (!pj.is_array()) throw std::invalid_argument("witness_from_json: parts must be arrays");
    std::vector<KSubset> part;
    for (const nlohmann::ordered_json& vj : pj) {
      if (!vj.is_string()) throw std::invalid_argument("witness_from_json: vertices are key strings");
      part.push_back(core::parse_ksubset_key(vj.get<std::string>()));
    }
    w.parts.push_back(std::move(part));
  }
  return w;
}

}  // namespace stpart::constructions

#pragma once

// JSON reading of graph files and JSON rendering of every result type. All
// rationals are written as exact "p" / "p/q" strings.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>

#include "json.hpp"
#include "tropjac/error.hpp"
#include "tropjac/graph.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/jacobian.hpp"
#include "tropjac/rational.hpp"
#include "tropjac/tautological.hpp"
#include "tropjac/theta.hpp"

namespace tropjac {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline const Json& require_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorCode::InvalidInput, where + ": missing field '" + key + "'");
  return obj.at(key);
}

inline std::string require_string(const Json& value, const std::string& where) {
  if (!value.is_string()) throw Error(ErrorCode::InvalidInput, where + ": expected a string");
  return value.get<std::string>();
}

inline Rational parse_length(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (!value.is_string())
    throw Error(ErrorCode::InvalidInput, where + ": expected a rational string \"p\" or \"p/q\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidInput, where + ": " + e.what());
  }
}

}  // namespace detail

/// Parses the graph format {"vertices":[...],"edges":[{"id","src","dst","length"}],"basepoint"}.
/// The result is not yet validated or pruned.
inline MetricGraph graph_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidInput, "graph: expected a JSON object");
  MetricGraph g;
  const Json& vertices = detail::require_field(doc, "vertices", "graph");
  if (!vertices.is_array()) throw Error(ErrorCode::InvalidInput, "vertices: expected an array");
  std::unordered_set<std::string> seen_vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    auto id = detail::require_string(vertices[i], where);
    if (!seen_vertices.insert(id).second)
      throw Error(ErrorCode::InvalidInput, where + ": duplicate vertex id '" + id + "'");
    g.vertices.push_back(std::move(id));
  }
  const Json& edges = detail::require_field(doc, "edges", "graph");
  if (!edges.is_array()) throw Error(ErrorCode::InvalidInput, "edges: expected an array");
  std::unordered_set<std::string> seen_edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_object()) throw Error(ErrorCode::InvalidInput, where + ": expected an object");
    Edge edge;
    edge.id = detail::require_string(detail::require_field(e, "id", where), where + ".id");
    if (!seen_edges.insert(edge.id).second)
      throw Error(ErrorCode::InvalidInput, where + ".id: duplicate edge id '" + edge.id + "'");
    for (auto [key, slot] : {std::pair{"src", &edge.src}, std::pair{"dst", &edge.dst}}) {
      const auto name = detail::require_string(detail::require_field(e, key, where), where + "." + key);
      const auto v = g.find_vertex(name);
      if (!v) throw Error(ErrorCode::InvalidInput, where + "." + key + ": unknown vertex '" + name + "'");
      *slot = *v;
    }
    edge.length = detail::parse_length(detail::require_field(e, "length", where), where + ".length");
    g.edges.push_back(std::move(edge));
  }
  if (doc.contains("basepoint") && !doc.at("basepoint").is_null()) {
    const auto name = detail::require_string(doc.at("basepoint"), "basepoint");
    const auto v = g.find_vertex(name);
    if (!v) throw Error(ErrorCode::InvalidInput, "basepoint: unknown vertex '" + name + "'");
    g.basepoint = *v;
  }
  return g;
}

inline MetricGraph graph_from_string(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

inline MetricGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return graph_from_string(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

inline Json to_json(const MetricGraph& g) {
  Json doc;
  doc["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"id", e.id},
                     {"src", g.vertices[e.src]},
                     {"dst", g.vertices[e.dst]},
                     {"length", to_string(e.length)}});
  doc["edges"] = std::move(edges);
  doc["basepoint"] = g.vertices.empty() ? Json() : Json(g.vertices[g.basepoint]);
  return doc;
}

inline Json to_json(const RatVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

inline Json to_json(const IntVector& v) {
  Json arr = Json::array();
  for (auto x : v) arr.push_back(x);
  return arr;
}

inline Json to_json(const RatMatrix& m) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(to_json(m.row(i)));
  return arr;
}

inline Json to_json(const TorusPoint& p) { return to_json(p.coords); }

inline Json to_json(const MetricGraph& g, const CircuitBasis& basis) {
  Json doc;
  Json tree = Json::array();
  for (std::size_t e : basis.tree_edges) tree.push_back(g.edges[e].id);
  doc["tree_edges"] = std::move(tree);
  Json circuits = Json::array();
  for (std::size_t k = 0; k < basis.genus(); ++k) {
    Json entries = Json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (basis.circuits[k][e] != 0) entries[g.edges[e].id] = basis.circuits[k][e];
    circuits.push_back({{"cotree_edge", g.edges[basis.cotree_edges[k]].id}, {"entries", std::move(entries)}});
  }
  doc["circuits"] = std::move(circuits);
  return doc;
}

inline Json to_json(const MetricGraph& g, const WdCell& cell) {
  Json edges = Json::array();
  for (std::size_t e : cell.edges) edges.push_back(g.edges[e].id);
  Json gens = Json::array();
  for (const auto& v : cell.generators) gens.push_back(to_json(v));
  return {{"edges", std::move(edges)}, {"base", to_json(cell.base)}, {"generators", std::move(gens)},
          {"weight", cell.weight}};
}

inline Json to_json(const BigradedClass& c) {
  Json terms = Json::array();
  for (const auto& [m, coeff] : c.terms())
    terms.push_back({{"J", indices_of(m.circuits)}, {"I", indices_of(m.deltas)}, {"coeff", coeff.str()}});
  return terms;
}

inline Json to_json(const VerificationReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records)
    records.push_back({{"d", rec.d},
                       {"factor", rec.factor.str()},
                       {"class_wd", to_json(rec.class_wd)},
                       {"class_theta_power", to_json(rec.class_theta_power)},
                       {"equal", rec.equal},
                       {"pontryagin_equal", rec.pontryagin_equal}});
  Json degrees = Json::array();
  for (const auto& c : r.degrees)
    degrees.push_back({{"name", c.name},
                       {"d", c.d},
                       {"expected", c.expected.str()},
                       {"computed", c.computed.str()},
                       {"passed", c.passed()}});
  return {{"genus", r.genus}, {"records", std::move(records)}, {"degrees", std::move(degrees)},
          {"all_passed", r.all_passed()}};
}

inline Json to_json(const ThetaValue& t) {
  Json mins = Json::array();
  for (const auto& n : t.minimizers) mins.push_back(to_json(n));
  return {{"value", to_string(t.value)},
          {"minimizers", std::move(mins)},
          {"center", to_json(t.center)},
          {"certified_radius", t.certified_radius}};
}

/// Reads a class back from its JSON list form.
inline BigradedClass class_from_json(const Json& terms, Side side, std::size_t g) {
  if (!terms.is_array()) throw Error(ErrorCode::InvalidInput, "class: expected an array of terms");
  BigradedClass c(side, g);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "terms[" + std::to_string(t) + "]";
    const auto& term = terms[t];
    const auto J = detail::require_field(term, "J", where).get<std::vector<std::size_t>>();
    const auto I = detail::require_field(term, "I", where).get<std::vector<std::size_t>>();
    const auto coeff = detail::require_string(detail::require_field(term, "coeff", where), where + ".coeff");
    const Rational value = parse_rational(coeff);
    if (!is_integer(value)) throw Error(ErrorCode::InvalidInput, where + ".coeff: not an integer");
    // indices may come in any order: reorder with the Koszul sign, drop repeats
    auto ordered = [](const std::vector<std::size_t>& idx) -> std::optional<SignedMask> {
      SignedMask acc{1, 0};
      for (std::size_t k : idx) {
        const auto next = wedge_monomials(acc.mask, mask_of({k}));
        if (!next) return std::nullopt;
        acc = {acc.sign * next->sign, next->mask};
      }
      return acc;
    };
    const auto j = ordered(J);
    const auto i = ordered(I);
    if (!j || !i) continue;
    c.add(Monomial{j->mask, i->mask}, numerator(value) * (j->sign * i->sign));
  }
  return c;
}

}  // namespace tropjac

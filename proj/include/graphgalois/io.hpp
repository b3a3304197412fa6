#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "automorphism.hpp"
#include "divisor.hpp"
#include "error.hpp"
#include "galois.hpp"
#include "graph.hpp"
#include "quotient.hpp"

namespace graphgalois {

using json = nlohmann::ordered_json;

namespace detail {
[[noreturn]] inline void schema_error(const std::string& what) { throw graph_error(errc::parse_error, what); }

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string as_label(const json& j) {
  if (!j.is_string()) schema_error("vertex labels must be strings, got " + j.dump());
  return j.get<std::string>();
}
}  // namespace detail

// Graph: {"vertices": [...], "edges": [[a, b], ...]}, edges in lexicographic order.

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.label_edges()) edges.push_back({a, b});
  return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
  const json& vs = detail::field(j, "vertices");
  const json& es = detail::field(j, "edges");
  if (!vs.is_array() || !es.is_array()) detail::schema_error("'vertices' and 'edges' must be arrays");
  std::vector<std::string> labels;
  for (const auto& v : vs) labels.push_back(detail::as_label(v));
  std::vector<Graph::LabelPair> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) detail::schema_error("each edge must be a pair of labels, got " + e.dump());
    edges.emplace_back(detail::as_label(e[0]), detail::as_label(e[1]));
  }
  return Graph::build(std::move(labels), edges);
}

// Divisor: {"P1": 3, "P2": -1}; zero coefficients omitted.

template <class Tag>
json to_json(const VertexMap<Tag>& d) {
  json out = json::object();
  for (VertexId v = 0; v < d.size(); ++v)
    if (d[v] != 0) out[d.graph().label(v)] = d[v];
  return out;
}

inline Divisor divisor_from_json(const Graph& g, const json& j) {
  if (!j.is_object()) detail::schema_error("a divisor must be an object of label -> integer, got " + j.dump());
  Divisor d(g);
  for (const auto& [label, value] : j.items()) {
    if (!value.is_number_integer()) detail::schema_error("coefficient of '" + label + "' must be an integer");
    d[g.index_of(label)] = value.get<std::int64_t>();
  }
  return d;
}

// Automorphism: {"P1": "P1", "P2": "P3", ...}; subgroup: list of those.

inline json to_json(const Automorphism& a) {
  json out = json::object();
  const Graph& g = a.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[g.label(v)] = g.label(a(v));
  return out;
}

/// Missing vertices map to themselves.
inline Automorphism automorphism_from_json(const Graph& g, const json& j) {
  if (!j.is_object()) detail::schema_error("an automorphism must be an object of label -> label, got " + j.dump());
  std::vector<VertexId> image(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) image[v] = v;
  for (const auto& [from, to] : j.items()) image[g.index_of(from)] = g.index_of(detail::as_label(to));
  return Automorphism::from_images(g, std::move(image));
}

inline json to_json(const Subgroup& h) {
  json out = json::array();
  for (const auto& a : h) out.push_back(to_json(a));
  return out;
}

/// The listed elements must already form a group.
inline Subgroup subgroup_from_json(const Graph& g, const json& j) {
  if (!j.is_array()) detail::schema_error("a subgroup must be a list of automorphisms");
  std::vector<Automorphism> elems;
  for (const auto& e : j) elems.push_back(automorphism_from_json(g, e));
  return Subgroup::from_elements(g, std::move(elems));
}

/// Closure of a list of generators.
inline Subgroup subgroup_from_generators_json(const Graph& g, const json& j) {
  if (!j.is_array()) detail::schema_error("generators must be a list of automorphisms");
  std::vector<Automorphism> gens;
  for (const auto& e : j) gens.push_back(automorphism_from_json(g, e));
  return *Subgroup::generated_by(g, gens);
}

inline json to_json(const QuotientGraph& q) {
  json edges = json::array();
  for (std::size_t i = 0; i < q.quotient.edges.size(); ++i) {
    const auto [a, b] = q.quotient.edges[i];
    json members = json::array();
    const Graph& g = q.projection.source;
    for (std::size_t e : q.edge_classes[i]) members.push_back({g.label(g.edges()[e].u), g.label(g.edges()[e].v)});
    edges.push_back({{"endpoints", {q.quotient.vertices[a], q.quotient.vertices[b]}}, {"members", std::move(members)}});
  }
  return {{"vertices", q.quotient.vertices}, {"edges", std::move(edges)}};
}

// Certificates and reports.

inline json to_json(const FailureReason& r) {
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  return {{"tag", std::string(to_string(r.tag))},
          {"p", opt(r.p)},
          {"q", opt(r.q)},
          {"value", opt(r.value)},
          {"subgroups_examined", r.subgroups_examined}};
}

inline FailureReason failure_reason_from_json(const json& j) {
  FailureReason r;
  const auto tag = detail::field(j, "tag").get<std::string>();
  bool known = false;
  for (auto t : {FailureTag::none, FailureTag::rank_not_two, FailureTag::cond1_fail, FailureTag::cond2_fail,
                 FailureTag::no_qualifying_subgroup})
    if (to_string(t) == tag) r.tag = t, known = true;
  if (!known) detail::schema_error("unknown failure tag '" + tag + "'");
  if (!detail::field(j, "p").is_null()) r.p = j.at("p").get<std::string>();
  if (!detail::field(j, "q").is_null()) r.q = j.at("q").get<std::string>();
  if (!detail::field(j, "value").is_null()) r.value = j.at("value").get<long>();
  r.subgroups_examined = detail::field(j, "subgroups_examined").get<std::size_t>();
  return r;
}

inline json to_json(const GaloisCertificate& c) {
  auto opt = [](const auto& o) { return o ? to_json(*o) : json(nullptr); };
  return {{"vertex", c.vertex},
          {"verdict", c.verdict},
          {"subgroup", opt(c.subgroup)},
          {"E1", opt(c.e1)},
          {"E2", opt(c.e2)},
          {"quotient_vertex_count", c.quotient_vertex_count},
          {"degenerate", c.degenerate},
          {"reason", to_json(c.reason)}};
}

inline GaloisCertificate certificate_from_json(const Graph& g, const json& j) {
  GaloisCertificate c;
  c.vertex = detail::as_label(detail::field(j, "vertex"));
  c.verdict = detail::field(j, "verdict").get<bool>();
  if (!detail::field(j, "subgroup").is_null()) c.subgroup = subgroup_from_json(g, j.at("subgroup"));
  if (!detail::field(j, "E1").is_null()) c.e1 = divisor_from_json(g, j.at("E1"));
  if (!detail::field(j, "E2").is_null()) c.e2 = divisor_from_json(g, j.at("E2"));
  c.quotient_vertex_count = detail::field(j, "quotient_vertex_count").get<std::size_t>();
  c.degenerate = detail::field(j, "degenerate").get<bool>();
  c.reason = failure_reason_from_json(detail::field(j, "reason"));
  return c;
}

inline json to_json(const ClassificationReport& r) {
  json certs = json::array();
  json galois = json::array();
  for (const auto& c : r.certificates) {
    certs.push_back(to_json(c));
    if (c.verdict) galois.push_back(c.vertex);
  }
  return {{"graph_id", r.graph_id},
          {"graph", to_json(r.divisor.graph())},
          {"divisor", to_json(r.divisor)},
          {"rank", r.rank},
          {"divisor_is_vertex_sum", r.divisor_is_vertex_sum},
          {"certificates", std::move(certs)},
          {"galois_points", std::move(galois)},
          {"galois_count", r.galois_count},
          {"corollary_consistent", r.corollary_consistent}};
}

inline json to_json(const TheoremCheck& t) {
  return {{"is_complete", t.is_complete},
          {"has_two_galois", t.has_two_galois},
          {"equivalence_holds", t.equivalence_holds},
          {"all_galois_when_complete", t.all_galois_when_complete},
          {"galois_count", t.report.galois_count},
          {"rank", t.report.rank}};
}

inline json to_json(const RiemannRochResult& r) {
  return {{"holds", r.holds},
          {"rank_d", r.rank_d},
          {"rank_k_minus_d", r.rank_k_minus_d},
          {"lhs", r.lhs},
          {"rhs", r.rhs}};
}

}  // namespace graphgalois

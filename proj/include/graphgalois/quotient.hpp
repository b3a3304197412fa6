#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace graphgalois {

/// Loop-free graph that may carry parallel edges. Target of morphisms, so
/// that quotients keep distinct edge orbits between the same vertex orbits.
struct Multigraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  static Multigraph of(const Graph& g) {
    Multigraph m{g.labels(), {}};
    for (const Edge& e : g.edges()) m.edges.emplace_back(e.u, e.v);
    return m;
  }
};

/// Image of an edge under a morphism: an edge of the target, or the vertex
/// both endpoints collapse onto.
struct EdgeImage {
  enum class Kind { edge, vertex };
  Kind kind;
  std::size_t index;

  friend bool operator==(const EdgeImage&, const EdgeImage&) = default;
};

struct GraphMorphism {
  Graph source;
  Multigraph target;
  std::vector<std::size_t> vertex_map;  // by source vertex
  std::vector<EdgeImage> edge_map;      // by position in source.edges()
};

/// Throws InvalidMorphism unless every edge goes to an edge joining the
/// endpoint images, or to the common image of both endpoints.
inline void validate_morphism(const GraphMorphism& phi) {
  const Graph& g = phi.source;
  if (phi.vertex_map.size() != g.vertex_count() || phi.edge_map.size() != g.edge_count())
    throw graph_error(errc::invalid_morphism, "vertex or edge map is not total on the source");
  for (std::size_t t : phi.vertex_map)
    if (t >= phi.target.vertices.size()) throw graph_error(errc::invalid_morphism, "vertex image out of range");
  for (const auto& [a, b] : phi.target.edges)
    if (a == b || a >= phi.target.vertices.size() || b >= phi.target.vertices.size())
      throw graph_error(errc::invalid_morphism, "target edge list is malformed");
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const std::size_t pu = phi.vertex_map[e.u], pv = phi.vertex_map[e.v];
    const EdgeImage& img = phi.edge_map[i];
    const std::string name = "edge " + g.label(e.u) + g.label(e.v);
    if (img.kind == EdgeImage::Kind::vertex) {
      if (img.index != pu || img.index != pv)
        throw graph_error(errc::invalid_morphism, name + " collapses to a vertex that is not the image of both endpoints");
    } else {
      if (img.index >= phi.target.edges.size()) throw graph_error(errc::invalid_morphism, name + " maps outside the target");
      auto [a, b] = phi.target.edges[img.index];
      if (!((a == pu && b == pv) || (a == pv && b == pu)))
        throw graph_error(errc::invalid_morphism, name + " maps to an edge not joining its endpoint images");
    }
  }
}

/// For every P with Q = φ(P), the number of edges at P mapped onto e' must
/// not depend on which edge e' at Q is chosen.
inline bool is_harmonic_morphism(const GraphMorphism& phi) {
  validate_morphism(phi);
  const Graph& g = phi.source;
  const std::size_t target_edges = phi.target.edges.size();
  std::vector<std::size_t> count(target_edges);
  for (VertexId p = 0; p < g.vertex_count(); ++p) {
    const std::size_t q = phi.vertex_map[p];
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& img = phi.edge_map[i];
      if (g.edges()[i].has(p) && img.kind == EdgeImage::Kind::edge) ++count[img.index];
    }
    std::optional<std::size_t> common;
    for (std::size_t j = 0; j < target_edges; ++j) {
      auto [a, b] = phi.target.edges[j];
      if (a != q && b != q) continue;
      if (common && *common != count[j]) return false;
      common = count[j];
    }
  }
  return true;
}

struct QuotientGraph {
  Multigraph quotient;
  GraphMorphism projection;
  std::vector<std::vector<VertexId>> vertex_orbits;
  std::vector<std::vector<std::size_t>> edge_classes;  // source edge positions per quotient edge
};

/// G/H: vertex orbits joined by edge orbits; an edge orbit whose endpoints
/// share a vertex orbit is dropped and its edges map onto that vertex.
inline QuotientGraph quotient_graph(const Graph& g, const Subgroup& h) {
  if (!(g == h.graph())) throw graph_error(errc::graph_mismatch, "subgroup acts on a different graph");
  auto orbits = vertex_orbits(h);
  Multigraph quotient;
  std::vector<std::size_t> orbit_of(g.vertex_count());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    std::string name = "{";
    for (VertexId v : orbits[i]) {
      orbit_of[v] = i;
      if (name.size() > 1) name += ",";
      name += g.label(v);
    }
    quotient.vertices.push_back(name + "}");
  }

  std::vector<EdgeImage> edge_map(g.edge_count(), EdgeImage{EdgeImage::Kind::vertex, 0});
  std::vector<std::vector<std::size_t>> edge_classes;
  std::vector<bool> placed(g.edge_count(), false);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (placed[i]) continue;
    const Edge& e = g.edges()[i];
    const std::size_t a = orbit_of[e.u], b = orbit_of[e.v];
    std::vector<std::size_t> members;
    for (const auto& s : h) {
      const Edge moved = s(e);
      const std::size_t j = *g.edge_index(moved.u, moved.v);
      if (!placed[j]) placed[j] = true, members.push_back(j);
    }
    std::sort(members.begin(), members.end());
    if (a == b) {
      for (std::size_t j : members) edge_map[j] = {EdgeImage::Kind::vertex, a};
      continue;
    }
    const std::size_t cls = quotient.edges.size();
    quotient.edges.emplace_back(std::min(a, b), std::max(a, b));
    for (std::size_t j : members) edge_map[j] = {EdgeImage::Kind::edge, cls};
    edge_classes.push_back(std::move(members));
  }
  GraphMorphism projection{g, quotient, std::move(orbit_of), std::move(edge_map)};
  return {std::move(quotient), std::move(projection), std::move(orbits), std::move(edge_classes)};
}

enum class HarmonicMode { criterion, definition };

/// Whether H acts harmonically on G.
///
/// criterion: each vertex stabiliser acts freely on the edges at that vertex,
/// i.e. no non-identity σ fixing P also fixes a neighbour of P.
/// definition: the quotient map G → G/Δ is harmonic for every subgroup Δ ≤ H.
inline bool acts_harmonically(const Graph& g, const Subgroup& h, HarmonicMode mode = HarmonicMode::criterion) {
  if (!(g == h.graph())) throw graph_error(errc::graph_mismatch, "subgroup acts on a different graph");
  if (mode == HarmonicMode::definition) {
    for (const Subgroup& delta : all_subgroups(h))
      if (!is_harmonic_morphism(quotient_graph(g, delta).projection)) return false;
    return true;
  }
  for (const auto& s : h) {
    if (s.is_identity()) continue;
    for (const Edge& e : g.edges())
      if (s(e.u) == e.u && s(e.v) == e.v) return false;
  }
  return true;
}

}  // namespace graphgalois

#pragma once

#include <random>
#include <string>
#include <vector>

#include <graphgalois/graph.hpp>
#include <graphgalois/vertex_map.hpp>

namespace testing_support {

using namespace graphgalois;

/// Random connected graph on n vertices: a random spanning tree plus each
/// remaining pair with probability `density`.
inline Graph random_connected_graph(std::mt19937& rng, std::size_t n, double density = 0.4) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("P" + std::to_string(i));
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<Graph::LabelPair> edges;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    used[parent][v] = true;
    edges.emplace_back(labels[parent], labels[v]);
  }
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!used[i][j] && coin(rng)) edges.emplace_back(labels[i], labels[j]);
  return Graph::build(std::move(labels), edges);
}

/// Random divisor with exactly the given degree and coefficients near zero.
inline Divisor random_divisor(std::mt19937& rng, const Graph& g, std::int64_t degree, std::int64_t spread = 2) {
  Divisor d(g);
  std::uniform_int_distribution<std::int64_t> coeff(-spread, spread);
  for (VertexId v = 0; v < g.vertex_count(); ++v) d[v] = coeff(rng);
  d[std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng)] += degree - d.degree();
  return d;
}

inline VertexFunction random_function(std::mt19937& rng, const Graph& g, std::int64_t spread = 2) {
  VertexFunction f(g);
  std::uniform_int_distribution<std::int64_t> value(-spread, spread);
  for (VertexId v = 0; v < g.vertex_count(); ++v) f[v] = value(rng);
  return f;
}

inline std::vector<std::int64_t> coeffs(const Divisor& d) { return {d.values().begin(), d.values().end()}; }

}  // namespace testing_support

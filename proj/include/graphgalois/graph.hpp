#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace graphgalois {

using VertexId = std::size_t;

/// Unordered edge stored with `u < v` in vertex order.
struct Edge {
  VertexId u;
  VertexId v;

  bool has(VertexId w) const noexcept { return u == w || v == w; }
  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple connected undirected graph with string labels.
///
/// Immutable once built; copies share storage. Vertex order is the
/// construction order and is used wherever a canonical choice is needed.
class Graph {
 public:
  using LabelPair = std::pair<std::string, std::string>;

  static Graph build(std::vector<std::string> vertices, const std::vector<LabelPair>& edges) {
    if (vertices.empty()) throw graph_error(errc::empty_graph, "a graph needs at least one vertex");
    auto data = std::make_shared<Data>();
    data->labels = std::move(vertices);
    const std::size_t n = data->labels.size();
    for (VertexId i = 0; i < n; ++i) {
      if (!data->index.emplace(data->labels[i], i).second)
        throw graph_error(errc::duplicate_vertex, "vertex '" + data->labels[i] + "' listed twice");
    }
    data->adjacency.assign(n * n, false);
    data->neighbors.resize(n);
    for (const auto& [a, b] : edges) {
      auto ia = data->index.find(a);
      auto ib = data->index.find(b);
      if (ia == data->index.end())
        throw graph_error(errc::unknown_endpoint, "edge {" + a + "," + b + "} endpoint '" + a + "' is not a vertex");
      if (ib == data->index.end())
        throw graph_error(errc::unknown_endpoint, "edge {" + a + "," + b + "} endpoint '" + b + "' is not a vertex");
      if (ia->second == ib->second) throw graph_error(errc::loop_edge, "loop at '" + a + "'");
      VertexId u = std::min(ia->second, ib->second);
      VertexId v = std::max(ia->second, ib->second);
      if (data->adjacency[u * n + v])
        throw graph_error(errc::duplicate_edge, "edge {" + a + "," + b + "} listed twice");
      data->adjacency[u * n + v] = data->adjacency[v * n + u] = true;
      data->edges.push_back({u, v});
    }
    std::sort(data->edges.begin(), data->edges.end());
    for (const Edge& e : data->edges) {
      data->neighbors[e.u].push_back(e.v);
      data->neighbors[e.v].push_back(e.u);
    }
    for (auto& adj : data->neighbors) std::sort(adj.begin(), adj.end());

    Graph g(std::move(data));
    if (auto stray = g.first_unreachable_vertex())
      throw graph_error(errc::disconnected, "vertex '" + g.label(*stray) + "' is not reachable from '" + g.label(0) + "'");
    return g;
  }

  std::size_t vertex_count() const noexcept { return data_->labels.size(); }
  std::size_t edge_count() const noexcept { return data_->edges.size(); }

  const std::string& label(VertexId v) const { return data_->labels.at(v); }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  VertexId index_of(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw graph_error(errc::unknown_vertex, "no vertex '" + std::string(label) + "'");
  }

  bool adjacent(VertexId u, VertexId v) const { return data_->adjacency[u * vertex_count() + v]; }
  std::span<const VertexId> neighbors(VertexId v) const { return data_->neighbors.at(v); }
  std::size_t degree(VertexId v) const { return data_->neighbors.at(v).size(); }
  std::size_t degree(std::string_view label) const { return degree(index_of(label)); }

  /// Edges sorted by (u, v) with u < v.
  std::span<const Edge> edges() const noexcept { return data_->edges; }

  std::optional<std::size_t> edge_index(VertexId a, VertexId b) const {
    Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(data_->edges.begin(), data_->edges.end(), key);
    if (it == data_->edges.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - data_->edges.begin());
  }

  /// Edge list as label pairs, each pair and the list sorted lexicographically.
  std::vector<LabelPair> label_edges() const {
    std::vector<LabelPair> out;
    out.reserve(edge_count());
    for (const Edge& e : edges()) {
      auto a = label(e.u), b = label(e.v);
      if (b < a) std::swap(a, b);
      out.emplace_back(std::move(a), std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_complete() const noexcept { return edge_count() * 2 == vertex_count() * (vertex_count() - 1); }

  /// Same labels in the same order and the same edge set.
  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->labels == b.data_->labels && a.data_->edges == b.data_->edges;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> index;
    std::vector<bool> adjacency;
    std::vector<std::vector<VertexId>> neighbors;
    std::vector<Edge> edges;
  };

  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::optional<VertexId> first_unreachable_vertex() const {
    std::vector<bool> seen(vertex_count(), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : neighbors(v))
        if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
    for (VertexId v = 0; v < vertex_count(); ++v)
      if (!seen[v]) return v;
    return std::nullopt;
  }

  std::shared_ptr<const Data> data_;
};

/// True iff the graph has no bridge. Single-vertex graphs qualify vacuously.
inline bool is_two_edge_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return true;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> discovery(n, unset), low(n, 0);
  std::size_t clock = 0;
  bool bridge_found = false;

  // Iterative DFS; frame = (vertex, parent, next neighbor slot).
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, unset, 0}};
  discovery[0] = low[0] = clock++;
  while (!stack.empty() && !bridge_found) {
    Frame& top = stack.back();
    auto adj = g.neighbors(top.v);
    if (top.next < adj.size()) {
      VertexId w = adj[top.next++];
      if (w == top.parent) continue;
      if (discovery[w] == unset) {
        discovery[w] = low[w] = clock++;
        stack.push_back({w, top.v, 0});
      } else {
        low[top.v] = std::min(low[top.v], discovery[w]);
      }
      continue;
    }
    Frame done = top;
    stack.pop_back();
    if (!stack.empty()) {
      VertexId parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] > discovery[parent]) bridge_found = true;
    }
  }
  return !bridge_found;
}

/// 1 - |V| + |E|, the cycle rank.
inline long genus(const Graph& g) {
  return 1 - static_cast<long>(g.vertex_count()) + static_cast<long>(g.edge_count());
}

enum class Family { complete, wheel, cycle, house4 };

struct GraphFamily {
  Family tag;
  std::size_t n = 0;  // ignored for house4
};

namespace detail {
inline std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("P" + std::to_string(i));
  return out;
}
}  // namespace detail

/// Named families with vertices P1..Pn.
///
/// wheel(n): hub P1 joined to P2..Pn, rim cycle P2-P3-...-Pn-P2.
/// house4: edges P1P2, P2P3, P3P4, P4P1, P1P3.
inline Graph generate(const GraphFamily& family) {
  auto range_error = [](const char* name, std::size_t n, std::size_t min) {
    return graph_error(errc::parameter_out_of_range,
                       std::string(name) + " needs n >= " + std::to_string(min) + ", got " + std::to_string(n));
  };
  std::vector<Graph::LabelPair> edges;
  const std::size_t n = family.tag == Family::house4 ? 4 : family.n;
  auto labels = detail::numbered_labels(n);
  auto add = [&](std::size_t i, std::size_t j) { edges.emplace_back(labels[i - 1], labels[j - 1]); };

  switch (family.tag) {
    case Family::complete:
      if (n < 3) throw range_error("complete", n, 3);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) add(i, j);
      break;
    case Family::wheel:
      if (n < 5) throw range_error("wheel", n, 5);
      for (std::size_t i = 2; i <= n; ++i) add(1, i);
      for (std::size_t i = 2; i < n; ++i) add(i, i + 1);
      add(n, 2);
      break;
    case Family::cycle:
      if (n < 3) throw range_error("cycle", n, 3);
      for (std::size_t i = 1; i < n; ++i) add(i, i + 1);
      add(n, 1);
      break;
    case Family::house4:
      add(1, 2), add(2, 3), add(3, 4), add(4, 1), add(1, 3);
      break;
  }
  return Graph::build(std::move(labels), edges);
}

}  // namespace graphgalois

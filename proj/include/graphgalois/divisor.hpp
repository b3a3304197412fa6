#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "vertex_map.hpp"

namespace graphgalois {

/// Build a vertex function from labelled values; every vertex must be present.
inline VertexFunction make_vertex_function(const Graph& g, const std::map<std::string, std::int64_t>& values) {
  VertexFunction f(g);
  for (const auto& [label, value] : values) f[g.index_of(label)] = value;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!values.contains(g.label(v)))
      throw graph_error(errc::missing_vertex_value, "no value for vertex '" + g.label(v) + "'");
  return f;
}

/// Divisor from labelled coefficients; absent vertices are 0.
inline Divisor make_divisor(const Graph& g, const std::map<std::string, std::int64_t>& coefficients) {
  Divisor d(g);
  for (const auto& [label, value] : coefficients) d[g.index_of(label)] = value;
  return d;
}

namespace detail {
inline void require_bound(const Graph& g, const Graph& other, const char* what) {
  if (!(g == other)) throw graph_error(errc::graph_mismatch, std::string(what) + " is bound to a different graph");
}

/// Fire every vertex of `in_set` `times` times: each such vertex sends one
/// chip per time along every edge leaving the set.
inline void fire_set(const Graph& g, const std::vector<bool>& in_set, std::int64_t times, Divisor& d,
                     VertexFunction& script) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!in_set[v]) continue;
    script[v] -= times;
    for (VertexId w : g.neighbors(v)) {
      if (in_set[w]) continue;
      d[v] -= times;
      d[w] += times;
    }
  }
}
}  // namespace detail

/// Laplacian: Δ(f)(P) = Σ_{PQ ∈ E} (f(P) - f(Q)).
inline Divisor laplacian_apply(const Graph& g, const VertexFunction& f) {
  detail::require_bound(g, f.graph(), "vertex function");
  Divisor out(g);
  for (const Edge& e : g.edges()) {
    const auto diff = f[e.u] - f[e.v];
    out[e.u] += diff;
    out[e.v] -= diff;
  }
  return out;
}

/// Direct check of the q-reduced conditions by enumerating every nonempty
/// S ⊆ V \ {q}. Exponential; meant for small graphs and as an oracle.
inline bool is_q_reduced(const Graph& g, const Divisor& d, VertexId q) {
  detail::require_bound(g, d.graph(), "divisor");
  const std::size_t n = g.vertex_count();
  if (q >= n) throw graph_error(errc::unknown_vertex, "base vertex index " + std::to_string(q) + " out of range");
  if (n > 26) throw graph_error(errc::size_cap_exceeded, "subset check limited to 26 vertices");

  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v)
    if (v != q) others.push_back(v);
  for (VertexId v : others)
    if (d[v] < 0) return false;

  // Adjacency as bitmasks over positions in `others`.
  std::vector<std::uint32_t> adj(others.size(), 0);
  for (std::size_t i = 0; i < others.size(); ++i)
    for (std::size_t j = 0; j < others.size(); ++j)
      if (g.adjacent(others[i], others[j])) adj[i] |= 1u << j;

  const std::uint32_t full = others.empty() ? 0u : ((1u << others.size()) - 1u);
  for (std::uint32_t s = 1; s != 0 && s <= full; ++s) {
    bool has_witness = false;
    for (std::uint32_t rest = s; rest != 0 && !has_witness; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      const auto outdeg = static_cast<std::int64_t>(g.degree(others[i])) - std::popcount(adj[i] & s);
      if (d[others[i]] < outdeg) has_witness = true;
    }
    if (!has_witness) return false;
  }
  return true;
}

inline bool is_q_reduced(const Graph& g, const Divisor& d, std::string_view q) {
  return is_q_reduced(g, d, g.index_of(q));
}

/// A q-reduced divisor together with the firing script that produced it:
/// divisor = input + laplacian_apply(script).
struct Reduction {
  Divisor divisor;
  VertexFunction script;
};

/// The unique q-reduced divisor linearly equivalent to `d`.
///
/// Stage 1 clears debt off q layer by layer, from the BFS layer farthest
/// from q inwards, by firing the ball of vertices strictly closer to q.
/// Stage 2 runs Dhar burning from q and fires the unburnt set as many times
/// as it stays nonnegative, until everything burns.
inline Reduction q_reduce_with_script(const Graph& g, const Divisor& d, VertexId q) {
  detail::require_bound(g, d.graph(), "divisor");
  const std::size_t n = g.vertex_count();
  if (q >= n) throw graph_error(errc::unknown_vertex, "base vertex index " + std::to_string(q) + " out of range");

  Divisor cur = d;
  VertexFunction script(g);

  std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
  std::vector<VertexId> order{q};
  dist[q] = 0;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (VertexId w : g.neighbors(order[head]))
      if (dist[w] == std::numeric_limits<std::size_t>::max()) dist[w] = dist[order[head]] + 1, order.push_back(w);
  const std::size_t depth = dist[order.back()];

  for (std::size_t level = depth; level >= 1; --level) {
    std::int64_t debt = 0;
    for (VertexId v = 0; v < n; ++v)
      if (dist[v] == level) debt = std::max(debt, -cur[v]);
    if (debt == 0) continue;
    // Every vertex on this layer has a neighbour one layer closer, so each
    // firing of the inner ball pays it at least one chip.
    std::vector<bool> inner(n);
    for (VertexId v = 0; v < n; ++v) inner[v] = dist[v] < level;
    detail::fire_set(g, inner, debt, cur, script);
  }

  std::vector<bool> burnt(n);
  std::vector<std::int64_t> burnt_edges(n);
  std::vector<VertexId> queue;
  for (;;) {
    std::fill(burnt.begin(), burnt.end(), false);
    std::fill(burnt_edges.begin(), burnt_edges.end(), 0);
    queue.assign(1, q);
    burnt[q] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (burnt[w]) continue;
        if (++burnt_edges[w] > cur[w]) burnt[w] = true, queue.push_back(w);
      }
    }
    if (queue.size() == n) break;

    std::vector<bool> unburnt(n);
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (VertexId v = 0; v < n; ++v) {
      unburnt[v] = !burnt[v];
      if (unburnt[v] && burnt_edges[v] > 0) times = std::min(times, cur[v] / burnt_edges[v]);
    }
    detail::fire_set(g, unburnt, times, cur, script);
  }
  assert(n > 20 || is_q_reduced(g, cur, q));
  return {std::move(cur), std::move(script)};
}

inline Divisor q_reduce(const Graph& g, const Divisor& d, VertexId q) { return q_reduce_with_script(g, d, q).divisor; }
inline Divisor q_reduce(const Graph& g, const Divisor& d, std::string_view q) { return q_reduce(g, d, g.index_of(q)); }

/// d1 ~ d2, decided by comparing reduced forms at the first vertex.
inline bool linearly_equivalent(const Graph& g, const Divisor& d1, const Divisor& d2) {
  detail::require_bound(g, d1.graph(), "first divisor");
  detail::require_bound(g, d2.graph(), "second divisor");
  if (d1.degree() != d2.degree()) return false;
  return q_reduce(g, d1, 0) == q_reduce(g, d2, 0);
}

/// |d| ≠ ∅ iff the q-reduced form is nonnegative at q.
inline bool linear_system_nonempty(const Graph& g, const Divisor& d) {
  if (d.degree() < 0) return false;
  return q_reduce(g, d, 0)[0] >= 0;
}

/// C(k + n - 1, n - 1): effective divisors of degree k on n vertices, saturating.
inline std::uint64_t count_effective(std::size_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  const std::uint64_t choose = n - 1;
  const std::uint64_t top = static_cast<std::uint64_t>(k) + choose;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= choose; ++i) {
    acc = acc * (top - choose + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

/// Visit every effective divisor of degree k in lexicographically decreasing
/// order of coefficients. The visitor returns false to stop early.
inline void for_each_effective(const Graph& g, std::int64_t k, const std::function<bool(const Divisor&)>& visit) {
  if (k < 0) return;
  const std::size_t n = g.vertex_count();
  Divisor e(g);
  e[0] = k;
  for (;;) {
    if (!visit(e)) return;
    // Move one chip from the last nonzero slot before the tail to its right
    // neighbour, collecting the tail there.
    std::size_t last = n - 1;
    const std::int64_t tail = e[last];
    e[last] = 0;
    std::size_t i = last;
    while (i > 0 && e[i - 1] == 0) --i;
    if (i == 0) return;
    --e[i - 1];
    e[i] = tail + 1;
  }
}

namespace detail {
inline void charge(std::uint64_t& spent, std::uint64_t amount, const Limits& limits, const char* what) {
  if (amount > limits.enumeration_cap || spent > limits.enumeration_cap - amount)
    throw graph_error(errc::enumeration_cap_exceeded,
                      std::string(what) + " would enumerate " + std::to_string(spent) + " + " + std::to_string(amount) +
                          " effective divisors, cap is " + std::to_string(limits.enumeration_cap));
  spent += amount;
}
}  // namespace detail

/// The complete linear system |d|, in for_each_effective order.
inline std::vector<Divisor> linear_system(const Graph& g, const Divisor& d, const Limits& limits = {}) {
  detail::require_bound(g, d.graph(), "divisor");
  std::vector<Divisor> out;
  const auto k = d.degree();
  if (k < 0) return out;
  std::uint64_t spent = 0;
  detail::charge(spent, count_effective(g.vertex_count(), k), limits, "linear_system");
  const Divisor target = q_reduce(g, d, 0);
  for_each_effective(g, k, [&](const Divisor& e) {
    if (q_reduce(g, e, 0) == target) out.push_back(e);
    return true;
  });
  return out;
}

/// Baker–Norine rank: -1 if |d| is empty, otherwise the largest r such that
/// |d - E| ≠ ∅ for every effective E of degree r.
inline long rank(const Graph& g, const Divisor& d, const Limits& limits = {}) {
  detail::require_bound(g, d.graph(), "divisor");
  const auto k = d.degree();
  if (k < 0) return -1;
  const Divisor reduced = q_reduce(g, d, 0);
  if (reduced[0] < 0) return -1;
  std::uint64_t spent = 0;
  for (std::int64_t s = 1; s <= k; ++s) {
    detail::charge(spent, count_effective(g.vertex_count(), s), limits, "rank");
    bool all_nonempty = true;
    for_each_effective(g, s, [&](const Divisor& e) {
      all_nonempty = linear_system_nonempty(g, reduced - e);
      return all_nonempty;
    });
    if (!all_nonempty) return static_cast<long>(s - 1);
  }
  return static_cast<long>(k);
}

}  // namespace graphgalois

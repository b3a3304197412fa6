#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace graphgalois {

/// Integer-valued total function on the vertices of one graph.
///
/// The tag keeps divisors and vertex functions apart at compile time; both
/// share the same storage and pointwise arithmetic.
template <class Tag>
class VertexMap {
 public:
  using value_type = std::int64_t;

  explicit VertexMap(Graph g) : graph_(std::move(g)), values_(graph_.vertex_count(), 0) {}

  VertexMap(Graph g, std::vector<value_type> values) : graph_(std::move(g)), values_(std::move(values)) {
    if (values_.size() != graph_.vertex_count())
      throw graph_error(errc::missing_vertex_value, "expected " + std::to_string(graph_.vertex_count()) +
                                                        " values, got " + std::to_string(values_.size()));
  }

  /// 1 at `v`, 0 elsewhere.
  static VertexMap unit(const Graph& g, VertexId v) {
    VertexMap out(g);
    out.values_.at(v) = 1;
    return out;
  }

  static VertexMap constant(const Graph& g, value_type c) {
    return VertexMap(g, std::vector<value_type>(g.vertex_count(), c));
  }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return values_.size(); }

  value_type operator[](VertexId v) const { return values_[v]; }
  value_type& operator[](VertexId v) { return values_[v]; }
  value_type at(std::string_view label) const { return values_[graph_.index_of(label)]; }
  value_type& at(std::string_view label) { return values_[graph_.index_of(label)]; }

  std::span<const value_type> values() const noexcept { return values_; }

  value_type degree() const { return std::accumulate(values_.begin(), values_.end(), value_type{0}); }

  std::vector<VertexId> support() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < size(); ++v)
      if (values_[v] != 0) out.push_back(v);
    return out;
  }

  bool is_effective() const {
    return std::all_of(values_.begin(), values_.end(), [](value_type x) { return x >= 0; });
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](value_type x) { return x == 0; });
  }

  VertexMap& operator+=(const VertexMap& other) {
    require_same_graph(other);
    for (VertexId v = 0; v < size(); ++v) values_[v] += other.values_[v];
    return *this;
  }
  VertexMap& operator-=(const VertexMap& other) {
    require_same_graph(other);
    for (VertexId v = 0; v < size(); ++v) values_[v] -= other.values_[v];
    return *this;
  }
  VertexMap& operator*=(value_type k) {
    for (auto& x : values_) x *= k;
    return *this;
  }

  friend VertexMap operator+(VertexMap a, const VertexMap& b) { return a += b; }
  friend VertexMap operator-(VertexMap a, const VertexMap& b) { return a -= b; }
  friend VertexMap operator*(value_type k, VertexMap a) { return a *= k; }
  friend VertexMap operator-(VertexMap a) { return a *= -1; }

  friend bool operator==(const VertexMap& a, const VertexMap& b) {
    return a.values_ == b.values_ && a.graph_ == b.graph_;
  }

  /// Partial order: a >= b iff a(P) >= b(P) for every P.
  bool dominates(const VertexMap& other) const {
    require_same_graph(other);
    for (VertexId v = 0; v < size(); ++v)
      if (values_[v] < other.values_[v]) return false;
    return true;
  }

  /// Strict weak order for use as a set key; graphs are assumed equal.
  friend bool operator<(const VertexMap& a, const VertexMap& b) { return a.values_ < b.values_; }

  void require_same_graph(const VertexMap& other) const {
    if (!(graph_ == other.graph_)) throw graph_error(errc::graph_mismatch, "operands are bound to different graphs");
  }

 private:
  Graph graph_;
  std::vector<value_type> values_;
};

using Divisor = VertexMap<struct DivisorTag>;
using VertexFunction = VertexMap<struct VertexFunctionTag>;

/// P1 + ... + Pn.
inline Divisor vertex_sum(const Graph& g) { return Divisor::constant(g, 1); }

/// Sum over P of (deg(P) - 2) P.
inline Divisor canonical_divisor(const Graph& g) {
  Divisor k(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) k[v] = static_cast<std::int64_t>(g.degree(v)) - 2;
  return k;
}

}  // namespace graphgalois

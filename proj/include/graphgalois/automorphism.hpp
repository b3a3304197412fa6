#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "vertex_map.hpp"

namespace graphgalois {

/// Adjacency-preserving vertex permutation of a bound graph.
class Automorphism {
 public:
  static Automorphism identity(const Graph& g) {
    std::vector<VertexId> image(g.vertex_count());
    std::iota(image.begin(), image.end(), VertexId{0});
    return Automorphism(g, std::move(image));
  }

  /// Validates bijectivity and that {P,Q} ∈ E ⟺ {σP,σQ} ∈ E.
  static Automorphism from_images(const Graph& g, std::vector<VertexId> image) {
    const std::size_t n = g.vertex_count();
    if (image.size() != n) throw graph_error(errc::missing_vertex_value, "permutation must map every vertex");
    std::vector<bool> hit(n, false);
    for (VertexId v : image) {
      if (v >= n || hit[v]) throw graph_error(errc::invalid_morphism, "vertex map is not a bijection");
      hit[v] = true;
    }
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (g.adjacent(a, b) != g.adjacent(image[a], image[b]))
          throw graph_error(errc::invalid_morphism, "map does not preserve adjacency of " + g.label(a) + "," + g.label(b));
    return Automorphism(g, std::move(image));
  }

  const Graph& graph() const noexcept { return graph_; }
  VertexId operator()(VertexId v) const { return image_[v]; }
  const std::vector<VertexId>& images() const noexcept { return image_; }

  Edge operator()(const Edge& e) const {
    VertexId a = image_[e.u], b = image_[e.v];
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  /// (this ∘ other)(v) = this(other(v)).
  Automorphism compose(const Automorphism& other) const {
    std::vector<VertexId> out(image_.size());
    for (VertexId v = 0; v < image_.size(); ++v) out[v] = image_[other.image_[v]];
    return Automorphism(graph_, std::move(out));
  }

  Automorphism inverse() const {
    std::vector<VertexId> out(image_.size());
    for (VertexId v = 0; v < image_.size(); ++v) out[image_[v]] = v;
    return Automorphism(graph_, std::move(out));
  }

  bool is_identity() const {
    for (VertexId v = 0; v < image_.size(); ++v)
      if (image_[v] != v) return false;
    return true;
  }

  std::size_t order() const {
    std::size_t k = 1;
    for (Automorphism p = *this; !p.is_identity(); p = p.compose(*this)) ++k;
    return k;
  }

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.image_ == b.image_; }
  friend auto operator<=>(const Automorphism& a, const Automorphism& b) { return a.image_ <=> b.image_; }

  struct Hash {
    std::size_t operator()(const Automorphism& a) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (VertexId v : a.image_) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };

 private:
  Automorphism(Graph g, std::vector<VertexId> image) : graph_(std::move(g)), image_(std::move(image)) {}

  Graph graph_;
  std::vector<VertexId> image_;
};

/// σ(D): the coefficient of σ(P) in the result is D(P).
inline Divisor apply_to_divisor(const Automorphism& sigma, const Divisor& d) {
  if (!(sigma.graph() == d.graph())) throw graph_error(errc::graph_mismatch, "automorphism and divisor graphs differ");
  Divisor out(d.graph());
  for (VertexId v = 0; v < d.size(); ++v) out[sigma(v)] = d[v];
  return out;
}

/// A finite group of automorphisms of one graph, stored sorted.
class Subgroup {
 public:
  static Subgroup trivial(const Graph& g) { return Subgroup(g, {Automorphism::identity(g)}); }

  /// Closure of the generators under composition; nullopt once the closure
  /// would exceed `max_order` elements.
  static std::optional<Subgroup> generated_by(const Graph& g, const std::vector<Automorphism>& generators,
                                              std::size_t max_order = static_cast<std::size_t>(-1)) {
    std::vector<Automorphism> elements{Automorphism::identity(g)};
    std::unordered_set<Automorphism, Automorphism::Hash> seen(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (const Automorphism& s : generators) {
        Automorphism next = s.compose(elements[i]);
        if (seen.insert(next).second) {
          if (seen.size() > max_order) return std::nullopt;
          elements.push_back(std::move(next));
        }
      }
    }
    return Subgroup(g, std::move(elements));
  }

  /// Take a set of automorphisms as-is, checking closure under composition.
  static Subgroup from_elements(const Graph& g, std::vector<Automorphism> elements) {
    Subgroup h(g, std::move(elements));
    if (!h.contains(Automorphism::identity(g)))
      throw graph_error(errc::invalid_morphism, "element set lacks the identity");
    for (const auto& a : h.elements_)
      for (const auto& b : h.elements_)
        if (!h.contains(a.compose(b))) throw graph_error(errc::invalid_morphism, "element set is not closed under composition");
    return h;
  }

  /// No closure check; for element sets that are groups by construction.
  static Subgroup assume_group(const Graph& g, std::vector<Automorphism> elements) {
    return Subgroup(g, std::move(elements));
  }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Automorphism>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const Automorphism& a) const { return std::binary_search(elements_.begin(), elements_.end(), a); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  Subgroup(Graph g, std::vector<Automorphism> elements) : graph_(std::move(g)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  Graph graph_;
  std::vector<Automorphism> elements_;
};

/// Aut(G) by backtracking: vertices are assigned in order, each only to an
/// unused vertex of equal degree whose adjacency to earlier images matches.
inline Subgroup automorphism_group(const Graph& g, const Limits& limits = {}) {
  const std::size_t n = g.vertex_count();
  if (n > limits.automorphism_vertex_cap)
    throw graph_error(errc::size_cap_exceeded, "automorphism search capped at " +
                                                   std::to_string(limits.automorphism_vertex_cap) + " vertices, graph has " +
                                                   std::to_string(n));
  std::vector<Automorphism> found;
  std::vector<VertexId> image(n);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, VertexId v) -> void {
    if (v == n) {
      found.push_back(Automorphism::from_images(g, image));
      return;
    }
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool consistent = true;
      for (VertexId u = 0; u < v && consistent; ++u) consistent = g.adjacent(u, v) == g.adjacent(image[u], w);
      if (!consistent) continue;
      used[w] = true;
      image[v] = w;
      self(self, v + 1);
      used[w] = false;
    }
  };
  extend(extend, 0);
  return Subgroup::assume_group(g, std::move(found));
}

namespace detail {
/// Every subgroup of `full` whose order divides `m`, grown from the trivial
/// group by adjoining one element at a time. Any subgroup K of order
/// dividing m is reached along a chain of its own subgroups, each of order
/// dividing |K| and hence m, so the search is exhaustive.
inline std::vector<Subgroup> subgroups_dividing(const Subgroup& full, std::size_t m) {
  const Graph& g = full.graph();
  std::vector<Automorphism> candidates;
  for (const auto& a : full)
    if (!a.is_identity() && m % a.order() == 0) candidates.push_back(a);

  std::vector<Subgroup> all{Subgroup::trivial(g)};
  std::vector<std::vector<Automorphism>> generators{{}};
  std::set<std::vector<Automorphism>> seen{all.front().elements()};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].order() == m) continue;
    for (const auto& a : candidates) {
      if (all[i].contains(a)) continue;
      auto gens = generators[i];
      gens.push_back(a);
      auto grown = Subgroup::generated_by(g, gens, m);
      if (!grown || m % grown->order() != 0) continue;
      if (!seen.insert(grown->elements()).second) continue;
      all.push_back(std::move(*grown));
      generators.push_back(std::move(gens));
    }
  }
  return all;
}
}  // namespace detail

/// All subgroups of `full` of order exactly m. Empty when m does not divide |full|.
inline std::vector<Subgroup> subgroups_of_order(const Subgroup& full, std::size_t m) {
  if (m == 0) throw graph_error(errc::parameter_out_of_range, "subgroup order must be positive");
  if (full.order() % m != 0) return {};
  auto all = detail::subgroups_dividing(full, m);
  std::erase_if(all, [m](const Subgroup& h) { return h.order() != m; });
  return all;
}

/// Every subgroup of `full`, including the trivial group and `full` itself.
inline std::vector<Subgroup> all_subgroups(const Subgroup& full) { return detail::subgroups_dividing(full, full.order()); }

inline std::vector<VertexId> orbit(const Subgroup& h, VertexId v) {
  std::vector<VertexId> out;
  for (const auto& s : h) out.push_back(s(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Subgroup stabilizer(const Subgroup& h, VertexId v) {
  std::vector<Automorphism> keep;
  for (const auto& s : h)
    if (s(v) == v) keep.push_back(s);
  return Subgroup::assume_group(h.graph(), std::move(keep));
}

/// Vertex orbits, ordered by smallest member.
inline std::vector<std::vector<VertexId>> vertex_orbits(const Subgroup& h) {
  const std::size_t n = h.graph().vertex_count();
  std::vector<bool> placed(n, false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId v = 0; v < n; ++v) {
    if (placed[v]) continue;
    out.push_back(orbit(h, v));
    for (VertexId w : out.back()) placed[w] = true;
  }
  return out;
}

}  // namespace graphgalois

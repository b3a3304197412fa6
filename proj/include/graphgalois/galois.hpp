#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "divisor.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "quotient.hpp"

namespace graphgalois {

enum class FailureTag { none, rank_not_two, cond1_fail, cond2_fail, no_qualifying_subgroup };

constexpr std::string_view to_string(FailureTag tag) noexcept {
  switch (tag) {
    case FailureTag::none: return "None";
    case FailureTag::rank_not_two: return "RankNotTwo";
    case FailureTag::cond1_fail: return "Cond1Fail";
    case FailureTag::cond2_fail: return "Cond2Fail";
    case FailureTag::no_qualifying_subgroup: return "NoQualifyingSubgroup";
  }
  return "Unknown";
}

/// Why a vertex failed, with the numbers that decided it.
struct FailureReason {
  FailureTag tag = FailureTag::none;
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::optional<long> value;   // the offending rank, or the required subgroup order
  std::size_t subgroups_examined = 0;

  friend bool operator==(const FailureReason&, const FailureReason&) = default;
};

struct GaloisCertificate {
  std::string vertex;
  bool verdict = false;
  std::optional<Subgroup> subgroup;
  std::optional<Divisor> e1;
  std::optional<Divisor> e2;
  std::size_t quotient_vertex_count = 0;
  /// |H| = 1 because deg(D) = 2.
  bool degenerate = false;
  FailureReason reason;

  friend bool operator==(const GaloisCertificate&, const GaloisCertificate&) = default;
};

/// Outcome of conditions (1) and (2): r(D-P) = 1 and r(D-P-Q) = 0 for all Q.
struct SmoothnessResult {
  bool smooth = true;
  FailureReason failure;
};

namespace detail {
inline void require_rank_two(const Graph& g, const Divisor& d, const Limits& limits) {
  if (const long r = rank(g, d, limits); r != 2)
    throw graph_error(errc::rank_precondition_fail, "r(D) = " + std::to_string(r) + ", expected 2");
}

inline SmoothnessResult smoothness(const Graph& g, const Divisor& d, VertexId p, const Limits& limits) {
  const Divisor minus_p = d - Divisor::unit(g, p);
  if (const long r = rank(g, minus_p, limits); r != 1)
    return {false, {FailureTag::cond1_fail, g.label(p), std::nullopt, r, 0}};
  for (VertexId q = 0; q < g.vertex_count(); ++q) {
    if (const long r = rank(g, minus_p - Divisor::unit(g, q), limits); r != 0)
      return {false, {FailureTag::cond2_fail, g.label(p), g.label(q), r, 0}};
  }
  return {};
}
}  // namespace detail

inline SmoothnessResult check_smoothness(const Graph& g, const Divisor& d, VertexId p, const Limits& limits = {}) {
  detail::require_bound(g, d.graph(), "divisor");
  if (p >= g.vertex_count()) throw graph_error(errc::unknown_vertex, "vertex index out of range");
  detail::require_rank_two(g, d, limits);
  return detail::smoothness(g, d, p, limits);
}

/// Members of `s` fixed by every element of `h`.
inline std::vector<Divisor> fixed_members(const Subgroup& h, const std::vector<Divisor>& s) {
  std::vector<Divisor> out;
  for (const Divisor& d : s) {
    if (!(d.graph() == h.graph())) throw graph_error(errc::graph_mismatch, "divisor bound to a different graph");
    const bool fixed = std::all_of(h.begin(), h.end(), [&](const Automorphism& a) { return apply_to_divisor(a, d) == d; });
    if (fixed) out.push_back(d);
  }
  return out;
}

/// Per-graph data shared by every vertex query: Aut(G) and its subgroups of
/// order deg(D) - 1.
struct GaloisContext {
  Subgroup automorphisms;
  std::vector<Subgroup> candidates;
  long rank_of_d;

  static GaloisContext prepare(const Graph& g, const Divisor& d, const Limits& limits = {}) {
    Subgroup aut = automorphism_group(g, limits);
    const long r = rank(g, d, limits);
    std::vector<Subgroup> candidates;
    if (r == 2 && d.degree() >= 2) candidates = subgroups_of_order(aut, static_cast<std::size_t>(d.degree() - 1));
    return {std::move(aut), std::move(candidates), r};
  }
};

namespace detail {
inline GaloisCertificate evaluate_galois(const Graph& g, const Divisor& d, VertexId p, const GaloisContext& ctx,
                                         const Limits& limits) {
  GaloisCertificate cert;
  cert.vertex = g.label(p);
  if (ctx.rank_of_d != 2) {
    cert.reason = {FailureTag::rank_not_two, std::nullopt, std::nullopt, ctx.rank_of_d, 0};
    return cert;
  }
  if (auto smooth = smoothness(g, d, p, limits); !smooth.smooth) {
    cert.reason = smooth.failure;
    return cert;
  }

  const long order = static_cast<long>(d.degree()) - 1;
  const auto system = linear_system(g, d - Divisor::unit(g, p), limits);
  std::size_t examined = 0;
  for (const Subgroup& h : ctx.candidates) {
    ++examined;
    const auto quotient = quotient_graph(g, h);
    if (quotient.quotient.vertices.size() <= 1) continue;
    if (!acts_harmonically(g, h, HarmonicMode::criterion)) continue;
    auto fixed = fixed_members(h, system);
    if (fixed.size() < 2) continue;
    cert.verdict = true;
    cert.subgroup = h;
    cert.e1 = std::move(fixed[0]);
    cert.e2 = std::move(fixed[1]);
    cert.quotient_vertex_count = quotient.quotient.vertices.size();
    cert.degenerate = order == 1;
    return cert;
  }
  cert.reason = {FailureTag::no_qualifying_subgroup, g.label(p), std::nullopt, order, examined};
  return cert;
}
}  // namespace detail

/// Decide whether `p` is a Galois point with respect to |d|.
///
/// Requires a 2-edge-connected graph and r(d) = 2. Every subgroup of Aut(G)
/// of order deg(d) - 1 is tried; the first one with a nontrivial quotient, a
/// harmonic action and two distinct fixed members of |d - p| is returned as
/// the witness.
inline GaloisCertificate is_galois_point(const Graph& g, const Divisor& d, VertexId p, const GaloisContext& ctx,
                                         const Limits& limits = {}) {
  detail::require_bound(g, d.graph(), "divisor");
  if (p >= g.vertex_count()) throw graph_error(errc::unknown_vertex, "vertex index out of range");
  if (!is_two_edge_connected(g)) throw graph_error(errc::not_two_edge_connected, "graph has a bridge");
  if (ctx.rank_of_d != 2)
    throw graph_error(errc::rank_precondition_fail, "r(D) = " + std::to_string(ctx.rank_of_d) + ", expected 2");
  return detail::evaluate_galois(g, d, p, ctx, limits);
}

inline GaloisCertificate is_galois_point(const Graph& g, const Divisor& d, VertexId p, const Limits& limits = {}) {
  detail::require_bound(g, d.graph(), "divisor");
  if (!is_two_edge_connected(g)) throw graph_error(errc::not_two_edge_connected, "graph has a bridge");
  detail::require_rank_two(g, d, limits);
  return is_galois_point(g, d, p, GaloisContext::prepare(g, d, limits), limits);
}

struct ClassificationReport {
  std::string graph_id;
  Divisor divisor;
  long rank = -1;
  bool divisor_is_vertex_sum = false;
  std::vector<GaloisCertificate> certificates;
  std::size_t galois_count = 0;
  bool corollary_consistent = true;
};

/// Run the Galois test at every vertex. When d = ΣP and r(d) = 2 the count
/// must be 0, 1 or n, and n exactly when G is complete.
inline ClassificationReport classify_galois_points(const Graph& g, const Divisor& d, std::string graph_id = "graph",
                                                   const Limits& limits = {}) {
  detail::require_bound(g, d.graph(), "divisor");
  if (!is_two_edge_connected(g)) throw graph_error(errc::not_two_edge_connected, "graph has a bridge");
  const auto ctx = GaloisContext::prepare(g, d, limits);
  ClassificationReport report{std::move(graph_id), d, ctx.rank_of_d, d == vertex_sum(g), {}, 0, true};
  for (VertexId p = 0; p < g.vertex_count(); ++p) {
    report.certificates.push_back(detail::evaluate_galois(g, d, p, ctx, limits));
    if (report.certificates.back().verdict) ++report.galois_count;
  }
  if (report.divisor_is_vertex_sum && report.rank == 2) {
    const std::size_t n = g.vertex_count();
    const std::size_t c = report.galois_count;
    report.corollary_consistent = (c == 0 || c == 1 || c == n) && ((c == n) == g.is_complete());
  }
  return report;
}

struct TheoremCheck {
  bool is_complete = false;
  bool has_two_galois = false;
  bool equivalence_holds = false;
  /// For complete graphs: every vertex is Galois. Vacuously true otherwise.
  bool all_galois_when_complete = true;
  ClassificationReport report;
};

/// With D = ΣP: G is complete ⟺ r(D) = 2 and two distinct vertices are Galois.
inline TheoremCheck verify_complete_characterisation(const Graph& g, const Limits& limits = {}) {
  if (!is_two_edge_connected(g)) throw graph_error(errc::not_two_edge_connected, "graph has a bridge");
  TheoremCheck out{g.is_complete(), false, false, true, classify_galois_points(g, vertex_sum(g), "graph", limits)};
  out.has_two_galois = out.report.rank == 2 && out.report.galois_count >= 2;
  if (out.is_complete) out.all_galois_when_complete = out.report.galois_count == g.vertex_count();
  out.equivalence_holds = (out.is_complete == out.has_two_galois) && out.all_galois_when_complete;
  return out;
}

struct RiemannRochResult {
  bool holds = false;
  long rank_d = 0;
  long rank_k_minus_d = 0;
  long lhs = 0;  // r(D) - r(K - D)
  long rhs = 0;  // deg(D) + 1 - g
};

inline RiemannRochResult riemann_roch_check(const Graph& g, const Divisor& d, const Limits& limits = {}) {
  RiemannRochResult out;
  out.rank_d = rank(g, d, limits);
  out.rank_k_minus_d = rank(g, canonical_divisor(g) - d, limits);
  out.lhs = out.rank_d - out.rank_k_minus_d;
  out.rhs = static_cast<long>(d.degree()) + 1 - genus(g);
  out.holds = out.lhs == out.rhs;
  return out;
}

struct AuditResult {
  bool ok = true;
  std::vector<std::string> problems;

  void fail(std::string what) {
    ok = false;
    problems.push_back(std::move(what));
  }
};

/// Re-check a positive certificate from its witnesses alone.
///
/// Group axioms are checked element by element, harmonicity through the
/// all-subgroups definition rather than the stabiliser criterion, orbits are
/// counted directly, and membership in |D - P| is decided at the last vertex
/// rather than the first.
inline AuditResult audit_certificate(const Graph& g, const Divisor& d, const GaloisCertificate& cert,
                                     const Limits& limits = {}) {
  AuditResult out;
  if (!cert.verdict) {
    out.fail("certificate is negative; nothing to audit");
    return out;
  }
  if (!cert.subgroup || !cert.e1 || !cert.e2) {
    out.fail("missing witness");
    return out;
  }
  const VertexId p = g.index_of(cert.vertex);
  const Subgroup& h = *cert.subgroup;
  const auto& elems = h.elements();

  if (static_cast<long>(elems.size()) != d.degree() - 1)
    out.fail("|H| = " + std::to_string(elems.size()) + ", expected " + std::to_string(d.degree() - 1));
  auto member = [&](const Automorphism& a) { return std::find(elems.begin(), elems.end(), a) != elems.end(); };
  for (const auto& a : elems) {
    std::vector<VertexId> img = a.images();
    try {
      (void)Automorphism::from_images(g, img);
    } catch (const graph_error&) {
      out.fail("element is not an automorphism");
    }
    for (const auto& b : elems)
      if (!member(a.compose(b))) {
        out.fail("H is not closed under composition");
        break;
      }
  }
  if (!member(Automorphism::identity(g))) out.fail("H lacks the identity");

  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t orbits = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    ++orbits;
    for (const auto& a : elems) seen[a(v)] = true;
  }
  if (orbits <= 1) out.fail("quotient has a single vertex");
  if (orbits != cert.quotient_vertex_count) out.fail("reported quotient size disagrees with the orbit count");

  if (!acts_harmonically(g, h, HarmonicMode::definition)) out.fail("H does not act harmonically");

  const Divisor target = d - Divisor::unit(g, p);
  const VertexId base = g.vertex_count() - 1;
  for (const Divisor* e : {&*cert.e1, &*cert.e2}) {
    if (!e->is_effective()) out.fail("witness divisor is not effective");
    if (e->degree() != target.degree() || q_reduce(g, *e, base) != q_reduce(g, target, base))
      out.fail("witness divisor is not in |D - P|");
    for (const auto& a : elems)
      if (apply_to_divisor(a, *e) != *e) {
        out.fail("witness divisor is moved by H");
        break;
      }
  }
  if (*cert.e1 == *cert.e2) out.fail("E1 = E2");

  if (rank(g, d, limits) != 2) out.fail("r(D) != 2");
  if (rank(g, target, limits) != 1) out.fail("r(D - P) != 1");
  for (VertexId q = 0; q < g.vertex_count(); ++q)
    if (rank(g, target - Divisor::unit(g, q), limits) != 0) out.fail("r(D - P - " + g.label(q) + ") != 0");

  // With D = ΣP every σ ∈ H must fix P and D - P.
  if (d == vertex_sum(g)) {
    for (const auto& a : elems) {
      if (a(p) != p) out.fail("an element of H moves " + cert.vertex);
      if (apply_to_divisor(a, target) != target) out.fail("an element of H moves D - " + cert.vertex);
    }
  }
  return out;
}

}  // namespace graphgalois

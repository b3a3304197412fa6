#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divisor.hpp"
#include "error.hpp"
#include "galois.hpp"
#include "graph.hpp"

namespace graphgalois {

struct CorpusEntry {
  std::vector<Graph::LabelPair> edges;
  long rank = -1;               // r(ΣP)
  std::size_t galois_count = 0;
  bool theorem_consistent = false;
  bool corollary_consistent = false;
  bool certificates_audited = true;  // every positive certificate re-verified
};

struct CorpusResult {
  std::size_t n = 0;
  std::size_t graphs_tested = 0;
  std::vector<CorpusEntry> entries;
  bool passed = true;
};

/// Visit every connected labelled simple graph on P1..Pn, one per edge subset
/// of K_n, in increasing bitmask order. Bit k of the mask is the k-th pair
/// (i, j), i < j, in lexicographic order.
template <class Visit>
void for_each_connected_labelled_graph(std::size_t n, Visit&& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const auto labels = detail::numbered_labels(n);
  const std::uint64_t masks = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<Graph::LabelPair> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) edges.emplace_back(labels[pairs[k].first], labels[pairs[k].second]);
    std::optional<Graph> g;
    try {
      g = Graph::build(labels, edges);
    } catch (const graph_error& e) {
      if (e.code() != errc::disconnected) throw;
      continue;
    }
    visit(*g);
  }
}

/// Theorem and corollary sweep over every 2-edge-connected labelled graph on
/// n vertices, 3 <= n <= 6.
inline CorpusResult enumerate_corpus(std::size_t n, const Limits& limits = {}) {
  if (n < 3 || n > 6) throw graph_error(errc::cap_exceeded, "corpus size must be in [3, 6], got " + std::to_string(n));
  CorpusResult result;
  result.n = n;
  for_each_connected_labelled_graph(n, [&](const Graph& g) {
    if (!is_two_edge_connected(g)) return;
    const auto check = verify_complete_characterisation(g, limits);
    CorpusEntry entry;
    entry.edges = g.label_edges();
    entry.rank = check.report.rank;
    entry.galois_count = check.report.galois_count;
    entry.theorem_consistent = check.equivalence_holds;
    entry.corollary_consistent = check.report.corollary_consistent;
    const Divisor d = vertex_sum(g);
    for (const auto& cert : check.report.certificates)
      if (cert.verdict && !audit_certificate(g, d, cert, limits).ok) entry.certificates_audited = false;
    result.passed = result.passed && entry.theorem_consistent && entry.corollary_consistent && entry.certificates_audited;
    result.entries.push_back(std::move(entry));
  });
  result.graphs_tested = result.entries.size();
  return result;
}

}  // namespace graphgalois

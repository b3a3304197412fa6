#pragma once

#include <cstdlib>
#include <string>

#include "automorphism.hpp"
#include "vertex_map.hpp"

namespace graphgalois {

/// "3·P1 − 1·P2" in vertex order; zero coefficients are skipped, "0" if none remain.
template <class Tag>
std::string to_text(const VertexMap<Tag>& d) {
  std::string out;
  for (VertexId v = 0; v < d.size(); ++v) {
    const auto c = d[v];
    if (c == 0) continue;
    if (out.empty())
      out += c < 0 ? "−" : "";
    else
      out += c < 0 ? " − " : " + ";
    out += std::to_string(c < 0 ? -c : c) + "·" + d.graph().label(v);
  }
  return out.empty() ? "0" : out;
}

/// Disjoint cycle notation, e.g. "(P2 P3 P4)"; "id" for the identity.
inline std::string to_cycle_text(const Automorphism& a) {
  const Graph& g = a.graph();
  std::vector<bool> done(g.vertex_count(), false);
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (done[v] || a(v) == v) continue;
    out += "(" + g.label(v);
    done[v] = true;
    for (VertexId w = a(v); w != v; w = a(w)) out += " " + g.label(w), done[w] = true;
    out += ")";
  }
  return out.empty() ? "id" : out;
}

}  // namespace graphgalois

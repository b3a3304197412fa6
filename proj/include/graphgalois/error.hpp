#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphgalois {

/// Every failure the library reports. The message names the offending element.
enum class errc {
  duplicate_vertex,
  loop_edge,
  duplicate_edge,
  unknown_endpoint,
  disconnected,
  empty_graph,
  parameter_out_of_range,
  unknown_vertex,
  missing_vertex_value,
  graph_mismatch,
  enumeration_cap_exceeded,
  size_cap_exceeded,
  invalid_morphism,
  rank_precondition_fail,
  not_two_edge_connected,
  cap_exceeded,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::duplicate_vertex: return "DuplicateVertex";
    case errc::loop_edge: return "LoopEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::unknown_endpoint: return "UnknownEndpoint";
    case errc::disconnected: return "Disconnected";
    case errc::empty_graph: return "EmptyGraph";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::missing_vertex_value: return "MissingVertexValue";
    case errc::graph_mismatch: return "GraphMismatch";
    case errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::invalid_morphism: return "InvalidMorphism";
    case errc::rank_precondition_fail: return "RankPreconditionFail";
    case errc::not_two_edge_connected: return "NotTwoEdgeConnected";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class graph_error : public std::runtime_error {
 public:
  graph_error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Resource limits shared by the enumerating operations.
struct Limits {
  /// Effective divisors enumerated by one linear_system / rank call.
  std::uint64_t enumeration_cap = 5'000'000;
  /// Largest vertex count accepted by the automorphism search.
  std::size_t automorphism_vertex_cap = 10;
};

}  // namespace graphgalois

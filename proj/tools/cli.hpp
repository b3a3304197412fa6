#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <graphgalois/graphgalois.hpp>

namespace graphgalois::cli {

enum exit_status : int { ok = 0, inconsistent = 1, usage = 2 };

enum class OutputFormat { text, json };

/// One parsed command line.
struct CommandRequest {
  std::string subcommand;
  std::optional<std::string> family;
  std::optional<std::string> graph_path;
  std::string divisor = "all-ones";
  std::optional<std::string> other;
  std::optional<std::string> base;
  std::optional<std::string> vertex;
  std::optional<std::size_t> order;
  std::optional<std::string> subgroup;
  std::string mode = "criterion";
  OutputFormat format = OutputFormat::text;
  std::optional<std::uint64_t> cap;
  std::optional<std::size_t> corpus_n;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "complete:5", "wheel:6", "cycle:4", "house4".
inline GraphFamily parse_family(const std::string& spec) {
  if (spec == "house4") return {Family::house4, 4};
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw usage_error("--family: expected name:n or house4, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw usage_error("--family: bad size in '" + spec + "'");
  }
  if (name == "complete") return {Family::complete, n};
  if (name == "wheel") return {Family::wheel, n};
  if (name == "cycle") return {Family::cycle, n};
  throw usage_error("--family: unknown family '" + name + "'");
}

/// "all-ones", "zero", or an inline JSON object.
inline Divisor parse_divisor(const Graph& g, const std::string& spec, const char* flag) {
  if (spec == "all-ones") return vertex_sum(g);
  if (spec == "zero") return Divisor(g);
  json j;
  try {
    j = json::parse(spec);
  } catch (const json::exception&) {
    throw usage_error(std::string(flag) + ": expected all-ones, zero or a JSON object, got '" + spec + "'");
  }
  return divisor_from_json(g, j);
}

inline Graph load_graph(const CommandRequest& req) {
  if (req.family.has_value() == req.graph_path.has_value())
    throw usage_error("exactly one of --family or --graph is required");
  if (req.family) return generate(parse_family(*req.family));
  std::ifstream in(*req.graph_path);
  if (!in) throw usage_error("--graph: cannot read '" + *req.graph_path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw usage_error("--graph: invalid JSON in '" + *req.graph_path + "': " + e.what());
  }
  return graph_from_json(j);
}

inline std::string graph_id(const CommandRequest& req) { return req.family ? *req.family : *req.graph_path; }

namespace detail {

inline void print_certificate_text(std::ostream& out, const GaloisCertificate& c) {
  if (c.verdict) {
    out << c.vertex << ": Galois point\n  H =";
    for (const auto& a : *c.subgroup) out << " " << to_cycle_text(a);
    out << "\n  E1 = " << to_text(*c.e1) << "\n  E2 = " << to_text(*c.e2)
        << "\n  |V(G/H)| = " << c.quotient_vertex_count << (c.degenerate ? " (degenerate: |H| = 1)" : "") << "\n";
    return;
  }
  out << c.vertex << ": not a Galois point (" << to_string(c.reason.tag);
  if (c.reason.q) out << " at Q = " << *c.reason.q;
  if (c.reason.value) out << ", value " << *c.reason.value;
  if (c.reason.tag == FailureTag::no_qualifying_subgroup)
    out << ", " << c.reason.subgroups_examined << " subgroups examined";
  out << ")\n";
}

inline Subgroup requested_subgroup(const Graph& g, const CommandRequest& req, const Limits& limits) {
  if (!req.subgroup) return automorphism_group(g, limits);
  json j;
  try {
    j = json::parse(*req.subgroup);
  } catch (const json::exception&) {
    throw usage_error("--subgroup: expected a JSON list of automorphism mappings");
  }
  return subgroup_from_generators_json(g, j);
}

inline int execute(const CommandRequest& req, std::ostream& out) {
  Limits limits;
  if (req.cap) limits.enumeration_cap = *req.cap;
  const bool as_json = req.format == OutputFormat::json;
  auto emit = [&](const json& j) { out << j.dump(2) << "\n"; };

  if (req.subcommand == "corpus") {
    if (req.family || req.graph_path) throw usage_error("corpus takes --n, not a graph");
    if (!req.corpus_n) throw usage_error("--n is required for corpus");
    const auto result = enumerate_corpus(*req.corpus_n, limits);
    if (as_json) {
      json entries = json::array();
      for (const auto& e : result.entries) {
        json edges = json::array();
        for (const auto& [a, b] : e.edges) edges.push_back({a, b});
        entries.push_back({{"edges", std::move(edges)},
                           {"rank", e.rank},
                           {"galois_count", e.galois_count},
                           {"theorem_consistent", e.theorem_consistent},
                           {"corollary_consistent", e.corollary_consistent},
                           {"certificates_audited", e.certificates_audited}});
      }
      emit({{"n", result.n}, {"graphs_tested", result.graphs_tested}, {"passed", result.passed}, {"graphs", entries}});
    } else {
      std::size_t rank_two = 0;
      std::vector<std::size_t> histogram(result.n + 1, 0);
      for (const auto& e : result.entries)
        if (e.rank == 2) ++rank_two, ++histogram[e.galois_count];
      out << "n = " << result.n << ": " << result.graphs_tested << " 2-edge-connected labelled graphs, " << rank_two
          << " with r(D) = 2\n";
      for (std::size_t c = 0; c <= result.n; ++c)
        if (histogram[c]) out << "  " << histogram[c] << " with " << c << " Galois points\n";
      out << (result.passed ? "all consistent\n" : "INCONSISTENT\n");
    }
    return result.passed ? ok : inconsistent;
  }

  const Graph g = load_graph(req);
  const std::string& cmd = req.subcommand;

  if (cmd == "gen") {
    if (as_json) {
      emit(to_json(g));
    } else {
      out << "vertices:";
      for (const auto& l : g.labels()) out << " " << l;
      out << "\nedges:";
      for (const auto& [a, b] : g.label_edges()) out << " " << a << "-" << b;
      out << "\ngenus: " << genus(g) << "\n2-edge-connected: " << (is_two_edge_connected(g) ? "true" : "false") << "\n";
    }
    return ok;
  }

  const Divisor d = parse_divisor(g, req.divisor, "--divisor");

  if (cmd == "rank") {
    const long r = rank(g, d, limits);
    if (as_json)
      emit({{"divisor", to_json(d)}, {"rank", r}});
    else
      out << r << "\n";
    return ok;
  }
  if (cmd == "reduce") {
    const VertexId q = req.base ? g.index_of(*req.base) : 0;
    const auto red = q_reduce_with_script(g, d, q);
    if (as_json)
      emit({{"base", g.label(q)}, {"divisor", to_json(d)}, {"reduced", to_json(red.divisor)}, {"script", to_json(red.script)}});
    else
      out << to_text(red.divisor) << "\n";
    return ok;
  }
  if (cmd == "equiv") {
    if (!req.other) throw usage_error("--other is required for equiv");
    const Divisor e = parse_divisor(g, *req.other, "--other");
    const bool eq = linearly_equivalent(g, d, e);
    if (as_json)
      emit({{"divisor", to_json(d)}, {"other", to_json(e)}, {"equivalent", eq}});
    else
      out << (eq ? "true" : "false") << "\n";
    return ok;
  }
  if (cmd == "linsys") {
    const auto members = linear_system(g, d, limits);
    if (as_json) {
      json list = json::array();
      for (const auto& m : members) list.push_back(to_json(m));
      emit({{"divisor", to_json(d)}, {"size", members.size()}, {"members", list}});
    } else {
      for (const auto& m : members) out << to_text(m) << "\n";
      out << "|D| has " << members.size() << " members\n";
    }
    return ok;
  }
  if (cmd == "aut") {
    const auto aut = automorphism_group(g, limits);
    if (as_json) {
      emit({{"order", aut.order()}, {"elements", to_json(aut)}});
    } else {
      out << "order " << aut.order() << "\n";
      for (const auto& a : aut) out << to_cycle_text(a) << "\n";
    }
    return ok;
  }
  if (cmd == "subgroups") {
    if (!req.order) throw usage_error("--order is required for subgroups");
    const auto list = subgroups_of_order(automorphism_group(g, limits), *req.order);
    if (as_json) {
      json arr = json::array();
      for (const auto& h : list) arr.push_back(to_json(h));
      emit({{"order", *req.order}, {"count", list.size()}, {"subgroups", arr}});
    } else {
      out << list.size() << " subgroups of order " << *req.order << "\n";
      for (const auto& h : list) {
        for (const auto& a : h) out << " " << to_cycle_text(a);
        out << "\n";
      }
    }
    return ok;
  }
  if (cmd == "quotient") {
    const auto q = quotient_graph(g, requested_subgroup(g, req, limits));
    if (as_json) {
      emit(to_json(q));
    } else {
      out << q.quotient.vertices.size() << " vertices:";
      for (const auto& v : q.quotient.vertices) out << " " << v;
      out << "\n" << q.quotient.edges.size() << " edge classes:";
      for (const auto& [a, b] : q.quotient.edges) out << " " << q.quotient.vertices[a] << "-" << q.quotient.vertices[b];
      out << "\n";
    }
    return ok;
  }
  if (cmd == "harmonic") {
    HarmonicMode mode;
    if (req.mode == "criterion")
      mode = HarmonicMode::criterion;
    else if (req.mode == "definition")
      mode = HarmonicMode::definition;
    else
      throw usage_error("--mode: expected criterion or definition, got '" + req.mode + "'");
    const auto h = requested_subgroup(g, req, limits);
    const bool harmonic = acts_harmonically(g, h, mode);
    if (as_json)
      emit({{"order", h.order()}, {"mode", req.mode}, {"harmonic", harmonic}});
    else
      out << (harmonic ? "true" : "false") << "\n";
    return ok;
  }
  if (cmd == "galois") {
    if (!req.vertex) throw usage_error("--vertex is required for galois");
    const auto cert = is_galois_point(g, d, g.index_of(*req.vertex), limits);
    const bool sound = !cert.verdict || audit_certificate(g, d, cert, limits).ok;
    if (as_json)
      emit(to_json(cert));
    else
      print_certificate_text(out, cert);
    return sound ? ok : inconsistent;
  }
  if (cmd == "classify") {
    const auto report = classify_galois_points(g, d, graph_id(req), limits);
    bool sound = report.corollary_consistent;
    for (const auto& c : report.certificates)
      if (c.verdict && !audit_certificate(g, d, c, limits).ok) sound = false;
    if (as_json) {
      emit(to_json(report));
    } else {
      out << "r(D) = " << report.rank << ", " << report.galois_count << " Galois points\n";
      for (const auto& c : report.certificates) print_certificate_text(out, c);
      if (!report.corollary_consistent) out << "corollary violated\n";
    }
    return sound ? ok : inconsistent;
  }
  if (cmd == "verify-theorem") {
    const auto check = verify_complete_characterisation(g, limits);
    if (as_json) {
      emit(to_json(check));
    } else {
      out << "complete: " << (check.is_complete ? "true" : "false")
          << "\ntwo Galois points with r(D) = 2: " << (check.has_two_galois ? "true" : "false")
          << "\nequivalence holds: " << (check.equivalence_holds ? "true" : "false") << "\n";
    }
    return check.equivalence_holds ? ok : inconsistent;
  }
  if (cmd == "rr-check") {
    const auto rr = riemann_roch_check(g, d, limits);
    if (as_json)
      emit(to_json(rr));
    else
      out << "r(D) - r(K-D) = " << rr.rank_d << " - (" << rr.rank_k_minus_d << ") = " << rr.lhs
          << "\ndeg(D) + 1 - g = " << rr.rhs << "\n"
          << (rr.holds ? "holds" : "FAILS") << "\n";
    return rr.holds ? ok : inconsistent;
  }
  throw usage_error("unknown subcommand '" + cmd + "'");
}

}  // namespace detail

/// Parse `args` (without the program name) and run the subcommand.
/// Returns 0 on success, 1 on a mathematical inconsistency, 2 on bad input.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor theory and Galois points on finite graphs", "graphgalois"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  CommandRequest req;
  std::string format = "text";
  app.add_option("--family", req.family, "Named graph: complete:n, wheel:n, cycle:n or house4");
  app.add_option("--graph", req.graph_path, "Graph JSON file");
  app.add_option("--divisor", req.divisor, "Divisor: all-ones, zero or inline JSON");
  app.add_option("--other", req.other, "Second divisor for equiv");
  app.add_option("--base", req.base, "Base vertex q for reduce");
  app.add_option("--vertex", req.vertex, "Vertex to test for galois");
  app.add_option("--order", req.order, "Subgroup order")->check(CLI::PositiveNumber);
  app.add_option("--subgroup", req.subgroup, "JSON list of generator mappings (default: Aut(G))");
  app.add_option("--mode", req.mode, "Harmonicity test: criterion or definition");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", req.cap, "Enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--n", req.corpus_n, "Vertex count for corpus");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"gen", "Print a graph"},
      {"rank", "Baker-Norine rank of the divisor"},
      {"reduce", "q-reduced form of the divisor"},
      {"equiv", "Linear equivalence of --divisor and --other"},
      {"linsys", "Complete linear system |D|"},
      {"aut", "Automorphism group"},
      {"subgroups", "Subgroups of Aut(G) of a given order"},
      {"quotient", "Quotient graph G/H"},
      {"harmonic", "Whether H acts harmonically"},
      {"galois", "Galois point test at --vertex"},
      {"classify", "Galois test at every vertex"},
      {"verify-theorem", "Complete-graph characterisation for D = sum of vertices"},
      {"rr-check", "Riemann-Roch identity for the divisor"},
      {"corpus", "Sweep all 2-edge-connected labelled graphs on --n vertices"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return usage;
  }
  req.subcommand = app.get_subcommands().front()->get_name();
  req.format = format == "json" ? OutputFormat::json : OutputFormat::text;

  try {
    return detail::execute(req, out);
  } catch (const usage_error& e) {
    err << "usage: " << e.what() << "\n";
  } catch (const graph_error& e) {
    err << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "json: " << e.what() << "\n";
  }
  return usage;
}

}  // namespace graphgalois::cli

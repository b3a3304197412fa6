#include <catch_amalgamated.hpp>

#include <random>

#include <graphgalois/graph.hpp>
#include <graphgalois/vertex_map.hpp>

#include "oracles.hpp"

using namespace graphgalois;

namespace {

errc build_error(std::vector<std::string> vs, std::vector<Graph::LabelPair> es) {
  try {
    Graph::build(std::move(vs), es);
  } catch (const graph_error& e) {
    return e.code();
  }
  FAIL("expected build_graph to throw");
  return errc::parse_error;
}

}  // namespace

TEST_CASE("build accepts valid graphs", "[graph]") {
  auto g = Graph::build({"P1", "P2"}, {{"P1", "P2"}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));

  auto single = Graph::build({"P1"}, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);
}

TEST_CASE("build rejects each invalid input with a named error", "[graph]") {
  CHECK(build_error({"P1", "P2"}, {{"P1", "P1"}}) == errc::loop_edge);
  CHECK(build_error({"P1", "P1"}, {}) == errc::duplicate_vertex);
  CHECK(build_error({"P1", "P2"}, {{"P1", "P2"}, {"P2", "P1"}}) == errc::duplicate_edge);
  CHECK(build_error({"P1", "P2"}, {{"P1", "P3"}}) == errc::unknown_endpoint);
  CHECK(build_error({"P1", "P2", "P3"}, {{"P1", "P2"}}) == errc::disconnected);
  CHECK(build_error({}, {}) == errc::empty_graph);

  try {
    Graph::build({"A", "B", "C"}, {{"A", "B"}});
  } catch (const graph_error& e) {
    CHECK(std::string(e.what()).find("'C'") != std::string::npos);
  }
}

TEST_CASE("family generators", "[graph]") {
  SECTION("complete") {
    auto k4 = generate({Family::complete, 4});
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.is_complete());
  }
  SECTION("wheel(5) matches the hub plus rim description") {
    auto w5 = generate({Family::wheel, 5});
    std::vector<Graph::LabelPair> expected = {{"P1", "P2"}, {"P1", "P3"}, {"P1", "P4"}, {"P1", "P5"},
                                              {"P2", "P3"}, {"P2", "P5"}, {"P3", "P4"}, {"P4", "P5"}};
    CHECK(w5.label_edges() == expected);
  }
  SECTION("house4 has exactly the five listed edges") {
    auto h = generate({Family::house4});
    std::vector<Graph::LabelPair> expected = {{"P1", "P2"}, {"P1", "P3"}, {"P1", "P4"}, {"P2", "P3"}, {"P3", "P4"}};
    CHECK(h.label_edges() == expected);
  }
  SECTION("cycle") {
    auto c5 = generate({Family::cycle, 5});
    CHECK(c5.edge_count() == 5);
    for (VertexId v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  }
  SECTION("parameter ranges") {
    CHECK_THROWS_MATCHES(generate({Family::wheel, 4}), graph_error,
                         Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("ParameterOutOfRange")));
    CHECK_THROWS_AS(generate({Family::complete, 2}), graph_error);
    CHECK_THROWS_AS(generate({Family::cycle, 2}), graph_error);
  }
}

TEST_CASE("two-edge-connectivity", "[graph]") {
  CHECK(is_two_edge_connected(generate({Family::complete, 4})));
  CHECK_FALSE(is_two_edge_connected(Graph::build({"P1", "P2"}, {{"P1", "P2"}})));
  CHECK(is_two_edge_connected(Graph::build({"P1"}, {})));
  auto house = generate({Family::house4});
  CHECK(oracle::two_edge_connected(4, oracle::edge_pairs(house)));
  CHECK(is_two_edge_connected(house));

  // two triangles sharing a bridge
  auto barbell = Graph::build({"a", "b", "c", "d", "e", "f"},
                              {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
  CHECK_FALSE(is_two_edge_connected(barbell));
}

TEST_CASE("two-edge-connectivity agrees with edge-deletion search", "[graph][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<Graph::LabelPair> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 2) edges.emplace_back(labels[i], labels[j]);
    Graph g = [&] {
      try {
        return Graph::build(labels, edges);
      } catch (const graph_error&) {
        return generate({Family::cycle, 3});
      }
    }();
    CHECK(is_two_edge_connected(g) == oracle::two_edge_connected(g.vertex_count(), oracle::edge_pairs(g)));
  }
}

TEST_CASE("degree, genus and canonical divisor", "[graph]") {
  auto k5 = generate({Family::complete, 5});
  for (VertexId v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
  CHECK(genus(k5) == 6);

  auto w5 = generate({Family::wheel, 5});
  CHECK(w5.degree("P1") == 4);
  CHECK(w5.degree("P2") == 3);
  CHECK_THROWS_AS(w5.degree("P9"), graph_error);

  auto house = generate({Family::house4});
  CHECK(house.degree("P2") == 2);
  CHECK(house.degree("P3") == 3);
  CHECK(genus(house) == 2);
  CHECK(canonical_divisor(house) == Divisor(house, {1, 0, 1, 0}));

  CHECK(canonical_divisor(generate({Family::cycle, 6})).is_zero());
  CHECK(canonical_divisor(generate({Family::complete, 4})) == vertex_sum(generate({Family::complete, 4})));

  auto path = Graph::build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}});
  CHECK(genus(path) == 0);
}

TEST_CASE("canonical divisor has degree 2g - 2", "[graph][property]") {
  for (auto fam : {GraphFamily{Family::complete, 6}, GraphFamily{Family::wheel, 7}, GraphFamily{Family::cycle, 5},
                   GraphFamily{Family::house4}}) {
    auto g = generate(fam);
    CHECK(canonical_divisor(g).degree() == 2 * genus(g) - 2);
  }
  for (std::size_t n = 3; n <= 8; ++n) CHECK(is_two_edge_connected(generate({Family::complete, n})));
  for (std::size_t n = 5; n <= 9; ++n) CHECK(is_two_edge_connected(generate({Family::wheel, n})));
}

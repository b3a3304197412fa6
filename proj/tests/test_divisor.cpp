#include <catch_amalgamated.hpp>

#include <random>

#include <graphgalois/divisor.hpp>
#include <graphgalois/format.hpp>
#include <graphgalois/graph.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace graphgalois;
using testing_support::coeffs;

namespace {
Divisor unit(const Graph& g, std::string_view label) { return Divisor::unit(g, g.index_of(label)); }
}  // namespace

TEST_CASE("divisor basics", "[divisor]") {
  auto g = generate({Family::complete, 4});
  auto d = make_divisor(g, {{"P1", 3}, {"P2", -1}});
  CHECK(d.degree() == 2);
  CHECK(d.support() == std::vector<VertexId>{0, 1});
  CHECK_FALSE(d.is_effective());
  CHECK(vertex_sum(g).dominates(Divisor(g)));
  CHECK(to_text(d) == "3·P1 − 1·P2");
  CHECK(to_text(-d) == "−3·P1 + 1·P2");
  CHECK(to_text(Divisor(g)) == "0");
  CHECK_THROWS_AS(make_divisor(g, {{"Q", 1}}), graph_error);

  auto other = generate({Family::cycle, 4});
  CHECK_THROWS_MATCHES(d + vertex_sum(other), graph_error,
                       Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("GraphMismatch")));
}

TEST_CASE("laplacian", "[divisor]") {
  for (std::size_t n = 4; n <= 7; ++n) {
    auto k = generate({Family::complete, n});
    Divisor expected = -vertex_sum(k);
    expected[0] = static_cast<std::int64_t>(n) - 1;
    CHECK(laplacian_apply(k, VertexFunction::unit(k, 0)) == expected);
  }
  for (std::size_t n = 5; n <= 8; ++n) {
    auto w = generate({Family::wheel, n});
    auto expected = -unit(w, "P1") + 3 * unit(w, "P2") - unit(w, "P3") - unit(w, "P" + std::to_string(n));
    CHECK(laplacian_apply(w, VertexFunction::unit(w, 1)) == expected);
  }
  auto h = generate({Family::house4});
  CHECK(laplacian_apply(h, VertexFunction::constant(h, 7)).is_zero());

  CHECK_THROWS_MATCHES(make_vertex_function(h, {{"P1", 1}, {"P2", 0}}), graph_error,
                       Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("MissingVertexValue")));
  CHECK(make_vertex_function(h, {{"P1", 1}, {"P2", 0}, {"P3", 0}, {"P4", 0}}) == VertexFunction::unit(h, 0));

  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto g = testing_support::random_connected_graph(rng, 2 + rng() % 6);
    auto f = testing_support::random_function(rng, g, 5);
    auto lap = laplacian_apply(g, f);
    CHECK(lap.degree() == 0);
    CHECK(coeffs(lap) == oracle::laplacian(g, {f.values().begin(), f.values().end()}));
  }
}

TEST_CASE("q-reduced subset check", "[divisor]") {
  auto k4 = generate({Family::complete, 4});
  auto house = generate({Family::house4});
  auto w5 = generate({Family::wheel, 5});
  // a single chip away from q is reduced on a 2-edge-connected graph
  for (const auto& g : {k4, house, w5})
    for (VertexId p = 0; p < g.vertex_count(); ++p)
      for (VertexId q = 0; q < g.vertex_count(); ++q)
        if (p != q) CHECK(is_q_reduced(g, Divisor::unit(g, p), q));

  auto debt = unit(k4, "P1") - unit(k4, "P3");
  CHECK_FALSE(is_q_reduced(k4, debt, "P1"));
  // S = {P2, P3, P4} has outdeg 1 everywhere
  CHECK_FALSE(is_q_reduced(k4, vertex_sum(k4), "P1"));
  CHECK(is_q_reduced(k4, 4 * unit(k4, "P1"), "P1"));
  CHECK_THROWS_AS(is_q_reduced(k4, debt, "P7"), graph_error);
}

TEST_CASE("q_reduce examples", "[divisor]") {
  auto k4 = generate({Family::complete, 4});
  auto reduced = q_reduce(k4, vertex_sum(k4), "P1");
  CHECK(reduced == 4 * unit(k4, "P1"));
  CHECK(oracle::equivalent(k4, coeffs(vertex_sum(k4)), coeffs(reduced)));
  CHECK(q_reduce(k4, reduced, "P1") == reduced);

  auto w5 = generate({Family::wheel, 5});
  auto expected = 4 * unit(w5, "P2") + unit(w5, "P4");
  CHECK(oracle::equivalent(w5, coeffs(vertex_sum(w5)), coeffs(expected)));
  CHECK(is_q_reduced(w5, expected, "P2"));
  CHECK(q_reduce(w5, vertex_sum(w5), "P2") == expected);

  auto script = q_reduce_with_script(w5, vertex_sum(w5), 1);
  CHECK(script.divisor == vertex_sum(w5) + laplacian_apply(w5, script.script));
}

TEST_CASE("q_reduce properties", "[divisor][property]") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing_support::random_connected_graph(rng, 1 + rng() % 6);
    auto d = testing_support::random_divisor(rng, g, static_cast<std::int64_t>(rng() % 9) - 3, 4);
    const VertexId q = rng() % g.vertex_count();
    const auto red = q_reduce_with_script(g, d, q);
    INFO("trial " << trial);
    CHECK(is_q_reduced(g, red.divisor, q));
    CHECK(red.divisor.degree() == d.degree());
    CHECK(red.divisor == d + laplacian_apply(g, red.script));
    CHECK(oracle::equivalent(g, coeffs(d), coeffs(red.divisor)));
    CHECK(q_reduce(g, red.divisor, q) == red.divisor);
    auto shifted = d + laplacian_apply(g, testing_support::random_function(rng, g, 3));
    CHECK(q_reduce(g, shifted, q) == red.divisor);
  }
}

TEST_CASE("linear equivalence", "[divisor]") {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto k = generate({Family::complete, n});
    CHECK(linearly_equivalent(k, vertex_sum(k), static_cast<std::int64_t>(n) * Divisor::unit(k, 0)));
  }
  auto house = generate({Family::house4});
  CHECK(linearly_equivalent(house, vertex_sum(house), vertex_sum(house)));
  CHECK_FALSE(linearly_equivalent(house, vertex_sum(house), Divisor(house)));
  CHECK_THROWS_AS(linearly_equivalent(house, vertex_sum(house), vertex_sum(generate({Family::cycle, 4}))), graph_error);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testing_support::random_connected_graph(rng, 2 + rng() % 5);
    auto a = testing_support::random_divisor(rng, g, 2);
    auto b = testing_support::random_divisor(rng, g, 2);
    CHECK(linearly_equivalent(g, a, b) == oracle::equivalent(g, coeffs(a), coeffs(b)));
  }
}

TEST_CASE("single vertices are never equivalent on 2-edge-connected graphs", "[divisor][property]") {
  for (auto fam : {GraphFamily{Family::complete, 5}, GraphFamily{Family::wheel, 6}, GraphFamily{Family::cycle, 5},
                   GraphFamily{Family::house4}}) {
    auto g = generate(fam);
    for (VertexId p = 0; p < g.vertex_count(); ++p)
      for (VertexId q = p + 1; q < g.vertex_count(); ++q)
        CHECK_FALSE(linearly_equivalent(g, Divisor::unit(g, p), Divisor::unit(g, q)));
  }
  // on a tree every two vertices are equivalent
  auto path = Graph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(linearly_equivalent(path, Divisor::unit(path, 0), Divisor::unit(path, 2)));
}

TEST_CASE("nonemptiness by reduction matches a direct search", "[divisor][property]") {
  std::mt19937 rng(99);
  int nonempty = 0, empty = 0;
  for (int trial = 0; trial < 250; ++trial) {
    auto g = testing_support::random_connected_graph(rng, 2 + rng() % 3, 0.5);
    auto d = testing_support::random_divisor(rng, g, static_cast<std::int64_t>(rng() % 5) - 1, 2);
    const bool by_reduction = linear_system_nonempty(g, d);
    const bool by_search = oracle::nonempty_by_search(g, coeffs(d), 12);
    INFO(to_text(d));
    CHECK(by_reduction == by_search);
    (by_reduction ? nonempty : empty)++;
  }
  CHECK(nonempty > 20);
  CHECK(empty > 20);
}

TEST_CASE("linear systems", "[divisor]") {
  auto k4 = generate({Family::complete, 4});
  auto d_minus_p1 = vertex_sum(k4) - unit(k4, "P1");
  auto system = linear_system(k4, d_minus_p1);
  // frozen from the brute-force enumeration: {3P1, P2+P3+P4}
  REQUIRE(system.size() == 2);
  CHECK(std::count(system.begin(), system.end(), 3 * unit(k4, "P1")) == 1);
  CHECK(std::count(system.begin(), system.end(), d_minus_p1) == 1);

  for (std::size_t n = 4; n <= 6; ++n) {
    auto k = generate({Family::complete, n});
    auto dp = static_cast<std::int64_t>(n - 2) * Divisor::unit(k, 0) - Divisor::unit(k, 1);
    CHECK(linear_system(k, dp).empty());
  }
  CHECK(linear_system(k4, Divisor(k4)) == std::vector<Divisor>{Divisor(k4)});
  CHECK(linear_system(k4, -unit(k4, "P1")).empty());

  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testing_support::random_connected_graph(rng, 2 + rng() % 4);
    auto d = testing_support::random_divisor(rng, g, rng() % 4);
    std::vector<std::vector<std::int64_t>> brute;
    oracle::effective(g.vertex_count(), d.degree(), [&](const oracle::Coeffs& e) {
      if (oracle::equivalent(g, e, coeffs(d))) brute.push_back(e);
    });
    std::vector<std::vector<std::int64_t>> fast;
    for (const auto& e : linear_system(g, d)) fast.push_back(coeffs(e));
    std::sort(brute.begin(), brute.end());
    std::sort(fast.begin(), fast.end());
    CHECK(fast == brute);
    CHECK((rank(g, d) == -1) == fast.empty());
  }
}

TEST_CASE("effective divisor enumeration", "[divisor]") {
  auto g = generate({Family::complete, 4});
  std::size_t visits = 0;
  for_each_effective(g, 3, [&](const Divisor& e) {
    CHECK(e.is_effective());
    CHECK(e.degree() == 3);
    ++visits;
    return true;
  });
  CHECK(visits == 20);
  CHECK(count_effective(4, 3) == 20);
  CHECK(count_effective(7, 0) == 1);
  CHECK(count_effective(3, -1) == 0);
  CHECK(count_effective(60, 1000) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("rank", "[divisor]") {
  for (std::size_t n = 4; n <= 6; ++n) {
    auto k = generate({Family::complete, n});
    auto d = vertex_sum(k);
    CHECK(rank(k, d) == 2);
    for (VertexId p = 0; p < n; ++p) {
      CHECK(rank(k, d - Divisor::unit(k, p)) == 1);
      for (VertexId q = 0; q < n; ++q) CHECK(rank(k, d - Divisor::unit(k, p) - Divisor::unit(k, q)) == 0);
    }
  }
  auto k4 = generate({Family::complete, 4});
  CHECK(rank(k4, -unit(k4, "P1")) == -1);
  auto w5 = generate({Family::wheel, 5});
  CHECK(rank(w5, vertex_sum(w5)) == 2);
  auto house = generate({Family::house4});
  CHECK(rank(house, vertex_sum(house)) == 2);
  CHECK(rank(house, canonical_divisor(house) - vertex_sum(house)) == -1);
  // C4: frozen from the search-based rank
  auto c4 = generate({Family::cycle, 4});
  CHECK(oracle::rank_by_search(c4, coeffs(vertex_sum(c4)), 4) == 3);
  CHECK(rank(c4, vertex_sum(c4)) == 3);
  CHECK(rank(house, Divisor(house)) == 0);
}

TEST_CASE("rank matches the search-based definition on tiny graphs", "[divisor][property]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testing_support::random_connected_graph(rng, 2 + rng() % 3, 0.6);
    auto d = testing_support::random_divisor(rng, g, static_cast<std::int64_t>(rng() % 5) - 1, 1);
    INFO(to_text(d));
    CHECK(rank(g, d) == oracle::rank_by_search(g, coeffs(d), 6));
  }
}

TEST_CASE("Riemann-Roch on random graphs", "[divisor][property]") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = testing_support::random_connected_graph(rng, 1 + rng() % 5);
    auto d = testing_support::random_divisor(rng, g, static_cast<std::int64_t>(rng() % 10) - 3);
    const long lhs = rank(g, d) - rank(g, canonical_divisor(g) - d);
    CHECK(lhs == d.degree() + 1 - genus(g));
  }
}

TEST_CASE("enumeration cap is a hard error", "[divisor]") {
  auto k6 = generate({Family::complete, 6});
  Limits tight;
  tight.enumeration_cap = 10;
  CHECK_THROWS_MATCHES(linear_system(k6, vertex_sum(k6), tight), graph_error,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("462")));
  CHECK_THROWS_MATCHES(rank(k6, vertex_sum(k6), tight), graph_error,
                       Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("EnumerationCapExceeded")));
}

#include <doctest.h>

#include "crownkernel/graph.hpp"
#include "helpers.hpp"

#include <random>

using namespace crownkernel;

TEST_CASE("parse smallest edge") {
  WeightedGraph g = parse_graph("p 2 1\ne 1 2\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.has_edge(1, 2));
  CHECK(g.weight(1) == 1);
}

TEST_CASE("parse weighted path") {
  WeightedGraph g = parse_graph("p 3 2\nv 2 5\ne 1 2\ne 2 3\n");
  CHECK(g.weight(2) == 5);
  CHECK(g.weight(1) == 1);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 3));
  CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("parse rejects self-loop with line number") {
  try {
    parse_graph("p 2 1\ne 1 1\n");
    FAIL("expected parse error");
  } catch (const ParseError &e) {
    CHECK(e.line == 2);
    CHECK(e.message == "self-loop");
  }
}

TEST_CASE("parse rejects duplicates, bad ids, bad weights") {
  CHECK_THROWS_AS(parse_graph("p 2 2\ne 1 2\ne 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2 1\ne 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2 0\nv 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2 0\nv 1 2\nv 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2 2\ne 1 2\n"), ParseError);
}

TEST_CASE("comments and blank lines ignored") {
  WeightedGraph g = parse_graph("c hello\n\np 2 1\nc mid\ne 1 2\n");
  CHECK(g.num_edges() == 1);
}

TEST_CASE("connected components order and content") {
  WeightedGraph p3 = path_graph(3);
  auto cl = connected_components(p3);
  REQUIRE(cl.components.size() == 1);
  CHECK(cl.components[0] == VertexSet{1, 2, 3});

  WeightedGraph two;
  two.add_vertex(1);
  two.add_vertex(2);
  auto cl2 = connected_components(two);
  REQUIRE(cl2.components.size() == 2);
  CHECK(cl2.components[0] == VertexSet{1});
  CHECK(cl2.components[1] == VertexSet{2});

  WeightedGraph k2k3 = disjoint_union(complete_graph(2), complete_graph(3));
  auto cl3 = connected_components(k2k3);
  REQUIRE(cl3.components.size() == 2);
  CHECK(cl3.components[0].size() == 2);
  CHECK(cl3.components[1].size() == 3);
}

TEST_CASE("drop_light_components") {
  WeightedGraph k2k3 = disjoint_union(complete_graph(2), complete_graph(3));
  WeightedGraph g = drop_light_components(k2k3, 2, SizeMode::Cardinality);
  CHECK(g.num_vertices() == 3);

  CHECK(drop_light_components(complete_graph(2), 2, SizeMode::Cardinality).empty());

  WeightedGraph p3 = path_graph(3);
  p3.set_weight(2, 5);
  WeightedGraph kept = drop_light_components(p3, 4, SizeMode::Weight);
  CHECK(kept == p3);

  // idempotent at fixed lambda
  WeightedGraph once = drop_light_components(k2k3, 2, SizeMode::Cardinality);
  CHECK(drop_light_components(once, 2, SizeMode::Cardinality) == once);
}

TEST_CASE("render/parse round-trip on random graphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    WeightedGraph g = generate_gnp({10, 0.3, 1, 4}, seed);
    WeightedGraph h = parse_graph(render_graph(g));
    CHECK(h == g);
  }
}

TEST_CASE("vertex ids stay stable under deletion") {
  WeightedGraph g = path_graph(5);
  g.erase_vertices({2});
  CHECK(g.has_vertex(5));
  CHECK_FALSE(g.has_vertex(2));
  auto cl = connected_components(g);
  REQUIRE(cl.components.size() == 2);
  CHECK(cl.components[0] == VertexSet{1});
  CHECK(cl.components[1] == VertexSet{3, 4, 5});
}

TEST_CASE("deletion keeps components a partition of the survivors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    WeightedGraph g = generate_gnp({11, 0.25, 1, 3}, rng());
    VertexSet del;
    for (Vertex v : g.vertices())
      if (rng() % 3 == 0) del.push_back(v);
    g.erase_vertices(del);
    auto cl = connected_components(g);
    VertexSet all;
    for (const auto &c : cl.components) {
      CHECK(sets_disjoint(all, c));
      all = set_union(all, c);
      CHECK(connected_components(g, c).components.size() == (c.empty() ? 0 : 1));
    }
    CHECK(all == g.vertices());
  }
}

TEST_CASE("generators are deterministic under a fixed seed") {
  CHECK(generate_gnp({8, 0.4, 1, 3}, 42) == generate_gnp({8, 0.4, 1, 3}, 42));
  CHECK(generate_disjoint_cliques({3, 4, 1, 1}, 7) == generate_disjoint_cliques({3, 4, 1, 1}, 7));
  CHECK(generate_gnp({0, 0.4, 1, 1}, 1).empty());
}

TEST_CASE("disjoint cliques shape") {
  WeightedGraph g = generate_disjoint_cliques({3, 4, 1, 1}, 7);
  CHECK(g.num_vertices() == 12);
  auto cl = connected_components(g);
  REQUIRE(cl.components.size() == 3);
  for (const auto &c : cl.components) CHECK(c.size() == 4);
}

TEST_CASE("line graphs are claw-free; line graph of K4 has 6 vertices") {
  // force the complete base graph by probability 1
  WeightedGraph lk4 = generate_clawfree_linegraph({4, 1.0}, 1);
  CHECK(lk4.num_vertices() == 6);
  CHECK_FALSE(has_induced_claw(lk4));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WeightedGraph g = generate_clawfree_linegraph({7, 0.5}, seed);
    CHECK_FALSE(has_induced_claw(g));
  }
  CHECK(has_induced_claw(star_graph(3)));
  CHECK_FALSE(has_induced_claw(cycle_graph(6)));
}

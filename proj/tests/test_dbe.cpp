#include <doctest.h>

#include "crownkernel/dbe.hpp"
#include "helpers.hpp"

#include <random>
#include <stdexcept>

using namespace crownkernel;

namespace {

struct SmallInstance {
  WeightedGraph g;
  VertexSet a_side, b_side;
  Demands demands;
  Weight y = 1;
};

// Bipartite-structured instance: heads 1..heads, component singletons 11, 12, ...
SmallInstance random_instance(std::mt19937_64 &rng, int max_heads, int max_comps) {
  SmallInstance si;
  int heads = 1 + static_cast<int>(rng() % max_heads);
  int comps = static_cast<int>(rng() % (max_comps + 1));
  for (int a = 1; a <= heads; ++a) {
    si.g.add_vertex(a, 1 + static_cast<Weight>(rng() % 3));
    si.a_side.push_back(a);
  }
  si.y = 1;
  for (int i = 0; i < comps; ++i) {
    Vertex q = 10 + i;
    Weight w = 1 + static_cast<Weight>(rng() % 3);
    si.g.add_vertex(q, w);
    si.y = std::max(si.y, w);
    si.b_side.push_back(q);
    std::uint64_t mask = rng() % ((1u << heads) - 1) + 1;
    for (int a = 1; a <= heads; ++a)
      if (mask & (1u << (a - 1))) si.g.add_edge(a, q);
  }
  for (int a = 1; a <= heads; ++a) si.demands.values[a] = 1 + static_cast<Weight>(rng() % 6);
  return si;
}

Weight frac_load(const WeightedGraph &g, const FractionalDbe &fr, Vertex a) {
  Weight m = g.weight(a);
  for (const auto &mm : fr.mass) {
    auto it = mm.find(a);
    if (it != mm.end()) m += it->second;
  }
  return m;
}

} // namespace

TEST_CASE("star: one head collects every singleton") {
  WeightedGraph g = star_graph(3); // center 1, leaves 2..4
  Dbe dbe = compute_dbe(g, {1}, {2, 3, 4}, Demands::uniform({1}, 2), 1);
  CHECK(dbe.a1 == VertexSet{1});
  CHECK(dbe.a2.empty());
  CHECK(dbe.assigned_to(1) == VertexSet{2, 3, 4});
  CHECK(dbe.load(g, 1) == 4);
  CHECK_FALSE(verify_dbe(g, {1}, {2, 3, 4}, dbe).has_value());
}

TEST_CASE("oversized demand lands the head in a2") {
  WeightedGraph g = star_graph(1);
  Dbe dbe = compute_dbe(g, {1}, {2}, Demands::uniform({1}, 10), 1);
  CHECK(dbe.a1.empty());
  CHECK(dbe.a2 == VertexSet{1});
  CHECK(dbe.load(g, 1) == 2); // 1 + 1 <= 10 + 0
  CHECK_FALSE(verify_dbe(g, {1}, {2}, dbe).has_value());
}

TEST_CASE("compute_dbe validates its preconditions") {
  WeightedGraph g = star_graph(2);
  g.add_vertex(9); // isolated vertex in B
  CHECK_THROWS_AS(compute_dbe(g, {1}, {2, 3, 9}, Demands::uniform({1}, 2), 1),
                  std::invalid_argument);
  WeightedGraph h = star_graph(1);
  h.set_weight(2, 5);
  CHECK_THROWS_AS(compute_dbe(h, {1}, {2}, Demands::uniform({1}, 2), 2), std::invalid_argument);
  CHECK_THROWS_AS(Demands::uniform({1}, 0), std::invalid_argument);
}

TEST_CASE("existence at the threshold: two heads sharing exactly their demands") {
  // a1, a2 with w=1, d=2; two shared singleton components
  WeightedGraph g;
  g.add_vertex(1);
  g.add_vertex(2);
  g.add_vertex(11);
  g.add_vertex(12);
  for (Vertex q : {11, 12}) {
    g.add_edge(1, q);
    g.add_edge(2, q);
  }
  Dbe dbe = compute_dbe(g, {1, 2}, {11, 12}, Demands::uniform({1, 2}, 2), 1);
  CHECK(dbe.a1 == VertexSet{1, 2});
  CHECK_FALSE(verify_dbe(g, {1, 2}, {11, 12}, dbe).has_value());
}

TEST_CASE("thm existence guarantee and checker on random bipartite instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    SmallInstance si = random_instance(rng, 4, 5);
    Dbe dbe = compute_dbe(si.g, si.a_side, si.b_side, si.demands, si.y);
    CHECK_FALSE(verify_dbe(si.g, si.a_side, si.b_side, dbe).has_value());

    // exhaustive subset check of the existence guarantee
    ComponentList comps = connected_components(si.g, si.b_side);
    bool threshold_met = false;
    int na = static_cast<int>(si.a_side.size());
    for (std::uint32_t m = 1; m < (1u << na); ++m) {
      VertexSet aa;
      Weight demand_sum = 0;
      for (int i = 0; i < na; ++i)
        if (m & (1u << i)) {
          aa.push_back(si.a_side[static_cast<std::size_t>(i)]);
          demand_sum += si.demands.at(si.a_side[static_cast<std::size_t>(i)]);
        }
      Weight supply = si.g.weight_of(aa);
      for (const auto &q : comps.components)
        if (set_is_subset(set_intersection(si.g.neighborhood(q), si.a_side), aa))
          supply += si.g.weight_of(q);
      if (supply >= demand_sum) threshold_met = true;
    }
    if (threshold_met) CHECK_FALSE(dbe.a1.empty());
  }
}

TEST_CASE("rounding keeps every per-head change within y-1") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    SmallInstance si = random_instance(rng, 4, 5);
    FractionalDbe fr = compute_fractional_dbe(si.g, si.a_side, si.b_side, si.demands, si.y);
    Dbe dbe = round_fractional(si.g, fr);
    for (Vertex a : si.a_side) {
      Weight diff = dbe.load(si.g, a) - frac_load(si.g, fr, a);
      CHECK(diff <= si.y - 1);
      CHECK(diff >= -(si.y - 1));
    }
  }
}

TEST_CASE("round_fractional hand cases") {
  SUBCASE("already integral and whole: zero loss") {
    WeightedGraph g = star_graph(1);
    FractionalDbe fr;
    fr.a1 = {1};
    fr.y = 1;
    fr.demands = Demands::uniform({1}, 2);
    fr.components = {{2}};
    fr.mass = {{{1, 1}}};
    Dbe dbe = round_fractional(g, fr);
    CHECK(dbe.assignment == std::vector<Vertex>{1});
    CHECK(dbe.load(g, 1) == 2);
  }
  SUBCASE("a split component goes wholly to one head") {
    // component {3,4} of weight 2 shared by heads 1 and 2
    WeightedGraph g;
    for (Vertex v : {1, 2, 3, 4}) g.add_vertex(v);
    g.add_edge(3, 4);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    FractionalDbe fr;
    fr.a1 = {1, 2};
    fr.y = 2;
    fr.demands = Demands::uniform({1, 2}, 2);
    fr.components = {{3, 4}};
    fr.mass = {{{1, 1}, {2, 1}}};
    Dbe dbe = round_fractional(g, fr);
    Vertex owner = dbe.assignment[0];
    CHECK((owner == 1 || owner == 2));
    Vertex loser = owner == 1 ? 2 : 1;
    CHECK(g.weight(loser) + 0 >= frac_load(g, fr, loser) - (fr.y - 1));
  }
  SUBCASE("empty B yields an empty assignment") {
    WeightedGraph g = star_graph(0);
    FractionalDbe fr;
    fr.a2 = {1};
    fr.y = 1;
    fr.demands = Demands::uniform({1}, 3);
    Dbe dbe = round_fractional(g, fr);
    CHECK(dbe.assignment.empty());
  }
}

TEST_CASE("extract_crown") {
  WeightedGraph g = star_graph(3);
  Dbe dbe = compute_dbe(g, {1}, {2, 3, 4}, Demands::uniform({1}, 2), 1);
  auto cd = extract_crown(dbe);
  REQUIRE(cd.has_value());
  CHECK(cd->head == VertexSet{1});
  CHECK(cd->crown == VertexSet{2, 3, 4});
  // N(C) is contained in H
  CHECK(set_is_subset(g.neighborhood(cd->crown), cd->head));
  for (Vertex h : cd->head)
    CHECK(g.weight(h) + g.weight_of(cd->crown) > cd->x);

  Dbe starved = compute_dbe(g, {1}, {2, 3, 4}, Demands::uniform({1}, 30), 1);
  CHECK(starved.a1.empty());
  CHECK_FALSE(extract_crown(starved).has_value());
}

TEST_CASE("extract_crown keeps two disjoint head stars") {
  WeightedGraph g;
  for (Vertex v : {1, 2, 11, 12, 13, 14}) g.add_vertex(v);
  g.add_edge(1, 11);
  g.add_edge(1, 12);
  g.add_edge(2, 13);
  g.add_edge(2, 14);
  Dbe dbe = compute_dbe(g, {1, 2}, {11, 12, 13, 14}, Demands::uniform({1, 2}, 2), 1);
  CHECK(dbe.a1 == VertexSet{1, 2});
  auto cd = extract_crown(dbe);
  REQUIRE(cd.has_value());
  CHECK(cd->crown == VertexSet{11, 12, 13, 14});
  // single-valued assignment: preimages are disjoint
  CHECK(cd->crown_components.size() == 4);
}

TEST_CASE("verify_dbe flags hand-built violations") {
  WeightedGraph g;
  for (Vertex v : {1, 2, 11, 12}) g.add_vertex(v);
  g.add_edge(1, 11);
  g.add_edge(2, 12);
  Dbe dbe;
  dbe.y = 1;
  dbe.demands = Demands::uniform({1, 2}, 2);
  dbe.components = {{11}, {12}};

  SUBCASE("assignment outside the neighbourhood trips condition 2") {
    dbe.a1 = {1, 2};
    dbe.assignment = {2, 1}; // swapped: 2 is not adjacent to 11
    CHECK(verify_dbe(g, {1, 2}, {11, 12}, dbe) == 2);
  }
  SUBCASE("crown of a1 touching a2 trips condition 3") {
    dbe.a1 = {1};
    dbe.a2 = {2};
    g.add_edge(2, 11); // 11 assigned to a1 head but adjacent to a2
    dbe.assignment = {1, 2};
    CHECK(verify_dbe(g, {1, 2}, {11, 12}, dbe) == 3);
  }
  SUBCASE("component heavier than y trips condition 1") {
    dbe.a1 = {1, 2};
    dbe.assignment = {1, 2};
    g.set_weight(11, 5);
    CHECK(verify_dbe(g, {1, 2}, {11, 12}, dbe) == 1);
  }
  SUBCASE("starved a1 head trips condition 4") {
    Dbe d2;
    d2.y = 1;
    d2.demands = Demands::uniform({1, 2}, 4);
    d2.components = {{11}, {12}};
    d2.a1 = {1, 2};
    d2.assignment = {1, 2};
    CHECK(verify_dbe(g, {1, 2}, {11, 12}, d2) == 4);
  }
}

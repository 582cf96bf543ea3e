#include <doctest.h>

#include "crownkernel/kernels.hpp"
#include "crownkernel/oracle.hpp"
#include "helpers.hpp"

#include <random>
#include <stdexcept>

using namespace crownkernel;

namespace {

bool oracle_agrees_vi(const ViInstance &inst, const KernelOutcome &out) {
  bool orig = brute_vi(inst.graph, inst.p).yes;
  switch (out.verdict) {
  case Verdict::DecidedYes:
    return orig;
  case Verdict::DecidedNo:
    return !orig;
  default:
    return orig == brute_vi(out.reduced_graph, out.reduced_budget).yes;
  }
}

bool oracle_agrees_coc(const CocInstance &inst, const KernelOutcome &out, bool weighted) {
  auto solve = [&](const WeightedGraph &g, Weight k) {
    return weighted ? brute_wcoc(g, k, inst.w_cap).yes : brute_coc(g, k, inst.w_cap).yes;
  };
  bool orig = solve(inst.graph, inst.k);
  switch (out.verdict) {
  case Verdict::DecidedYes:
    return orig;
  case Verdict::DecidedNo:
    return !orig;
  default:
    return orig == solve(out.reduced_graph, out.reduced_budget);
  }
}

} // namespace

TEST_CASE("VI: packing refutation on p+1 disjoint cliques of size p+1") {
  for (Weight p : {2, 3}) {
    WeightedGraph g = generate_disjoint_cliques(
        {static_cast<int>(p + 1), static_cast<int>(p + 1), 1, 1}, 1);
    KernelOutcome out = kernelize_vi({g, p});
    CHECK(out.verdict == Verdict::DecidedNo);
    CHECK_FALSE(brute_vi(g, p, 16).yes);
  }
}

TEST_CASE("VI: small instances with no verdict report already-small") {
  WeightedGraph g = cycle_graph(8);
  KernelOutcome out = kernelize_vi({g, 5}); // integrity of C8 is 5
  CHECK(out.verdict == Verdict::AlreadySmall);
  CHECK(out.reduced_graph == g);
  // the packing sweep still refutes small no-instances, K4 at p=2 included
  CHECK(kernelize_vi({g, 3}).verdict == Verdict::DecidedNo);
  CHECK(kernelize_vi({complete_graph(4), 2}).verdict == Verdict::DecidedNo);
}

TEST_CASE("VI: equivalence against the oracle on random instances") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    WeightedGraph g = generate_gnp({4 + static_cast<int>(rng() % 9), 0.25, 1, 1}, rng());
    Weight p = 1 + static_cast<Weight>(rng() % 4);
    ViInstance inst{g, p};
    KernelOutcome out = kernelize_vi(inst);
    CHECK(oracle_agrees_vi(inst, out));
    if (out.verdict == Verdict::AlreadySmall || out.verdict == Verdict::Reduced)
      CHECK(static_cast<Weight>(out.reduced_graph.num_vertices()) <=
            3 * out.reduced_budget * out.reduced_budget);
    if (out.lambda_lb) {
      OracleResult r = brute_vi(g, p);
      if (r.yes) CHECK(*out.lambda_lb <= *r.p_ell);
    }
  }
}

TEST_CASE("wVI: agrees with VI verdicts on unit weights") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 80; ++trial) {
    WeightedGraph g = generate_gnp({4 + static_cast<int>(rng() % 7), 0.3, 1, 1}, rng());
    Weight p = 1 + static_cast<Weight>(rng() % 4);
    KernelOutcome a = kernelize_wvi({g, p});
    bool yes = brute_vi(g, p).yes;
    switch (a.verdict) {
    case Verdict::DecidedYes:
      CHECK(yes);
      break;
    case Verdict::DecidedNo:
      CHECK_FALSE(yes);
      break;
    default:
      CHECK(yes == brute_wvi(a.reduced_graph, a.reduced_budget).yes);
    }
  }
}

TEST_CASE("wVI: equivalence and reduction records on weighted instances") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 150; ++trial) {
    WeightedGraph g = generate_gnp({4 + static_cast<int>(rng() % 7), 0.3, 1, 3}, rng());
    Weight p = 2 + static_cast<Weight>(rng() % 6);
    WviInstance inst{g, p};
    KernelOutcome out = kernelize_wvi(inst);
    bool orig = brute_wvi(g, p).yes;
    switch (out.verdict) {
    case Verdict::DecidedYes:
      CHECK(orig);
      break;
    case Verdict::DecidedNo:
      CHECK_FALSE(orig);
      break;
    default:
      CHECK(orig == brute_wvi(out.reduced_graph, out.reduced_budget).yes);
    }
    // replaying the certificate reproduces the kernel
    if (out.verdict == Verdict::Reduced || out.verdict == Verdict::AlreadySmall) {
      WeightedGraph replay = g;
      for (const auto &rec : out.certificate)
        replay.erase_vertices(set_union(rec.head, rec.crown));
      CHECK(replay == out.reduced_graph);
    }
  }
}

TEST_CASE("wCOC: hand cases") {
  SUBCASE("k+1 disjoint heavy stars refute") {
    WeightedGraph g = disjoint_union(star_graph(3), star_graph(3));
    KernelOutcome out = kernelize_wcoc({g, 1, 2});
    CHECK(out.verdict == Verdict::DecidedNo);
    CHECK_FALSE(brute_wcoc(g, 1, 2).yes);
  }
  SUBCASE("below the weight gate reports already-small") {
    WeightedGraph g = cycle_graph(6);
    KernelOutcome out = kernelize_wcoc({g, 2, 2});
    CHECK(out.verdict == Verdict::AlreadySmall);
  }
}

TEST_CASE("wCOC: equivalence against the oracle") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 150; ++trial) {
    WeightedGraph g = generate_gnp({4 + static_cast<int>(rng() % 9), 0.3, 1, 3}, rng());
    Weight k = static_cast<Weight>(rng() % 5);
    Weight w_cap = 1 + static_cast<Weight>(rng() % 3);
    CocInstance inst{g, k, w_cap};
    KernelOutcome out = kernelize_wcoc(inst);
    CHECK(oracle_agrees_coc(inst, out, true));
  }
}

TEST_CASE("wCOC at W=1 and unit weights matches the vertex-cover oracle") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 80; ++trial) {
    WeightedGraph g = generate_gnp({4 + static_cast<int>(rng() % 7), 0.35, 1, 1}, rng());
    Weight k = static_cast<Weight>(rng() % 5);
    CocInstance inst{g, k, 1};
    KernelOutcome out = kernelize_wcoc(inst);
    CHECK(oracle_agrees_coc(inst, out, false));
  }
}

TEST_CASE("COC FPT: hand cases") {
  SUBCASE("K_{1,3}, k=1, W=1 reduces to an empty yes") {
    WeightedGraph g = star_graph(3);
    KernelOutcome out = kernelize_coc_fpt({g, 1, 1});
    REQUIRE(out.verdict == Verdict::Reduced);
    CHECK(out.reduced_graph.empty());
    CHECK(out.reduced_budget == 0);
    REQUIRE(out.certificate.size() == 1);
    CHECK(out.certificate[0].head == VertexSet{1});
    CHECK(out.certificate[0].crown == VertexSet{2, 3, 4});
  }
  SUBCASE("two disjoint triangles with k=1 are a no") {
    WeightedGraph g = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(kernelize_coc_fpt({g, 1, 1}).verdict == Verdict::DecidedNo);
  }
}

TEST_CASE("COC FPT: equivalence and node bound on random instances") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 120; ++trial) {
    WeightedGraph g = generate_gnp({4 + static_cast<int>(rng() % 9), 0.3, 1, 1}, rng());
    Weight k = static_cast<Weight>(rng() % 5);
    Weight w_cap = 1 + static_cast<Weight>(rng() % 3);
    CocInstance inst{g, k, w_cap};
    KernelOutcome out = kernelize_coc_fpt(inst);
    CHECK(oracle_agrees_coc(inst, out, false));
    if (out.verdict == Verdict::AlreadySmall || out.verdict == Verdict::Reduced)
      CHECK(static_cast<Weight>(out.reduced_graph.num_vertices()) <=
            2 * out.reduced_budget * inst.w_cap);
    // node count within the bounded-search-tree envelope
    long long bound = 1, power = 1;
    for (long long d = 1; d <= out.depth_cap; ++d) {
      power *= std::max<long long>(out.max_branching, 1);
      bound += power;
    }
    if (out.search_nodes > 0) CHECK(out.search_nodes <= std::max<long long>(bound, 1) *
                                        (1 + static_cast<long long>(out.certificate.size())));
  }
}

TEST_CASE("COC poly (matching-seeded): hand cases") {
  SUBCASE("K_{1,3}, k=1 reduces to empty") {
    KernelOutcome out = kernelize_coc2({star_graph(3), 1, 1}, Coc2Mode::MatchingSeeded);
    REQUIRE(out.verdict == Verdict::Reduced);
    CHECK(out.reduced_graph.empty());
    CHECK(out.reduced_budget == 0);
  }
  SUBCASE("C5 with k=2 is a no") {
    KernelOutcome out = kernelize_coc2({cycle_graph(5), 2, 1}, Coc2Mode::MatchingSeeded);
    CHECK(out.verdict == Verdict::DecidedNo);
    CHECK_FALSE(brute_coc(cycle_graph(5), 2, 1).yes);
  }
  SUBCASE("mode preconditions") {
    CHECK_THROWS_AS(kernelize_coc2({star_graph(3), 1, 2}, Coc2Mode::MatchingSeeded),
                    std::invalid_argument);
    CHECK_THROWS_AS(kernelize_coc2({star_graph(3), 1, 1}, Coc2Mode::ClawFree),
                    std::invalid_argument);
  }
}

TEST_CASE("COC poly (matching-seeded): equivalence and 2k bound") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 150; ++trial) {
    WeightedGraph g = generate_gnp({4 + static_cast<int>(rng() % 9), 0.3, 1, 1}, rng());
    Weight k = static_cast<Weight>(rng() % 5);
    CocInstance inst{g, k, 1};
    KernelOutcome out = kernelize_coc2(inst, Coc2Mode::MatchingSeeded);
    CHECK(oracle_agrees_coc(inst, out, false));
    if (out.verdict == Verdict::AlreadySmall || out.verdict == Verdict::Reduced)
      CHECK(static_cast<Weight>(out.reduced_graph.num_vertices()) <= 2 * out.reduced_budget);
  }
}

TEST_CASE("COC poly (claw-free): equivalence on line graphs") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 80; ++trial) {
    WeightedGraph g = generate_clawfree_linegraph({5 + static_cast<int>(rng() % 3), 0.5}, rng());
    if (g.num_vertices() > 12) continue;
    Weight k = static_cast<Weight>(rng() % 4);
    Weight w_cap = 1 + static_cast<Weight>(rng() % 3);
    CocInstance inst{g, k, w_cap};
    KernelOutcome out = kernelize_coc2(inst, Coc2Mode::ClawFree);
    CHECK(oracle_agrees_coc(inst, out, false));
  }
}

TEST_CASE("find_reducible_structure") {
  SUBCASE("star with empty working set") {
    WeightedGraph g = star_graph(3);
    Bcd bcd = compute_bcd(g, 1);
    auto red = find_reducible_structure(g, {}, bcd, 1);
    REQUIRE(red.has_value());
    CHECK(red->first == VertexSet{1});
    CHECK(red->second == VertexSet{2, 3, 4});
  }
  SUBCASE("empty B yields none") {
    WeightedGraph g = complete_graph(4); // one component, no crown at W=1
    Bcd bcd = compute_bcd(g, 1);
    if (bcd.crown.empty()) CHECK_FALSE(find_reducible_structure(g, {}, bcd, 1).has_value());
  }
  SUBCASE("slack supply yields none") {
    // two heads sharing one singleton: nobody reaches 2W
    WeightedGraph g = path_graph(3); // 1-2-3: heads {1,3}, B={2}
    Bcd bcd;
    bcd.lambda = 1;
    bcd.head = {1, 3};
    bcd.crown = {2};
    bcd.crown_components = {{2}};
    bcd.assignment = {1};
    CHECK_FALSE(find_reducible_structure(g, {}, bcd, 1).has_value());
  }
}

TEST_CASE("unique_w_separator") {
  CHECK(unique_w_separator(path_graph(5), 2) == 3);
  CHECK(unique_w_separator(star_graph(4), 1) == 1);
  CHECK_FALSE(unique_w_separator(path_graph(4), 2).has_value()); // |V| = 4 = 2W gate
  // exhaustive confirmation of uniqueness on random connected graphs
  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 100; ++trial) {
    WeightedGraph g = generate_gnp({5 + static_cast<int>(rng() % 6), 0.35, 1, 1}, rng());
    auto comps = connected_components(g).components;
    for (const auto &c : comps) {
      WeightedGraph sub = g.induced(c);
      for (Weight w_cap : {1, 2}) {
        auto sep = unique_w_separator(sub, w_cap);
        if (!sep) continue;
        int count = 0;
        for (Vertex v : sub.vertices()) {
          bool ok = true;
          for (const auto &cc :
               connected_components(sub, set_difference(sub.vertices(), {v})).components)
            if (static_cast<Weight>(cc.size()) > w_cap) ok = false;
          if (ok) ++count;
        }
        CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("compute_r_prime") {
  SUBCASE("P5 part with W=2") {
    WeightedGraph g = path_graph(5);
    Bcd bcd;
    bcd.lambda = 2;
    bcd.body_parts = {{1, 2, 3, 4, 5}};
    auto [rp, srp] = compute_r_prime(g, bcd, 2);
    REQUIRE(rp.size() == 1);
    CHECK(srp == VertexSet{3});
  }
  SUBCASE("K3 part is too small") {
    WeightedGraph g = complete_graph(3);
    Bcd bcd;
    bcd.lambda = 2;
    bcd.body_parts = {{1, 2, 3}};
    auto [rp, srp] = compute_r_prime(g, bcd, 2);
    CHECK(rp.empty());
    CHECK(srp.empty());
  }
  SUBCASE("empty body") {
    Bcd bcd;
    auto [rp, srp] = compute_r_prime(path_graph(2), bcd, 1);
    CHECK(rp.empty());
    CHECK(srp.empty());
  }
}

TEST_CASE("apply_reduction") {
  WeightedGraph g = star_graph(3);
  CocInstance inst{g, 1, 1};
  CocInstance red = apply_reduction(inst, {1}, {2, 3, 4}, 1);
  CHECK(red.graph.empty());
  CHECK(red.k == 0);
  // separation violations are rejected
  WeightedGraph h = path_graph(4);
  ViInstance vi{h, 3};
  CHECK_THROWS_AS(apply_reduction(vi, {2}, {3}, 1), std::invalid_argument);
  ViInstance ok = apply_reduction(vi, {2, 4}, {3}, 2);
  CHECK(ok.graph.vertices() == VertexSet{1});
  CHECK(ok.p == 1);
}

TEST_CASE("reduction safety: every certificate record preserves the answer") {
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 100; ++trial) {
    WeightedGraph g = generate_gnp({5 + static_cast<int>(rng() % 7), 0.3, 1, 1}, rng());
    Weight k = static_cast<Weight>(rng() % 4);
    Weight w_cap = 1 + static_cast<Weight>(rng() % 2);
    CocInstance inst{g, k, w_cap};
    KernelOutcome out = kernelize_coc_fpt(inst);
    // replay record by record; answers must stay equal throughout
    CocInstance cur = inst;
    bool ans = brute_coc(cur.graph, cur.k, cur.w_cap).yes;
    for (const auto &rec : out.certificate) {
      cur = apply_reduction(cur, rec.head, rec.crown, rec.decrement);
      CHECK(brute_coc(cur.graph, cur.k, cur.w_cap).yes == ans);
    }
  }
}

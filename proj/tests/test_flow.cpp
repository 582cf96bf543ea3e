#include <doctest.h>

#include "crownkernel/flow.hpp"
#include "helpers.hpp"

#include <random>
#include <stdexcept>

using namespace crownkernel;

namespace {

// Independent oracle: minimum s-t cut by exhaustive enumeration over node
// sides (s on the left, t on the right).
long long brute_min_cut(int n_nodes, const std::vector<std::tuple<int, int, long long>> &arcs) {
  long long best = -1;
  int free_nodes = n_nodes - 2;
  for (std::uint32_t m = 0; m < (1u << free_nodes); ++m) {
    auto side = [&](int v) {
      if (v == FlowNetwork::kSource) return 0;
      if (v == FlowNetwork::kSink) return 1;
      return (m >> (v - 2)) & 1u ? 1 : 0;
    };
    long long cut = 0;
    for (auto &[from, to, cap] : arcs)
      if (side(from) == 0 && side(to) == 1) cut += cap;
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

} // namespace

TEST_CASE("max flow on hand examples") {
  SUBCASE("single path value from the sink arc") {
    FlowNetwork net;
    int q = net.add_node(), a = net.add_node();
    net.add_arc(FlowNetwork::kSource, q, 3);
    net.add_arc(q, a, 3);
    net.add_arc(a, FlowNetwork::kSink, 1);
    CHECK(net.max_flow() == 1);
  }
  SUBCASE("no arcs") {
    FlowNetwork net;
    CHECK(net.max_flow() == 0);
  }
  SUBCASE("two parallel unit paths") {
    FlowNetwork net;
    int x = net.add_node(), y = net.add_node();
    net.add_arc(FlowNetwork::kSource, x, 1);
    net.add_arc(x, FlowNetwork::kSink, 1);
    net.add_arc(FlowNetwork::kSource, y, 1);
    net.add_arc(y, FlowNetwork::kSink, 1);
    CHECK(net.max_flow() == 2);
  }
}

TEST_CASE("max flow equals exhaustive min cut on random small networks") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int extra = 1 + static_cast<int>(rng() % 9); // <= 11 nodes
    FlowNetwork net;
    std::vector<std::tuple<int, int, long long>> arcs;
    for (int i = 0; i < extra; ++i) net.add_node();
    int n = net.num_nodes();
    int n_arcs = 1 + static_cast<int>(rng() % 14);
    for (int i = 0; i < n_arcs; ++i) {
      int from = static_cast<int>(rng() % n);
      int to = static_cast<int>(rng() % n);
      if (from == to || to == FlowNetwork::kSource || from == FlowNetwork::kSink) continue;
      long long cap = static_cast<long long>(rng() % 5);
      net.add_arc(from, to, cap);
      arcs.emplace_back(from, to, cap);
    }
    CHECK(net.max_flow() == brute_min_cut(n, arcs));
  }
}

TEST_CASE("flow stays integral and conserving") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    FlowNetwork net;
    int a = net.add_node(), b = net.add_node(), c = net.add_node();
    std::vector<int> arcs;
    arcs.push_back(net.add_arc(FlowNetwork::kSource, a, static_cast<long long>(rng() % 4 + 1)));
    arcs.push_back(net.add_arc(FlowNetwork::kSource, b, static_cast<long long>(rng() % 4)));
    arcs.push_back(net.add_arc(a, c, static_cast<long long>(rng() % 4)));
    arcs.push_back(net.add_arc(b, c, static_cast<long long>(rng() % 4)));
    arcs.push_back(net.add_arc(a, b, static_cast<long long>(rng() % 2)));
    arcs.push_back(net.add_arc(c, FlowNetwork::kSink, static_cast<long long>(rng() % 6)));
    net.max_flow();
    std::vector<long long> balance(static_cast<std::size_t>(net.num_nodes()), 0);
    for (int e : arcs) {
      long long f = net.flow_on(e);
      CHECK(f >= 0);
      CHECK(f <= net.capacity_of(e));
    }
  }
}

TEST_CASE("dbe network construction per the capacity rules") {
  SUBCASE("one component adjacent to one head") {
    // Q (w=3) adjacent to a (w=1, d=2): s->Q cap 3, Q->a cap 3, a->t cap 1
    VertexSet a_side{1};
    std::vector<VertexSet> comps{{2, 3, 4}};
    std::vector<VertexSet> nbrs{{1}};
    std::vector<Weight> cw{3};
    std::map<Vertex, Weight> hw{{1, 1}};
    std::map<Vertex, Weight> demands{{1, 2}};
    DbeNetwork nw = build_dbe_network(a_side, comps, nbrs, cw, hw, demands);
    CHECK(nw.net.capacity_of(nw.source_arcs[0]) == 3);
    CHECK(nw.net.capacity_of(nw.comp_arcs[0][0]) == 3);
    CHECK(nw.net.capacity_of(nw.sink_arcs.at(1)) == 1);
    CHECK(nw.net.max_flow() == 1);
  }
  SUBCASE("empty component list leaves only sink arcs") {
    VertexSet a_side{1, 2};
    std::map<Vertex, Weight> hw{{1, 1}, {2, 2}};
    std::map<Vertex, Weight> demands{{1, 5}, {2, 1}};
    DbeNetwork nw = build_dbe_network(a_side, {}, {}, {}, hw, demands);
    CHECK(nw.net.num_arcs() == 2);
    CHECK(nw.net.capacity_of(nw.sink_arcs.at(1)) == 4);
    CHECK(nw.net.capacity_of(nw.sink_arcs.at(2)) == 0); // d <= w clamps to zero
  }
  SUBCASE("component with empty neighborhood is rejected") {
    VertexSet a_side{1};
    std::map<Vertex, Weight> hw{{1, 1}};
    std::map<Vertex, Weight> demands{{1, 2}};
    CHECK_THROWS_AS(
        build_dbe_network(a_side, {{5}}, {{}}, {1}, hw, demands), std::invalid_argument);
  }
}

#pragma once

#include "crownkernel/graph.hpp"

#include <map>
#include <vector>

namespace crownkernel {

// Integral max-flow network. Node 0 is the source, node 1 the sink; the
// caller labels the rest. Arc order is fixed at insertion time, so flows
// are reproducible.
class FlowNetwork {
public:
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  FlowNetwork() : first_arc_(2, -1) {}

  int add_node();
  int num_nodes() const { return static_cast<int>(first_arc_.size()); }
  // Returns the arc index; the reverse arc is index^1.
  int add_arc(int from, int to, long long capacity);

  long long max_flow();

  long long flow_on(int arc) const;
  long long capacity_of(int arc) const { return arcs_[static_cast<std::size_t>(arc)].cap0; }
  int arc_to(int arc) const { return arcs_[static_cast<std::size_t>(arc)].to; }
  int num_arcs() const { return static_cast<int>(arcs_.size()) / 2; }

  // Nodes with a residual path to the sink (used to split heads after a
  // max-flow run).
  std::vector<bool> residual_reaches_sink() const;

private:
  struct Arc {
    int to;
    int next;       // next arc out of the same tail
    long long cap;  // residual capacity
    long long cap0; // original capacity (0 for reverse arcs)
  };

  bool bfs_levels();
  long long dfs_push(int v, long long limit);

  std::vector<Arc> arcs_;
  std::vector<int> first_arc_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// DBE flow network: source -> component nodes -> head nodes -> sink.
// Arcs: s -> Q with capacity w(Q); Q -> a with capacity w(Q) iff a in N(Q);
// a -> t with capacity max(0, d_a - w(a)).
struct DbeNetwork {
  FlowNetwork net;
  std::vector<int> source_arcs;                // per component
  std::vector<std::vector<int>> comp_arcs;     // per component: arcs into heads
  std::vector<std::vector<Vertex>> comp_heads; // per component: head of each arc
  std::map<Vertex, int> sink_arcs;             // per head
  std::map<Vertex, int> head_nodes;
};

DbeNetwork build_dbe_network(const VertexSet &a_side,
                             const std::vector<VertexSet> &components,
                             const std::vector<VertexSet> &comp_neighbors,
                             const std::vector<Weight> &comp_weights,
                             const std::map<Vertex, Weight> &head_weights,
                             const std::map<Vertex, Weight> &demands);

// Convenience overload deriving neighborhoods and weights from the graph.
DbeNetwork build_dbe_network(const WeightedGraph &g, const VertexSet &a_side,
                             const ComponentList &components,
                             const std::map<Vertex, Weight> &demands);

} // namespace crownkernel

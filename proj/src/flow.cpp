#include "crownkernel/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace crownkernel {

int FlowNetwork::add_node() {
  first_arc_.push_back(-1);
  return num_nodes() - 1;
}

int FlowNetwork::add_arc(int from, int to, long long capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  int idx = static_cast<int>(arcs_.size());
  arcs_.push_back({to, first_arc_[static_cast<std::size_t>(from)], capacity, capacity});
  first_arc_[static_cast<std::size_t>(from)] = idx;
  arcs_.push_back({from, first_arc_[static_cast<std::size_t>(to)], 0, 0});
  first_arc_[static_cast<std::size_t>(to)] = idx + 1;
  return idx;
}

bool FlowNetwork::bfs_levels() {
  level_.assign(static_cast<std::size_t>(num_nodes()), -1);
  std::deque<int> q{kSource};
  level_[kSource] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e = first_arc_[static_cast<std::size_t>(v)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      const Arc &a = arcs_[static_cast<std::size_t>(e)];
      if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] == -1) {
        level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
        q.push_back(a.to);
      }
    }
  }
  return level_[kSink] != -1;
}

long long FlowNetwork::dfs_push(int v, long long limit) {
  if (v == kSink || limit == 0) return limit;
  long long pushed = 0;
  for (int &e = iter_[static_cast<std::size_t>(v)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
    Arc &a = arcs_[static_cast<std::size_t>(e)];
    if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] == level_[static_cast<std::size_t>(v)] + 1) {
      long long got = dfs_push(a.to, std::min(limit - pushed, a.cap));
      if (got > 0) {
        a.cap -= got;
        arcs_[static_cast<std::size_t>(e ^ 1)].cap += got;
        pushed += got;
        if (pushed == limit) return pushed;
      }
    }
  }
  level_[static_cast<std::size_t>(v)] = -1;
  return pushed;
}

long long FlowNetwork::max_flow() {
  long long total = 0;
  while (bfs_levels()) {
    iter_ = first_arc_;
    total += dfs_push(kSource, std::numeric_limits<long long>::max());
  }
  return total;
}

long long FlowNetwork::flow_on(int arc) const {
  const Arc &a = arcs_[static_cast<std::size_t>(arc)];
  return a.cap0 - a.cap;
}

std::vector<bool> FlowNetwork::residual_reaches_sink() const {
  // Reverse BFS from the sink over residual arcs: x reaches t iff some
  // residual arc x->y exists with y reaching t.
  std::vector<bool> reaches(static_cast<std::size_t>(num_nodes()), false);
  reaches[kSink] = true;
  std::deque<int> q{kSink};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    // arcs INTO v with residual capacity: for each arc e out of v, the
    // paired arc e^1 points back; residual arc (a.to -> v) exists iff
    // arcs_[e^1].cap > 0.
    for (int e = first_arc_[static_cast<std::size_t>(v)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      const Arc &a = arcs_[static_cast<std::size_t>(e)];
      if (arcs_[static_cast<std::size_t>(e ^ 1)].cap > 0 && !reaches[static_cast<std::size_t>(a.to)]) {
        reaches[static_cast<std::size_t>(a.to)] = true;
        q.push_back(a.to);
      }
    }
  }
  return reaches;
}

DbeNetwork build_dbe_network(const VertexSet &a_side,
                             const std::vector<VertexSet> &components,
                             const std::vector<VertexSet> &comp_neighbors,
                             const std::vector<Weight> &comp_weights,
                             const std::map<Vertex, Weight> &head_weights,
                             const std::map<Vertex, Weight> &demands) {
  if (components.size() != comp_neighbors.size() || components.size() != comp_weights.size())
    throw std::invalid_argument("component lists out of sync");
  DbeNetwork out;
  for (Vertex a : a_side) {
    out.head_nodes[a] = out.net.add_node();
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    const VertexSet &nbrs = comp_neighbors[i];
    VertexSet heads = set_intersection(nbrs, a_side);
    if (heads.empty())
      throw std::invalid_argument("component with empty neighborhood in A");
    int qn = out.net.add_node();
    out.source_arcs.push_back(out.net.add_arc(FlowNetwork::kSource, qn, comp_weights[i]));
    std::vector<int> arcs;
    std::vector<Vertex> arc_heads;
    for (Vertex a : heads) {
      arcs.push_back(out.net.add_arc(qn, out.head_nodes.at(a), comp_weights[i]));
      arc_heads.push_back(a);
    }
    out.comp_arcs.push_back(std::move(arcs));
    out.comp_heads.push_back(std::move(arc_heads));
  }
  for (Vertex a : a_side) {
    auto dit = demands.find(a);
    if (dit == demands.end()) throw std::invalid_argument("missing demand for head");
    if (dit->second < 1) throw std::invalid_argument("demand must be positive");
    Weight wa = head_weights.at(a);
    Weight cap = std::max<Weight>(0, dit->second - wa);
    out.sink_arcs[a] = out.net.add_arc(out.head_nodes.at(a), FlowNetwork::kSink, cap);
  }
  return out;
}

DbeNetwork build_dbe_network(const WeightedGraph &g, const VertexSet &a_side,
                             const ComponentList &components,
                             const std::map<Vertex, Weight> &demands) {
  std::vector<VertexSet> nbrs;
  std::vector<Weight> cw;
  for (const auto &comp : components.components) {
    nbrs.push_back(g.neighborhood(comp));
    cw.push_back(g.weight_of(comp));
  }
  std::map<Vertex, Weight> hw;
  for (Vertex a : a_side) hw[a] = g.weight(a);
  return build_dbe_network(a_side, components.components, nbrs, cw, hw, demands);
}

} // namespace crownkernel

#include "crownkernel/dbe.hpp"

#include "crownkernel/flow.hpp"
#include "crownkernel/intmath.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace crownkernel {

Demands Demands::uniform(const VertexSet &heads, Weight d) {
  if (d < 1) throw std::invalid_argument("demand must be positive");
  Demands out;
  for (Vertex v : heads) out.values[v] = d;
  return out;
}

Demands Demands::family_y(const WeightedGraph &g, const VertexSet &heads, Weight a, Weight b) {
  Demands out;
  for (Vertex v : heads) {
    Weight d = a - 2 + b * (g.weight(v) + 1);
    out.values[v] = std::max<Weight>(1, d);
  }
  return out;
}

Demands Demands::family_z(const WeightedGraph &g, const VertexSet &heads, Weight s, Weight lambda) {
  Demands out;
  Weight root = isqrt_ceil(s);
  for (Vertex v : heads) {
    Weight d = g.weight(v) - 1 + (root + 1) * lambda;
    out.values[v] = std::max<Weight>(1, d);
  }
  return out;
}

VertexSet Dbe::assigned_to(Vertex head) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (assignment[i] == head)
      out.insert(out.end(), components[i].begin(), components[i].end());
  return make_vertex_set(std::move(out));
}

VertexSet Dbe::assigned_union(const VertexSet &heads) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (set_contains(heads, assignment[i]))
      out.insert(out.end(), components[i].begin(), components[i].end());
  return make_vertex_set(std::move(out));
}

Weight Dbe::load(const WeightedGraph &g, Vertex head) const {
  return g.weight(head) + g.weight_of(assigned_to(head));
}

namespace {

void validate_sides(const WeightedGraph &g, const VertexSet &a_side, const VertexSet &b_side,
                    const Demands &demands) {
  if (!sets_disjoint(a_side, b_side)) throw std::invalid_argument("A and B overlap");
  for (Vertex v : a_side)
    if (!g.has_vertex(v)) throw std::invalid_argument("A vertex missing from graph");
  for (Vertex v : b_side)
    if (!g.has_vertex(v)) throw std::invalid_argument("B vertex missing from graph");
  for (Vertex v : a_side) {
    auto it = demands.values.find(v);
    if (it == demands.values.end()) throw std::invalid_argument("missing demand");
    if (it->second < 1) throw std::invalid_argument("demand must be positive");
  }
}

} // namespace

FractionalDbe compute_fractional_dbe(const WeightedGraph &g, const VertexSet &a_side,
                                     const VertexSet &b_side, const Demands &demands, Weight y) {
  validate_sides(g, a_side, b_side, demands);
  FractionalDbe fr;
  fr.y = y;
  fr.demands = demands;
  ComponentList comps = connected_components(g, b_side);
  for (const auto &comp : comps.components) {
    if (g.weight_of(comp) > y) throw std::invalid_argument("y below max component weight");
    if (set_intersection(g.neighborhood(comp), a_side).empty())
      throw std::invalid_argument("isolated component in B");
  }
  fr.components = comps.components;
  fr.mass.assign(fr.components.size(), {});
  if (a_side.empty()) {
    if (!fr.components.empty()) throw std::invalid_argument("isolated component in B");
    return fr;
  }

  DbeNetwork nw = build_dbe_network(g, a_side, comps, demands.values);
  nw.net.max_flow();
  std::vector<bool> reroutes = nw.net.residual_reaches_sink();

  // Heads that can still reroute mass toward the sink are the under-demand
  // side; everything else is saturated (or has demand <= weight) and forms a1.
  for (Vertex a : a_side) {
    if (reroutes[static_cast<std::size_t>(nw.head_nodes.at(a))])
      fr.a2.push_back(a);
    else
      fr.a1.push_back(a);
  }

  for (std::size_t i = 0; i < fr.components.size(); ++i) {
    for (std::size_t j = 0; j < nw.comp_arcs[i].size(); ++j) {
      long long f = nw.net.flow_on(nw.comp_arcs[i][j]);
      if (f > 0) fr.mass[i][nw.comp_heads[i][j]] = f;
    }
  }

  // Top up: every component not fully consumed hands its remaining weight to
  // its smallest a1 neighbour, so that the assignment function can be total.
  for (std::size_t i = 0; i < fr.components.size(); ++i) {
    Weight used = 0;
    for (auto &[a, m] : fr.mass[i]) used += m;
    Weight cw = g.weight_of(fr.components[i]);
    if (used == cw) continue;
    VertexSet nbrs = set_intersection(g.neighborhood(fr.components[i]), fr.a1);
    if (nbrs.empty())
      throw std::logic_error("partially used component without a1 neighbor");
    fr.mass[i][nbrs.front()] += cw - used;
  }
  return fr;
}

namespace {

struct SupportGraph {
  // Bipartite support of positive mass: heads and component indices.
  std::map<Vertex, std::vector<int>> head_comps;
  std::vector<std::vector<Vertex>> comp_heads;

  explicit SupportGraph(const FractionalDbe &fr) : comp_heads(fr.components.size()) {
    for (std::size_t i = 0; i < fr.mass.size(); ++i)
      for (auto &[a, m] : fr.mass[i]) {
        if (m <= 0) continue;
        head_comps[a].push_back(static_cast<int>(i));
        comp_heads[i].push_back(a);
      }
  }
};

// Cancels cycles in the bipartite support by rotating mass; per-head totals
// and per-component usage are preserved. Nodes are encoded as ints: comps
// as [0, C), heads as C + index-in-sorted-order.
void decycle(FractionalDbe &fr) {
  for (;;) {
    const int n_comps = static_cast<int>(fr.components.size());
    std::map<Vertex, int> head_index;
    for (const auto &m : fr.mass)
      for (auto &[a, v] : m)
        if (v > 0) head_index.emplace(a, 0);
    std::vector<Vertex> heads;
    for (auto &[a, idx] : head_index) {
      idx = n_comps + static_cast<int>(heads.size());
      heads.push_back(a);
    }
    const int n_nodes = n_comps + static_cast<int>(heads.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_nodes));
    for (int c = 0; c < n_comps; ++c)
      for (auto &[a, v] : fr.mass[static_cast<std::size_t>(c)])
        if (v > 0) {
          int h = head_index[a];
          adj[static_cast<std::size_t>(c)].push_back(h);
          adj[static_cast<std::size_t>(h)].push_back(c);
        }

    // Undirected DFS; every back edge closes a cycle through ancestors.
    std::vector<int> parent(static_cast<std::size_t>(n_nodes), -2);
    std::vector<int> state(static_cast<std::size_t>(n_nodes), 0); // 0 new, 1 on path, 2 done
    std::vector<int> cycle; // node sequence v0..vk with edge vk->v0
    for (int root = 0; root < n_nodes && cycle.empty(); ++root) {
      if (state[static_cast<std::size_t>(root)] != 0) continue;
      std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
      parent[static_cast<std::size_t>(root)] = -1;
      state[static_cast<std::size_t>(root)] = 1;
      while (!stack.empty() && cycle.empty()) {
        auto &[v, it] = stack.back();
        auto &nbrs = adj[static_cast<std::size_t>(v)];
        bool descended = false;
        while (it < nbrs.size()) {
          int u = nbrs[it++];
          if (u == parent[static_cast<std::size_t>(v)]) continue;
          if (state[static_cast<std::size_t>(u)] == 1) {
            // back edge v -> u: unwind the path u .. v
            cycle.clear();
            int x = v;
            while (x != u) {
              cycle.push_back(x);
              x = parent[static_cast<std::size_t>(x)];
            }
            cycle.push_back(u);
            break;
          }
          if (state[static_cast<std::size_t>(u)] == 0) {
            parent[static_cast<std::size_t>(u)] = v;
            state[static_cast<std::size_t>(u)] = 1;
            stack.emplace_back(u, 0);
            descended = true;
            break;
          }
        }
        if (descended || !cycle.empty()) continue;
        state[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
      }
    }
    if (cycle.empty()) return;

    // Collect cycle edges in order; they alternate comp/head nodes.
    auto mass_ref = [&](int x, int y) -> Weight & {
      int c = x < n_comps ? x : y;
      int h = x < n_comps ? y : x;
      return fr.mass[static_cast<std::size_t>(c)][heads[static_cast<std::size_t>(h - n_comps)]];
    };
    const std::size_t len = cycle.size();
    Weight delta = -1;
    for (std::size_t i = 0; i < len; i += 2) {
      Weight m = mass_ref(cycle[i], cycle[(i + 1) % len]);
      delta = delta < 0 ? m : std::min(delta, m);
    }
    for (std::size_t i = 0; i < len; ++i) {
      Weight &m = mass_ref(cycle[i], cycle[(i + 1) % len]);
      m += (i % 2 == 0) ? -delta : delta;
    }
    for (auto &m : fr.mass)
      for (auto it = m.begin(); it != m.end();)
        it = it->second <= 0 ? m.erase(it) : std::next(it);
  }
}

} // namespace

Dbe round_fractional(const WeightedGraph &g, const FractionalDbe &fr_in) {
  FractionalDbe fr = fr_in;
  for (auto &m : fr.mass)
    for (auto it = m.begin(); it != m.end();)
      it = it->second <= 0 ? m.erase(it) : std::next(it);
  decycle(fr);

  Dbe out;
  out.a1 = fr.a1;
  out.a2 = fr.a2;
  out.y = fr.y;
  out.demands = fr.demands;
  out.components = fr.components;
  out.assignment.assign(fr.components.size(), -1);

  SupportGraph sg(fr);
  const std::size_t n_comps = fr.components.size();

  // Comps with no mass at all: by the fractional conditions their whole
  // neighbourhood lies in a1.
  for (std::size_t i = 0; i < n_comps; ++i) {
    if (!sg.comp_heads[i].empty()) continue;
    VertexSet nbrs = g.neighborhood(fr.components[i]);
    VertexSet in_a1 = set_intersection(nbrs, fr.a1);
    if (!in_a1.empty())
      out.assignment[i] = in_a1.front();
    else {
      VertexSet in_a2 = set_intersection(nbrs, fr.a2);
      if (in_a2.empty()) throw std::logic_error("unassignable component");
      out.assignment[i] = in_a2.front();
    }
  }

  // Forest rounding. Each support tree is rooted at its smallest head; heads
  // then take child components greedily while their balance is non-positive,
  // which keeps every per-head change within y - 1.
  std::map<Vertex, bool> head_done;
  std::vector<bool> comp_done(n_comps, false);
  for (auto &[root, cs0] : sg.head_comps) {
    if (head_done.count(root)) continue;
    // Collect the tree by BFS and record parents.
    std::map<Vertex, int> parent_comp;  // head -> comp above it
    std::vector<Vertex> parent_head(n_comps, -1);
    std::vector<Vertex> order_heads{root};
    head_done[root] = true;
    std::deque<Vertex> q{root};
    std::map<Vertex, std::vector<int>> children_comps;
    while (!q.empty()) {
      Vertex h = q.front();
      q.pop_front();
      for (int c : sg.head_comps[h]) {
        auto ci = static_cast<std::size_t>(c);
        if (parent_comp.count(h) && parent_comp[h] == c) continue;
        if (comp_done[ci]) continue;
        comp_done[ci] = true;
        parent_head[ci] = h;
        children_comps[h].push_back(c);
        for (Vertex h2 : sg.comp_heads[ci]) {
          if (h2 == h || head_done.count(h2)) continue;
          head_done[h2] = true;
          parent_comp[h2] = c;
          order_heads.push_back(h2);
          q.push_back(h2);
        }
      }
    }
    // forced[h]: the parent component pushed down to h, if any.
    std::map<Vertex, int> forced;
    for (Vertex h : order_heads) {
      Weight balance = 0;
      if (forced.count(h)) {
        int c = forced[h];
        out.assignment[static_cast<std::size_t>(c)] = h;
        balance += g.weight_of(fr.components[static_cast<std::size_t>(c)]) -
                   fr.mass[static_cast<std::size_t>(c)].at(h);
      } else if (parent_comp.count(h)) {
        // parent component went elsewhere
        balance -= fr.mass[static_cast<std::size_t>(parent_comp[h])].at(h);
      }
      auto cc = children_comps.find(h);
      if (cc == children_comps.end()) continue;
      std::vector<int> cs = cc->second;
      std::sort(cs.begin(), cs.end(), [&](int a, int b) {
        return fr.components[static_cast<std::size_t>(a)].front() <
               fr.components[static_cast<std::size_t>(b)].front();
      });
      for (int c : cs) {
        auto ci = static_cast<std::size_t>(c);
        Weight share = fr.mass[ci].at(h);
        Weight cw = g.weight_of(fr.components[ci]);
        // child heads of this component (below it in the tree)
        std::vector<Vertex> below;
        for (Vertex h2 : sg.comp_heads[ci])
          if (h2 != h) below.push_back(h2);
        if (below.empty()) {
          out.assignment[ci] = h;
          balance += cw - share;
          continue;
        }
        if (balance <= 0) {
          out.assignment[ci] = h;
          balance += cw - share;
        } else {
          balance -= share;
          // hand the component to the child head holding the largest share
          Vertex best = below.front();
          for (Vertex h2 : below) {
            Weight m2 = fr.mass[ci].at(h2);
            if (m2 > fr.mass[ci].at(best) || (m2 == fr.mass[ci].at(best) && h2 < best))
              best = h2;
          }
          forced[best] = c;
        }
      }
    }
  }

  for (std::size_t i = 0; i < n_comps; ++i)
    if (out.assignment[i] == -1) throw std::logic_error("rounding left a component unassigned");
  return out;
}

Dbe compute_dbe(const WeightedGraph &g, const VertexSet &a_side, const VertexSet &b_side,
                const Demands &demands, Weight y) {
  FractionalDbe fr = compute_fractional_dbe(g, a_side, b_side, demands, y);
  Dbe dbe = round_fractional(g, fr);
  if (auto bad = verify_dbe(g, a_side, b_side, dbe))
    throw std::logic_error("constructed DBE violates condition " + std::to_string(*bad));
  return dbe;
}

std::optional<CrownDecomposition> extract_crown(const Dbe &dbe) {
  if (dbe.a1.empty()) return std::nullopt;
  Weight d = -1;
  for (auto &[v, dv] : dbe.demands.values) {
    if (d == -1) d = dv;
    if (dv != d) throw std::invalid_argument("extract_crown needs uniform demands");
  }
  CrownDecomposition cd;
  cd.head = dbe.a1;
  cd.y = dbe.y;
  cd.x = std::max<Weight>(1, d - dbe.y);
  for (std::size_t i = 0; i < dbe.components.size(); ++i) {
    if (!set_contains(dbe.a1, dbe.assignment[i])) continue;
    cd.crown_components.push_back(dbe.components[i]);
    cd.assignment.push_back(dbe.assignment[i]);
    cd.crown = set_union(cd.crown, dbe.components[i]);
  }
  return cd;
}

std::optional<int> verify_dbe(const WeightedGraph &g, const VertexSet &a_side,
                              const VertexSet &b_side, const Dbe &dbe) {
  // structural sanity first: a1/a2 partition a_side, components cover b_side
  if (set_union(dbe.a1, dbe.a2) != a_side || !sets_disjoint(dbe.a1, dbe.a2)) return 2;
  VertexSet covered;
  for (const auto &c : dbe.components) covered = set_union(covered, c);
  if (covered != b_side) return 2;
  if (dbe.assignment.size() != dbe.components.size()) return 2;

  // 1: component weights bounded by y
  for (const auto &c : dbe.components)
    if (g.weight_of(c) > dbe.y) return 1;
  // 2: assignment lands in the component's neighbourhood
  for (std::size_t i = 0; i < dbe.components.size(); ++i) {
    Vertex h = dbe.assignment[i];
    if (!set_contains(a_side, h)) return 2;
    if (!set_contains(g.neighborhood(dbe.components[i]), h)) return 2;
  }
  // 3: the a1 crown is separated by a1
  VertexSet crown = dbe.assigned_union(dbe.a1);
  VertexSet inside = set_union(a_side, b_side);
  for (Vertex v : g.neighborhood(crown)) {
    if (!set_contains(inside, v)) continue;
    if (!set_contains(dbe.a1, v)) return 3;
  }
  // 4: per-head loads sit in the demand band
  for (Vertex a : dbe.a1)
    if (dbe.load(g, a) < dbe.demands.at(a) - dbe.y + 1) return 4;
  for (Vertex a : dbe.a2)
    if (dbe.load(g, a) > dbe.demands.at(a) + dbe.y - 1) return 4;
  return std::nullopt;
}

} // namespace crownkernel

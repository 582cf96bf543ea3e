#include "crownkernel/oracle.hpp"

#include "crownkernel/flow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace crownkernel {

namespace {

void check_cap(const WeightedGraph &g, int cap) {
  if (static_cast<int>(g.num_vertices()) > cap)
    throw std::invalid_argument("instance exceeds the oracle cap");
}

// Subsets in (cardinality, mask) order; bit i stands for the i-th smallest id.
struct SubsetEnumerator {
  std::vector<Vertex> verts;
  std::vector<std::uint32_t> masks;

  explicit SubsetEnumerator(const WeightedGraph &g) : verts(g.vertices()) {
    std::uint32_t full = verts.size() >= 32 ? 0 : (1u << verts.size());
    for (std::uint32_t m = 0; m < full; ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
      int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
  }

  VertexSet expand(std::uint32_t m) const {
    VertexSet out;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (m & (1u << i)) out.push_back(verts[i]);
    return out;
  }
};

Weight heaviest_component(const WeightedGraph &g, const VertexSet &remaining, SizeMode mode) {
  Weight best = 0;
  for (const auto &c : connected_components(g, remaining).components)
    best = std::max(best, component_measure(g, c, mode));
  return best;
}

OracleResult brute_integrity(const WeightedGraph &g, Weight p, SizeMode mode, int cap) {
  check_cap(g, cap);
  SubsetEnumerator en(g);
  OracleResult out;
  VertexSet all = g.vertices();
  for (std::uint32_t m : en.masks) {
    VertexSet s = en.expand(m);
    Weight cost = mode == SizeMode::Cardinality ? static_cast<Weight>(s.size()) : g.weight_of(s);
    Weight comp = heaviest_component(g, set_difference(all, s), mode);
    Weight value = cost + comp;
    if (!out.optimum || value < *out.optimum) {
      out.optimum = value;
      out.witness = s;
    }
    if (value <= p && (!out.p_ell || comp < *out.p_ell)) out.p_ell = comp;
  }
  out.yes = out.optimum && *out.optimum <= p;
  if (!out.yes) out.p_ell.reset(); // defined over solutions only
  return out;
}

OracleResult brute_separator(const WeightedGraph &g, Weight k, Weight w_cap, SizeMode mode,
                             int cap) {
  check_cap(g, cap);
  SubsetEnumerator en(g);
  OracleResult out;
  VertexSet all = g.vertices();
  for (std::uint32_t m : en.masks) {
    VertexSet s = en.expand(m);
    if (heaviest_component(g, set_difference(all, s), mode) > w_cap) continue;
    Weight cost = mode == SizeMode::Cardinality ? static_cast<Weight>(s.size()) : g.weight_of(s);
    if (!out.optimum || cost < *out.optimum) {
      out.optimum = cost;
      out.witness = s;
    }
  }
  out.yes = out.optimum && *out.optimum <= k;
  return out;
}

} // namespace

OracleResult brute_vi(const WeightedGraph &g, Weight p, int cap) {
  WeightedGraph unit = g;
  for (Vertex v : unit.vertices()) unit.set_weight(v, 1);
  return brute_integrity(unit, p, SizeMode::Cardinality, cap);
}

OracleResult brute_wvi(const WeightedGraph &g, Weight p, int cap) {
  return brute_integrity(g, p, SizeMode::Weight, cap);
}

OracleResult brute_coc(const WeightedGraph &g, Weight k, Weight w_cap, int cap) {
  return brute_separator(g, k, w_cap, SizeMode::Cardinality, cap);
}

OracleResult brute_wcoc(const WeightedGraph &g, Weight k, Weight w_cap, int cap) {
  return brute_separator(g, k, w_cap, SizeMode::Weight, cap);
}

PackingResult brute_max_packing(const WeightedGraph &g, Weight lambda, int cap) {
  check_cap(g, cap);
  std::vector<Vertex> verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  std::map<Vertex, int> idx;
  for (int i = 0; i < n; ++i) idx[verts[static_cast<std::size_t>(i)]] = i;
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (Vertex u : g.neighbors(verts[static_cast<std::size_t>(i)]))
      nbr[static_cast<std::size_t>(i)] |= 1u << idx[u];

  auto connected_mask = [&](std::uint32_t m) {
    if (m == 0) return false;
    std::uint32_t seen = m & (~m + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f) {
        int i = __builtin_ctz(f);
        f &= f - 1;
        next |= nbr[static_cast<std::size_t>(i)] & m & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    return seen == m;
  };
  auto weight_mask = [&](std::uint32_t m) {
    Weight w = 0;
    while (m) {
      int i = __builtin_ctz(m);
      m &= m - 1;
      w += g.weight(verts[static_cast<std::size_t>(i)]);
    }
    return w;
  };

  std::map<std::uint32_t, std::pair<int, std::uint32_t>> memo; // mask -> (best, chosen part)
  std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second.first;
    std::uint32_t low = mask & (~mask + 1);
    int b = best(mask & ~low);
    std::uint32_t choice = 0;
    // parts containing the lowest available vertex
    std::uint32_t rest = mask & ~low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t part = sub | low;
      if (weight_mask(part) >= lambda && connected_mask(part)) {
        int cand = 1 + best(mask & ~part);
        if (cand > b) {
          b = cand;
          choice = part;
        }
      }
      if (sub == 0) break;
    }
    memo[mask] = {b, choice};
    return b;
  };

  std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  PackingResult out;
  out.size = best(full);
  std::uint32_t mask = full;
  while (mask) {
    auto [b, choice] = memo[mask];
    if (b == 0) break;
    if (choice == 0) {
      mask &= mask - 1; // lowest vertex unused
      continue;
    }
    VertexSet part;
    std::uint32_t c = choice;
    while (c) {
      int i = __builtin_ctz(c);
      c &= c - 1;
      part.push_back(verts[static_cast<std::size_t>(i)]);
    }
    out.parts.push_back(part);
    mask &= ~choice;
  }
  return out;
}

namespace {

// Feasibility of the Def-4.2 assignment for fixed sides via max-flow; the
// witness head, when given, needs 2W instead of 2W-1.
std::optional<std::vector<std::map<Vertex, Weight>>> pair_assignment(
    const WeightedGraph &g, const VertexSet &a_side, const std::vector<VertexSet> &comps,
    Weight w_cap, std::optional<Vertex> witness) {
  FlowNetwork net;
  std::map<Vertex, int> head_node;
  std::map<Vertex, int> head_arc;
  for (Vertex a : a_side) head_node[a] = net.add_node();
  std::vector<int> comp_node;
  std::vector<std::vector<std::pair<Vertex, int>>> comp_arcs;
  Weight need = 0;
  for (const auto &c : comps) {
    int qn = net.add_node();
    comp_node.push_back(qn);
    net.add_arc(FlowNetwork::kSource, qn, static_cast<Weight>(c.size()));
    std::vector<std::pair<Vertex, int>> arcs;
    for (Vertex a : set_intersection(g.neighborhood(c), a_side))
      arcs.emplace_back(a, net.add_arc(qn, head_node[a], static_cast<Weight>(c.size())));
    comp_arcs.push_back(std::move(arcs));
  }
  for (Vertex a : a_side) {
    Weight d = 2 * w_cap - 1 + (witness && *witness == a ? 1 : 0);
    head_arc[a] = net.add_arc(head_node[a], FlowNetwork::kSink, d);
    need += d;
  }
  if (net.max_flow() != need) return std::nullopt;
  std::vector<std::map<Vertex, Weight>> mass(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (auto &[a, arc] : comp_arcs[i]) {
      long long f = net.flow_on(arc);
      if (f > 0) mass[i][a] = f;
    }
  return mass;
}

} // namespace

std::optional<ReduciblePair> brute_strict_pair(const WeightedGraph &g, Weight w_cap, int cap) {
  check_cap(g, cap);
  SubsetEnumerator en(g);
  VertexSet all = g.vertices();
  for (std::uint32_t m : en.masks) {
    if (m == 0) continue;
    VertexSet a_side = en.expand(m);
    // maximal candidate B: the light components of G - A
    std::vector<VertexSet> comps;
    VertexSet b_side;
    for (const auto &c : connected_components(g, set_difference(all, a_side)).components)
      if (static_cast<Weight>(c.size()) <= w_cap) {
        comps.push_back(c);
        b_side = set_union(b_side, c);
      }
    if (comps.empty()) continue;
    if (!pair_assignment(g, a_side, comps, w_cap, std::nullopt)) continue;
    for (Vertex a : a_side) {
      auto mass = pair_assignment(g, a_side, comps, w_cap, a);
      if (!mass) continue;
      ReduciblePair out;
      out.a_side = a_side;
      out.b_side = b_side;
      out.b_components = comps;
      out.mass = *mass;
      out.strict_witness = a;
      return out;
    }
  }
  return std::nullopt;
}

bool check_equivalence(ProblemKind kind, const WeightedGraph &g1, Weight budget1,
                       const WeightedGraph &g2, Weight budget2, Weight w_cap, int cap) {
  auto solve = [&](const WeightedGraph &g, Weight b) {
    switch (kind) {
    case ProblemKind::Vi:
      return brute_vi(g, b, cap).yes;
    case ProblemKind::Wvi:
      return brute_wvi(g, b, cap).yes;
    case ProblemKind::Coc:
      return brute_coc(g, b, w_cap, cap).yes;
    case ProblemKind::Wcoc:
      return brute_wcoc(g, b, w_cap, cap).yes;
    }
    throw std::logic_error("unknown problem kind");
  };
  return solve(g1, budget1) == solve(g2, budget2);
}

} // namespace crownkernel

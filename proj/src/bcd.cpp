#include "crownkernel/bcd.hpp"

#include <algorithm>
#include <deque>
#include <cstdio>
#include <cstdlib>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace crownkernel {

VertexSet Bcd::body() const {
  std::vector<Vertex> out;
  for (const auto &p : body_parts) out.insert(out.end(), p.begin(), p.end());
  return make_vertex_set(std::move(out));
}

VertexSet Bcd::crown_of(Vertex h) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < crown_components.size(); ++i)
    if (assignment[i] == h)
      out.insert(out.end(), crown_components[i].begin(), crown_components[i].end());
  return make_vertex_set(std::move(out));
}

// --- blossom matching ------------------------------------------------------

namespace {

// Classic Edmonds blossom contraction, on 0-based indices.
class BlossomMatcher {
public:
  explicit BlossomMatcher(const std::vector<std::vector<int>> &adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), match_(adj.size(), -1),
        parent_(adj.size()), base_(adj.size()), used_(adj.size()), flower_(adj.size()) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v)
      if (match_[static_cast<std::size_t>(v)] == -1) find_augmenting(v);
    return match_;
  }

private:
  int lca(int a, int b) {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = true;
      if (match_[static_cast<std::size_t>(a)] == -1) break;
      a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      int mv = match_[static_cast<std::size_t>(v)];
      flower_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
      flower_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  bool find_augmenting(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
    used_[static_cast<std::size_t>(root)] = true;
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : adj_[static_cast<std::size_t>(v)]) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(u)] ||
            match_[static_cast<std::size_t>(v)] == u)
          continue;
        if (u == root || (match_[static_cast<std::size_t>(u)] != -1 &&
                          parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(u)])] != -1)) {
          int b = lca(v, u);
          std::fill(flower_.begin(), flower_.end(), false);
          mark_path(v, b, u);
          mark_path(u, b, v);
          for (int i = 0; i < n_; ++i)
            if (flower_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = b;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = true;
                q.push_back(i);
              }
            }
        } else if (parent_[static_cast<std::size_t>(u)] == -1) {
          parent_[static_cast<std::size_t>(u)] = v;
          if (match_[static_cast<std::size_t>(u)] == -1) {
            // augment along the alternating path ending at u
            int x = u;
            while (x != -1) {
              int pv = parent_[static_cast<std::size_t>(x)];
              int ppv = match_[static_cast<std::size_t>(pv)];
              match_[static_cast<std::size_t>(x)] = pv;
              match_[static_cast<std::size_t>(pv)] = x;
              x = ppv;
            }
            return true;
          }
          int mu = match_[static_cast<std::size_t>(u)];
          used_[static_cast<std::size_t>(mu)] = true;
          q.push_back(mu);
        }
      }
    }
    return false;
  }

  const std::vector<std::vector<int>> &adj_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, flower_;
};

std::vector<std::pair<Vertex, Vertex>> blossom_matching(const WeightedGraph &g,
                                                        const VertexSet &within) {
  std::vector<Vertex> idx_to_v(within.begin(), within.end());
  std::map<Vertex, int> v_to_idx;
  for (std::size_t i = 0; i < idx_to_v.size(); ++i) v_to_idx[idx_to_v[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(idx_to_v.size());
  for (std::size_t i = 0; i < idx_to_v.size(); ++i)
    for (Vertex u : g.neighbors(idx_to_v[i]))
      if (set_contains(within, u)) adj[i].push_back(v_to_idx[u]);
  BlossomMatcher matcher(adj);
  std::vector<int> match = matcher.run();
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < match.size(); ++i)
    if (match[i] > static_cast<int>(i))
      out.emplace_back(idx_to_v[i], idx_to_v[static_cast<std::size_t>(match[i])]);
  return out;
}

} // namespace

Packing maximum_matching(const WeightedGraph &g) {
  if (!g.unit_weights()) throw std::invalid_argument("maximum_matching requires unit weights");
  Packing p;
  p.threshold = 2;
  for (auto &[u, v] : blossom_matching(g, g.vertices()))
    p.parts.push_back(make_vertex_set({u, v}));
  return p;
}

// --- split machinery -------------------------------------------------------

namespace {

struct SpanningTree {
  std::vector<Vertex> order;             // dfs preorder
  std::map<Vertex, Vertex> parent;       // root maps to itself
  std::map<Vertex, std::vector<Vertex>> children;
  std::map<Vertex, Weight> subtree_weight;
  std::vector<Vertex> postorder;
};

SpanningTree spanning_tree(const WeightedGraph &g, const VertexSet &within) {
  SpanningTree t;
  Vertex root = within.front();
  t.parent[root] = root;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  VertexSet seen{root};
  while (!stack.empty()) {
    auto &[v, it] = stack.back();
    if (it == 0) t.order.push_back(v);
    const auto &nbrs = g.neighbors(v);
    bool descended = false;
    while (it < nbrs.size()) {
      Vertex u = nbrs[it++];
      if (!set_contains(within, u) || set_contains(seen, u)) continue;
      seen.insert(std::lower_bound(seen.begin(), seen.end(), u), u);
      t.parent[u] = v;
      t.children[v].push_back(u);
      stack.emplace_back(u, 0);
      descended = true;
      break;
    }
    if (descended) continue;
    t.postorder.push_back(v);
    Weight w = g.weight(v);
    for (Vertex c : t.children[v]) w += t.subtree_weight[c];
    t.subtree_weight[v] = w;
    stack.pop_back();
  }
  return t;
}

VertexSet subtree_vertices(const SpanningTree &t, const WeightedGraph &, Vertex v) {
  std::vector<Vertex> out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    auto it = t.children.find(x);
    if (it != t.children.end())
      for (Vertex c : it->second) stack.push_back(c);
  }
  return make_vertex_set(std::move(out));
}

struct SplitResult {
  bool shatter = false;
  Vertex pivot = -1;
  VertexSet side_a, side_b;
};

// For connected P with w(P) > 3*lambda: either splits P into two connected
// pieces heavier than lambda, or reports a vertex whose removal leaves only
// light pieces.
SplitResult split_finder(const WeightedGraph &g, const VertexSet &part, Weight lambda) {
  SplitResult res;
  Weight total = g.weight_of(part);
  SpanningTree t = spanning_tree(g, part);
  Vertex v = -1;
  for (Vertex x : t.postorder)
    if (t.subtree_weight[x] > lambda) {
      v = x;
      break;
    }
  VertexSet tv = subtree_vertices(t, g, v);
  Weight top = total - t.subtree_weight[v];
  if (top > lambda) {
    res.side_a = tv;
    res.side_b = set_difference(part, tv);
    return res;
  }
  // top is light; look at the graph components around v
  VertexSet rest = set_difference(part, {v});
  ComponentList around = connected_components(g, rest);
  const VertexSet *heavy = nullptr;
  for (const auto &c : around.components)
    if (g.weight_of(c) > lambda) {
      heavy = &c;
      break;
    }
  if (heavy == nullptr) {
    res.shatter = true;
    res.pivot = v;
    return res;
  }
  // Tree pieces hanging off v (child subtrees and the top piece) all weigh at
  // most lambda; grow a DFS prefix of the pieces inside the heavy component
  // until it exceeds lambda. The remainder stays connected through v.
  std::vector<VertexSet> pieces;
  for (Vertex c : t.children[v]) pieces.push_back(subtree_vertices(t, g, c));
  VertexSet top_piece = set_difference(part, tv);
  if (!top_piece.empty()) pieces.push_back(top_piece);
  std::vector<int> in_heavy;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (set_is_subset(pieces[i], *heavy)) in_heavy.push_back(static_cast<int>(i));
  // piece adjacency within the heavy component
  auto adjacent_pieces = [&](int i, int j) {
    for (Vertex x : pieces[static_cast<std::size_t>(i)])
      for (Vertex u : g.neighbors(x))
        if (set_contains(pieces[static_cast<std::size_t>(j)], u)) return true;
    return false;
  };
  int start = in_heavy.front();
  for (int i : in_heavy)
    if (pieces[static_cast<std::size_t>(i)].front() < pieces[static_cast<std::size_t>(start)].front())
      start = i;
  std::vector<int> stack{start};
  std::vector<bool> taken(pieces.size(), false);
  taken[static_cast<std::size_t>(start)] = true;
  VertexSet prefix;
  Weight acc = 0;
  while (!stack.empty() && acc <= lambda) {
    int i = stack.back();
    stack.pop_back();
    prefix = set_union(prefix, pieces[static_cast<std::size_t>(i)]);
    acc += g.weight_of(pieces[static_cast<std::size_t>(i)]);
    if (acc > lambda) break;
    for (int j : in_heavy)
      if (!taken[static_cast<std::size_t>(j)] && adjacent_pieces(i, j)) {
        taken[static_cast<std::size_t>(j)] = true;
        stack.push_back(j);
      }
  }
  if (acc <= lambda) throw std::logic_error("split prefix failed to reach lambda");
  res.side_a = prefix;
  res.side_b = set_difference(part, prefix);
  return res;
}

struct BcdAccum {
  VertexSet head;
  std::vector<VertexSet> crown_components;
  std::vector<Vertex> assignment;
  std::vector<VertexSet> parts;

  void add_crown(const VertexSet &c, Vertex h) {
    crown_components.push_back(c);
    assignment.push_back(h);
  }
};

std::pair<VertexSet, VertexSet> seed_split(const WeightedGraph &g, const VertexSet &region,
                                           const std::vector<VertexSet> &seeds, Weight lambda);

// Splits the stacked regions into (lambda, 3*lambda] parts; stops at a
// shatter vertex and hands the stuck region back. Seed parts are never cut
// and regions holding two or more of them always split, so every emitted
// part contains at most one seed.
struct StuckRegion {
  Vertex pivot;
  VertexSet region;
};

std::optional<StuckRegion> split_stack_into_parts(const WeightedGraph &g, Weight lambda,
                                                  std::vector<VertexSet> &work,
                                                  std::vector<VertexSet> &parts,
                                                  const std::vector<VertexSet> &seeds = {}) {
  while (!work.empty()) {
    VertexSet p = std::move(work.back());
    work.pop_back();
    std::vector<VertexSet> local;
    for (const auto &sd : seeds)
      if (set_is_subset(sd, p)) local.push_back(sd);
    if (local.size() >= 2) {
      auto [a, b] = seed_split(g, p, local, lambda);
      work.push_back(std::move(a));
      work.push_back(std::move(b));
      continue;
    }
    if (g.weight_of(p) <= 3 * lambda) {
      parts.push_back(std::move(p));
      continue;
    }
    SplitResult r = split_finder(g, p, lambda);
    if (r.shatter) return StuckRegion{r.pivot, std::move(p)};
    work.push_back(std::move(r.side_a));
    work.push_back(std::move(r.side_b));
  }
  return std::nullopt;
}

std::optional<Vertex> split_region_into_parts(const WeightedGraph &g, const VertexSet &region,
                                              Weight lambda, std::vector<VertexSet> &parts,
                                              const std::vector<VertexSet> &seeds = {}) {
  std::vector<VertexSet> work{region};
  if (auto stuck = split_stack_into_parts(g, lambda, work, parts, seeds)) return stuck->pivot;
  return std::nullopt;
}

// Places a region that only shatters at already-starved heads: shave pieces
// into adjacent parts or crowns, and when nothing moves, absorb an adjacent
// part and re-split the union. Returns a fresh shatter vertex when one turns
// up, which the caller escalates as usual.
std::optional<Vertex> repair_stuck_region(const WeightedGraph &g, VertexSet region, Weight lambda,
                                          std::vector<VertexSet> &parts, const VertexSet &heads,
                                          const VertexSet &crown_hosts,
                                          std::vector<std::pair<VertexSet, Vertex>> &crowns) {
  std::size_t fuse = parts.size() + region.size() + g.num_vertices() + 2;
  for (;;) {
    if (fuse-- == 0) throw std::logic_error("stuck-region repair did not converge");
    Weight wr = g.weight_of(region);
    if (wr > lambda && wr <= 3 * lambda) {
      parts.push_back(region);
      return std::nullopt;
    }
    if (wr > 3 * lambda) {
      bool moved = false;
      for (Vertex v : region) {
        for (const auto &piece :
             connected_components(g, set_difference(region, {v})).components) {
          Weight wp = g.weight_of(piece);
          if (wp > lambda || g.weight_of(region) - wp <= lambda) continue;
          VertexSet nbrs = g.neighborhood(piece);
          if (set_is_subset(nbrs, crown_hosts)) {
            crowns.emplace_back(piece, set_intersection(nbrs, crown_hosts).front());
            region = set_difference(region, piece);
            moved = true;
            break;
          }
          for (std::size_t j = 0; j < parts.size(); ++j) {
            if (sets_disjoint(parts[j], nbrs)) continue;
            if (g.weight_of(parts[j]) + wp > 3 * lambda) continue;
            parts[j] = set_union(parts[j], piece);
            region = set_difference(region, piece);
            moved = true;
            break;
          }
          if (moved) break;
        }
        if (moved) break;
      }
      if (moved) continue;
    }
    // absorb an adjacent part and try to split the union afresh
    VertexSet nbrs = g.neighborhood(region);
    int take = -1;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (!sets_disjoint(parts[j], nbrs)) {
        take = static_cast<int>(j);
        break;
      }
    if (take < 0) throw std::logic_error("unrepairable starved region");
    region = set_union(region, parts[static_cast<std::size_t>(take)]);
    parts.erase(parts.begin() + take);
    if (std::getenv("CK_TRACE")) {
      std::fprintf(stderr, "merged region now:");
      for (Vertex v : region) std::fprintf(stderr, " %d", v);
      std::fprintf(stderr, " heads:");
      for (Vertex v : heads) std::fprintf(stderr, " %d", v);
      std::fprintf(stderr, "\n");
    }
    std::vector<VertexSet> work{region};
    auto stuck = split_stack_into_parts(g, lambda, work, parts);
    if (!stuck) return std::nullopt;
    if (!set_contains(heads, stuck->pivot)) return stuck->pivot;
    if (std::getenv("CK_TRACE")) std::fprintf(stderr, "resplit stuck at %d\n", stuck->pivot);
    region = std::move(stuck->region);
  }
}

// Resolves one connected piece whose external neighbours all sit in
// `ctx_heads` (already committed heads). Vertices that shatter an over-heavy
// region into light pieces become head candidates; a flow pass then decides
// which candidates can be saturated and the rest dissolve into body parts.
void resolve_component(const WeightedGraph &g, const VertexSet &comp, Weight lambda,
                       BcdAccum &out, const VertexSet &ctx_heads = {},
                       const std::vector<VertexSet> &seeds = {}) {
  VertexSet heads;
  for (std::size_t guard = 0; guard <= comp.size() + 1; ++guard) {
    VertexSet terr = set_difference(comp, heads);
    std::vector<VertexSet> live_seeds;
    for (const auto &sd : seeds)
      if (sets_disjoint(sd, heads)) live_seeds.push_back(sd);
    ComponentList cl = connected_components(g, terr);
    std::vector<VertexSet> lights;
    std::vector<std::pair<VertexSet, Vertex>> ctx_crowns;
    std::vector<VertexSet> parts;
    std::optional<Vertex> star;
    for (const auto &c : cl.components) {
      if (g.weight_of(c) <= lambda) {
        VertexSet nbrs = g.neighborhood(c);
        if (sets_disjoint(nbrs, heads)) {
          VertexSet hosts = set_intersection(nbrs, ctx_heads);
          if (hosts.empty()) throw std::logic_error("light component without heads");
          ctx_crowns.emplace_back(c, hosts.front());
        } else {
          lights.push_back(c);
        }
        continue;
      }
      star = split_region_into_parts(g, c, lambda, parts, live_seeds);
      if (star) break;
    }
    if (star) {
      heads = set_union(heads, {*star});
      continue;
    }
    if (heads.empty()) {
      for (auto &[c, h] : ctx_crowns) out.add_crown(c, h);
      out.parts.insert(out.parts.end(), parts.begin(), parts.end());
      return;
    }

    VertexSet b_side;
    for (const auto &l : lights) b_side = set_union(b_side, l);
    // heads already heavier than lambda are saturated with an empty crown;
    // the rest must collect enough to clear lambda after rounding slack
    Demands demands;
    for (Vertex h : heads)
      demands.values[h] = g.weight(h) > lambda ? 1 : 2 * lambda;
    Dbe dbe = compute_dbe(g, heads, b_side, demands, lambda);

    std::vector<std::pair<VertexSet, Vertex>> crowns;
    VertexSet a2_territory = dbe.a2;
    for (std::size_t i = 0; i < dbe.components.size(); ++i) {
      if (set_contains(dbe.a1, dbe.assignment[i]))
        crowns.emplace_back(dbe.components[i], dbe.assignment[i]);
      else
        a2_territory = set_union(a2_territory, dbe.components[i]);
    }

    // Starved heads dissolve: their blobs become parts, light remainders are
    // crowned to a1 or absorbed into an adjacent part.
    ComponentList blobs = connected_components(g, a2_territory);
    VertexSet crown_hosts_early = set_union(dbe.a1, ctx_heads);
    std::vector<VertexSet> deferred;
    std::vector<VertexSet> tiny;
    for (const auto &k : blobs.components) {
      Weight wk = g.weight_of(k);
      std::vector<VertexSet> blob_seeds;
      for (const auto &sd : live_seeds)
        if (set_is_subset(sd, k)) blob_seeds.push_back(sd);
      if (wk > 3 * lambda || blob_seeds.size() >= 2) {
        std::vector<VertexSet> work{k};
        while (auto stuck = split_stack_into_parts(g, lambda, work, parts, blob_seeds)) {
          if (!set_contains(heads, stuck->pivot)) {
            star = stuck->pivot;
            break;
          }
          // a region that only shatters at an already-starved head cannot
          // trigger another restart; shave it into place once the remaining
          // stack has materialized as donation targets
          deferred.push_back(std::move(stuck->region));
        }
        if (star) break;
      } else if (wk > lambda) {
        parts.push_back(k);
      } else {
        tiny.push_back(k);
      }
    }
    if (star) {
      heads = set_union(heads, {*star});
      continue;
    }
    std::vector<std::pair<VertexSet, Vertex>> repair_crowns;
    for (const auto &region : deferred) {
      star = repair_stuck_region(g, region, lambda, parts, heads, crown_hosts_early,
                                 repair_crowns);
      if (star) break;
    }
    if (star) {
      heads = set_union(heads, {*star});
      continue;
    }
    for (auto &[c, h] : repair_crowns) crowns.emplace_back(c, h);
    VertexSet crown_hosts = set_union(dbe.a1, ctx_heads);
    for (const auto &k : tiny) {
      VertexSet nbrs = g.neighborhood(k);
      if (set_is_subset(nbrs, crown_hosts)) {
        crowns.emplace_back(k, set_intersection(nbrs, crown_hosts).front());
        continue;
      }
      int target = -1;
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (!sets_disjoint(parts[i], nbrs)) {
          target = static_cast<int>(i);
          break;
        }
      if (target < 0) throw std::logic_error("stranded light blob");
      VertexSet merged = set_union(parts[static_cast<std::size_t>(target)], k);
      parts.erase(parts.begin() + target);
      std::vector<VertexSet> merged_seeds;
      for (const auto &sd : live_seeds)
        if (set_is_subset(sd, merged)) merged_seeds.push_back(sd);
      if (g.weight_of(merged) <= 3 * lambda && merged_seeds.size() < 2) {
        parts.push_back(merged);
      } else {
        std::vector<VertexSet> work{merged};
        while (auto stuck = split_stack_into_parts(g, lambda, work, parts, merged_seeds)) {
          if (!set_contains(heads, stuck->pivot)) {
            star = stuck->pivot;
            break;
          }
          star = repair_stuck_region(g, stuck->region, lambda, parts, heads, crown_hosts,
                                     crowns);
          if (star) break;
        }
        if (star) break;
      }
    }
    if (star) {
      heads = set_union(heads, {*star});
      continue;
    }

    out.head = set_union(out.head, dbe.a1);
    for (auto &[c, h] : ctx_crowns) out.add_crown(c, h);
    for (auto &[c, h] : crowns) out.add_crown(c, h);
    out.parts.insert(out.parts.end(), parts.begin(), parts.end());
    return;
  }
  throw std::logic_error("bcd resolution did not converge");
}

Bcd assemble(const WeightedGraph &g, Weight lambda, BcdAccum &&acc) {
  Bcd b;
  b.lambda = lambda;
  b.head = acc.head;
  b.body_parts = std::move(acc.parts);
  b.crown_components = std::move(acc.crown_components);
  b.assignment = std::move(acc.assignment);
  for (const auto &c : b.crown_components) b.crown = set_union(b.crown, c);
  if (auto bad = verify_bcd(g, lambda, b))
    throw std::logic_error("constructed BCD violates item " + std::to_string(*bad));
  return b;
}

void check_components_heavy(const WeightedGraph &g, Weight lambda) {
  for (const auto &c : connected_components(g).components)
    if (g.weight_of(c) <= lambda)
      throw std::invalid_argument("component of weight at most lambda present");
}

} // namespace

Bcd compute_bcd(const WeightedGraph &g, Weight lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be positive");
  check_components_heavy(g, lambda);
  BcdAccum acc;
  for (const auto &comp : connected_components(g).components)
    resolve_component(g, comp, lambda, acc);
  return assemble(g, lambda, std::move(acc));
}

// --- matching-seeded construction (lambda = 1, unit weights) ---------------

namespace {

// Kuhn's bipartite augmenting paths: match every vertex of `left` into its
// neighbourhood. Returns the mate map or nothing if some left vertex stays
// single.
std::optional<std::map<Vertex, Vertex>> saturating_bipartite_matching(const WeightedGraph &g,
                                                                      const VertexSet &left) {
  std::map<Vertex, Vertex> right_mate; // right vertex -> left vertex
  std::map<Vertex, Vertex> left_mate;
  for (Vertex u : left) {
    VertexSet visited;
    std::function<bool(Vertex)> try_augment = [&](Vertex x) -> bool {
      for (Vertex a : g.neighbors(x)) {
        if (set_contains(visited, a)) continue;
        visited.insert(std::lower_bound(visited.begin(), visited.end(), a), a);
        auto it = right_mate.find(a);
        if (it == right_mate.end() || try_augment(it->second)) {
          right_mate[a] = x;
          left_mate[x] = a;
          return true;
        }
      }
      return false;
    };
    if (!try_augment(u)) return std::nullopt;
  }
  return left_mate;
}

// Matching-driven construction for lambda = 1 on unit weights. Crown freezes
// run strictly before any part forms, so crowned vertices only ever neighbour
// heads; the derived packing never drops below a maximum matching.
Bcd bcd_from_matching(const WeightedGraph &g) {
  BcdAccum acc;
  VertexSet live = g.vertices();
  const std::size_t guard = g.num_vertices() + 2;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > guard) throw std::logic_error("matching BCD did not converge");
    if (live.empty()) break;
    WeightedGraph w = g.induced(live);

    // isolated leftovers sit next to frozen heads only
    VertexSet singletons;
    for (const auto &c : connected_components(w).components)
      if (c.size() == 1) singletons = set_union(singletons, c);
    if (!singletons.empty()) {
      for (Vertex v : singletons) {
        VertexSet nbrs = set_intersection(g.neighborhood({v}), acc.head);
        if (nbrs.empty()) throw std::logic_error("stranded singleton in matching BCD");
        acc.add_crown({v}, nbrs.front());
      }
      live = set_difference(live, singletons);
      continue;
    }

    auto m_edges = blossom_matching(w, live);
    VertexSet matched;
    for (auto &[u, v] : m_edges) matched = set_union(matched, {u, v});
    VertexSet unmatched = set_difference(live, matched);

    if (unmatched.empty()) {
      for (auto &[u, v] : m_edges) acc.parts.push_back(make_vertex_set({u, v}));
      break;
    }

    VertexSet a_side = w.neighborhood(unmatched);
    Dbe dbe = compute_dbe(w, a_side, unmatched, Demands::uniform(a_side, 2), 1);
    if (!dbe.a1.empty()) {
      acc.head = set_union(acc.head, dbe.a1);
      VertexSet removed = dbe.a1;
      for (std::size_t i = 0; i < dbe.components.size(); ++i) {
        if (!set_contains(dbe.a1, dbe.assignment[i])) continue;
        acc.add_crown(dbe.components[i], dbe.assignment[i]);
        removed = set_union(removed, dbe.components[i]);
      }
      live = set_difference(live, removed);
      continue;
    }

    // Hall state: every unmatched vertex pairs with a private neighbour and
    // absorbs that neighbour's old matching partner, so no vertex strands;
    // untouched matching edges become plain parts.
    auto mates = saturating_bipartite_matching(w, unmatched);
    if (!mates) throw std::logic_error("expected saturating matching for unmatched side");
    VertexSet mate_set;
    for (Vertex u : unmatched) mate_set = set_union(mate_set, {mates->at(u)});
    std::map<Vertex, Vertex> partner;
    for (auto &[u, v] : m_edges) {
      partner[u] = v;
      partner[v] = u;
    }
    for (Vertex u : unmatched) {
      Vertex m = mates->at(u);
      auto it = partner.find(m);
      if (it == partner.end()) throw std::logic_error("mate unmatched despite maximality");
      Vertex q = it->second;
      if (set_contains(mate_set, q))
        acc.parts.push_back(make_vertex_set({u, m}));
      else
        acc.parts.push_back(make_vertex_set({u, m, q}));
    }
    for (auto &[u, v] : m_edges)
      if (!set_contains(mate_set, u) && !set_contains(mate_set, v))
        acc.parts.push_back(make_vertex_set({u, v}));
    break;
  }
  return assemble(g, 1, std::move(acc));
}

// --- seed-aware splitting ---------------------------------------------------

// Contracted-tree split that never cuts a seed part; total for >= 2 seeds.
std::pair<VertexSet, VertexSet> seed_split(const WeightedGraph &g, const VertexSet &region,
                                           const std::vector<VertexSet> &seeds, Weight lambda) {
  std::map<Vertex, Vertex> rep;
  std::map<Vertex, Weight> rep_weight;
  for (Vertex v : region) {
    rep[v] = v;
    rep_weight[v] = g.weight(v);
  }
  for (const auto &s : seeds) {
    Weight w = 0;
    for (Vertex v : s) {
      rep[v] = s.front();
      w += g.weight(v);
    }
    for (Vertex v : s) rep_weight.erase(v);
    rep_weight[s.front()] = w;
  }
  WeightedGraph contracted;
  for (auto &[r, w] : rep_weight) contracted.add_vertex(r, w);
  for (Vertex v : region)
    for (Vertex u : g.neighbors(v)) {
      if (!set_contains(region, u) || u <= v) continue;
      Vertex a = rep[v], b = rep[u];
      if (a != b && !contracted.has_edge(a, b)) contracted.add_edge(a, b);
    }
  VertexSet cverts = contracted.vertices();
  SpanningTree t = spanning_tree(contracted, cverts);
  Vertex nu = -1;
  for (Vertex x : t.postorder)
    if (t.subtree_weight[x] > lambda) {
      nu = x;
      break;
    }
  Weight top = contracted.total_weight() - t.subtree_weight[nu];
  if (top <= lambda) throw std::logic_error("seed split has no heavy top");
  VertexSet side_reps = subtree_vertices(t, contracted, nu);
  VertexSet side;
  for (Vertex v : region)
    if (set_contains(side_reps, rep[v])) side.push_back(v);
  side = make_vertex_set(std::move(side));
  return {side, set_difference(region, side)};
}


// Fallback for adversarial seeds: grow the seed into a partition of the
// vertex set, then shave overweight parts by donating hub pieces to adjacent
// parts with room. Every step keeps the part count at |seed|, so success
// yields a pure-parts BCD matching the seed size. Returns nothing when some
// overweight part has no roomy neighbour left.
std::optional<Bcd> grown_seed_bcd(const WeightedGraph &g, Weight lambda, const Packing &seed) {
  std::vector<VertexSet> parts = seed.parts;
  VertexSet covered;
  for (const auto &p : parts) covered = set_union(covered, p);
  // components without a seed part cannot appear under a maximal seed
  for (const auto &comp : connected_components(g).components)
    if (sets_disjoint(comp, covered)) return std::nullopt;
  // attach free vertices to adjacent parts, smallest part first
  VertexSet free = set_difference(g.vertices(), covered);
  while (!free.empty()) {
    bool moved = false;
    for (std::size_t i = 0; i < parts.size() && !moved; ++i) {
      VertexSet touch = set_intersection(g.neighborhood(parts[i]), free);
      if (touch.empty()) continue;
      parts[i] = set_union(parts[i], {touch.front()});
      free = set_difference(free, {touch.front()});
      moved = true;
    }
    if (!moved) return std::nullopt;
  }
  for (std::size_t guard = g.num_vertices() * g.num_vertices() + 2; guard > 0; --guard) {
    int heavy = -1;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (g.weight_of(parts[i]) > 3 * lambda) heavy = static_cast<int>(i);
    if (heavy < 0) break;
    VertexSet &p = parts[static_cast<std::size_t>(heavy)];
    // carve a connected chunk of weight <= lambda off p whose removal keeps p
    // connected, and hand it to an adjacent part with room
    bool donated = false;
    for (Vertex v : p) {
      for (const auto &piece : connected_components(g, set_difference(p, {v})).components) {
        if (g.weight_of(piece) > lambda) continue;
        if (g.weight_of(p) - g.weight_of(piece) <= lambda) continue;
        VertexSet nbrs = g.neighborhood(piece);
        for (std::size_t j = 0; j < parts.size(); ++j) {
          if (j == static_cast<std::size_t>(heavy) || sets_disjoint(parts[j], nbrs)) continue;
          if (g.weight_of(parts[j]) + g.weight_of(piece) > 3 * lambda) continue;
          parts[j] = set_union(parts[j], piece);
          p = set_difference(p, piece);
          donated = true;
          break;
        }
        if (donated) break;
      }
      if (donated) break;
    }
    if (!donated) return std::nullopt;
  }
  for (const auto &p : parts)
    if (g.weight_of(p) > 3 * lambda) return std::nullopt;
  Bcd b;
  b.lambda = lambda;
  b.body_parts = parts;
  if (verify_bcd(g, lambda, b)) return std::nullopt;
  return b;
}

void validate_seed(const WeightedGraph &g, Weight lambda, const Packing &seed) {
  VertexSet seen;
  for (const auto &p : seed.parts) {
    if (p.empty()) throw std::invalid_argument("empty seed part");
    if (!sets_disjoint(seen, p)) throw std::invalid_argument("overlapping seed parts");
    seen = set_union(seen, p);
    for (Vertex v : p)
      if (!g.has_vertex(v)) throw std::invalid_argument("seed part outside graph");
    if (connected_components(g, p).components.size() != 1)
      throw std::invalid_argument("disconnected seed part");
    if (g.weight_of(p) < lambda + 1) throw std::invalid_argument("underweight seed part");
  }
}

} // namespace

Bcd compute_bcd_seeded(const WeightedGraph &g, Weight lambda, const Packing &seed) {
  if (lambda < 1) throw std::invalid_argument("lambda must be positive");
  validate_seed(g, lambda, seed);
  check_components_heavy(g, lambda);
  if (lambda == 1 && g.unit_weights()) {
    Bcd b = bcd_from_matching(g);
    if (b.head.size() + b.body_parts.size() < seed.parts.size())
      throw std::logic_error("matching-seeded BCD lost packing size");
    return b;
  }
  BcdAccum acc;
  for (const auto &comp : connected_components(g).components) {
    std::vector<VertexSet> local;
    for (const auto &sd : seed.parts)
      if (set_is_subset(sd, comp)) local.push_back(sd);
    resolve_component(g, comp, lambda, acc, {}, local);
  }
  Bcd b = assemble(g, lambda, std::move(acc));
  if (b.head.size() + b.body_parts.size() >= seed.parts.size()) return b;
  if (auto grown = grown_seed_bcd(g, lambda, seed)) return *grown;
  throw std::logic_error("seeded BCD below seed packing size");
  return b;
}

Packing packing_from_bcd(const WeightedGraph &g, const Bcd &b) {
  (void)g;
  Packing p;
  p.threshold = b.lambda + 1;
  p.parts = b.body_parts;
  for (Vertex h : b.head) p.parts.push_back(set_union({h}, b.crown_of(h)));
  return p;
}

// --- claw-free machinery ----------------------------------------------------

VertexSet carve_connected_piece(const WeightedGraph &g, Weight w_cap) {
  if (g.empty()) throw std::invalid_argument("empty graph");
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
  for (Vertex v : g.vertices())
    if (g.weight(v) > w_cap) throw std::invalid_argument("vertex weight exceeds W");
  if (g.total_weight() < w_cap + 1) throw std::invalid_argument("total weight below W+1");

  VertexSet all = g.vertices();
  SpanningTree t = spanning_tree(g, all);
  Vertex v = -1;
  for (Vertex x : t.postorder)
    if (t.subtree_weight[x] >= w_cap + 1) {
      v = x;
      break;
    }
  Weight wv = t.subtree_weight[v];
  if (wv <= 2 * w_cap) return subtree_vertices(t, g, v);

  const auto &cs = t.children[v];
  if (cs.size() != 2) throw std::logic_error("claw-free precondition violated (degree)");
  Vertex c1 = cs[0], c2 = cs[1];
  if (v == all.front()) // root: drop the higher child subtree
    return set_union({v}, subtree_vertices(t, g, c1));
  Vertex u = t.parent.at(v);
  // the DFS tree around {u, v, c1, c2} forces a non-tree edge u-c_j
  if (g.has_edge(u, c2)) return set_union({v}, subtree_vertices(t, g, c1));
  if (g.has_edge(u, c1)) return set_union({v}, subtree_vertices(t, g, c2));
  throw std::logic_error("claw-free precondition violated (no chord)");
}

Bcd clawfree_bcd(const WeightedGraph &g, Weight w_cap) {
  if (!g.is_connected() || g.empty()) throw std::invalid_argument("graph not connected");
  if (static_cast<Weight>(g.num_vertices()) <= w_cap)
    throw std::invalid_argument("need more than W vertices");
  for (Vertex v : g.vertices())
    if (g.weight(v) > w_cap) throw std::invalid_argument("vertex weight exceeds W");
  if (has_induced_claw(g)) throw std::invalid_argument("graph contains an induced claw");

  Bcd b;
  b.lambda = w_cap;
  VertexSet rest = g.vertices();
  while (g.weight_of(rest) >= w_cap + 1) {
    VertexSet s = carve_connected_piece(g.induced(rest), w_cap);
    b.body_parts.push_back(s);
    rest = set_difference(rest, s);
  }
  if (!rest.empty()) {
    VertexSet nbrs = g.neighborhood(rest);
    for (std::size_t i = 0; i < b.body_parts.size(); ++i)
      if (!sets_disjoint(b.body_parts[i], nbrs)) {
        b.body_parts[i] = set_union(b.body_parts[i], rest);
        rest.clear();
        break;
      }
    if (!rest.empty()) throw std::logic_error("leftover piece has no neighbor");
  }
  if (auto bad = verify_bcd(g, w_cap, b))
    throw std::logic_error("claw-free BCD violates item " + std::to_string(*bad));
  return b;
}

std::optional<int> verify_bcd(const WeightedGraph &g, Weight lambda, const Bcd &b) {
  VertexSet body = b.body();
  // 1: partition and separation
  VertexSet all = set_union(set_union(b.head, b.crown), body);
  if (all != g.vertices()) return 1;
  if (b.head.size() + b.crown.size() + body.size() != g.num_vertices()) return 1;
  for (Vertex v : g.neighborhood(b.crown))
    if (!set_contains(b.head, v)) return 1;
  // components of the crown must match the listed ones
  ComponentList cc = connected_components(g, b.crown);
  if (cc.components.size() != b.crown_components.size()) return 3;
  {
    auto sorted = b.crown_components;
    std::sort(sorted.begin(), sorted.end());
    auto expected = cc.components;
    std::sort(expected.begin(), expected.end());
    if (sorted != expected) return 3;
  }
  // 2: crown component weights
  for (const auto &q : b.crown_components)
    if (g.weight_of(q) > lambda) return 2;
  // 3: assignment into neighbourhoods
  if (b.assignment.size() != b.crown_components.size()) return 3;
  for (std::size_t i = 0; i < b.crown_components.size(); ++i) {
    if (!set_contains(b.head, b.assignment[i])) return 3;
    if (!set_contains(g.neighborhood(b.crown_components[i]), b.assignment[i])) return 3;
  }
  // 4: head saturation
  for (Vertex h : b.head)
    if (g.weight(h) + g.weight_of(b.crown_of(h)) <= lambda) return 4;
  // 5: body parts connected with weight in (lambda, 3*lambda]
  VertexSet seen;
  for (const auto &p : b.body_parts) {
    if (p.empty()) return 5;
    if (!sets_disjoint(seen, p)) return 5;
    seen = set_union(seen, p);
    Weight w = g.weight_of(p);
    if (w <= lambda || w > 3 * lambda) return 5;
    if (connected_components(g, p).components.size() != 1) return 5;
  }
  if (seen != body) return 5;
  return std::nullopt;
}

} // namespace crownkernel

#include "crownkernel/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>

namespace crownkernel {

VertexSet make_vertex_set(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool set_contains(const VertexSet &s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_is_subset(const VertexSet &a, const VertexSet &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool sets_disjoint(const VertexSet &a, const VertexSet &b) {
  return set_intersection(a, b).empty();
}

void WeightedGraph::add_vertex(Vertex v, Weight w) {
  if (w < 1) throw std::invalid_argument("vertex weight must be positive");
  weight_[v] = w;
  adj_.try_emplace(v);
}

void WeightedGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("edge endpoint missing");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  auto &au = adj_[u];
  au.insert(std::upper_bound(au.begin(), au.end(), v), v);
  auto &av = adj_[v];
  av.insert(std::upper_bound(av.begin(), av.end(), u), u);
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

void WeightedGraph::erase_vertex(Vertex v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (Vertex u : it->second) {
    auto &au = adj_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
  }
  adj_.erase(it);
  weight_.erase(v);
}

void WeightedGraph::erase_vertices(const VertexSet &vs) {
  for (Vertex v : vs) erase_vertex(v);
}

void WeightedGraph::set_weight(Vertex v, Weight w) {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex");
  if (w < 1) throw std::invalid_argument("vertex weight must be positive");
  weight_[v] = w;
}

Weight WeightedGraph::weight(Vertex v) const {
  auto it = weight_.find(v);
  if (it == weight_.end()) throw std::invalid_argument("unknown vertex");
  return it->second;
}

Weight WeightedGraph::weight_of(const VertexSet &vs) const {
  Weight total = 0;
  for (Vertex v : vs) total += weight(v);
  return total;
}

Weight WeightedGraph::total_weight() const {
  Weight total = 0;
  for (auto &[v, w] : weight_) total += w;
  return total;
}

const std::vector<Vertex> &WeightedGraph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("unknown vertex");
  return it->second;
}

std::size_t WeightedGraph::num_edges() const {
  std::size_t deg_sum = 0;
  for (auto &[v, ns] : adj_) deg_sum += ns.size();
  return deg_sum / 2;
}

VertexSet WeightedGraph::vertices() const {
  VertexSet out;
  out.reserve(weight_.size());
  for (auto &[v, w] : weight_) out.push_back(v);
  return out;
}

VertexSet WeightedGraph::neighborhood(const VertexSet &vs) const {
  std::vector<Vertex> out;
  for (Vertex v : vs)
    for (Vertex u : neighbors(v))
      if (!set_contains(vs, u)) out.push_back(u);
  return make_vertex_set(std::move(out));
}

WeightedGraph WeightedGraph::induced(const VertexSet &vs) const {
  WeightedGraph g;
  for (Vertex v : vs)
    if (has_vertex(v)) g.add_vertex(v, weight(v));
  for (Vertex v : vs) {
    if (!has_vertex(v)) continue;
    for (Vertex u : neighbors(v))
      if (u > v && g.has_vertex(u)) g.add_edge(v, u);
  }
  return g;
}

bool WeightedGraph::is_connected() const {
  if (empty()) return true;
  return connected_components(*this).components.size() == 1;
}

bool WeightedGraph::unit_weights() const {
  for (auto &[v, w] : weight_)
    if (w != 1) return false;
  return true;
}

VertexSet WeightedGraph::component_of(Vertex seed, const VertexSet &allowed) const {
  if (!set_contains(allowed, seed)) return {};
  std::vector<Vertex> stack{seed};
  VertexSet seen{seed};
  std::vector<Vertex> out;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex u : neighbors(v)) {
      if (!set_contains(allowed, u)) continue;
      if (set_contains(seen, u)) continue;
      seen.insert(std::lower_bound(seen.begin(), seen.end(), u), u);
      stack.push_back(u);
    }
  }
  return make_vertex_set(std::move(out));
}

bool WeightedGraph::operator==(const WeightedGraph &other) const {
  return weight_ == other.weight_ && adj_ == other.adj_;
}

ComponentList connected_components(const WeightedGraph &g) {
  return connected_components(g, g.vertices());
}

ComponentList connected_components(const WeightedGraph &g, const VertexSet &within) {
  ComponentList out;
  VertexSet seen;
  for (Vertex v : within) {
    if (set_contains(seen, v)) continue;
    VertexSet comp = g.component_of(v, within);
    seen = set_union(seen, comp);
    out.components.push_back(std::move(comp));
  }
  // component_of starts from ascending ids, so order is already by min id
  return out;
}

Weight component_measure(const WeightedGraph &g, const VertexSet &comp, SizeMode mode) {
  if (mode == SizeMode::Cardinality) return static_cast<Weight>(comp.size());
  return g.weight_of(comp);
}

WeightedGraph drop_light_components(const WeightedGraph &g, long long lambda, SizeMode mode) {
  std::vector<Vertex> keep;
  for (const auto &comp : connected_components(g).components)
    if (component_measure(g, comp, mode) > lambda)
      keep.insert(keep.end(), comp.begin(), comp.end());
  return g.induced(make_vertex_set(std::move(keep)));
}

// --- parsing -------------------------------------------------------------

namespace {

[[noreturn]] void fail(int line, const std::string &msg) {
  throw ParseError{line, msg};
}

} // namespace

WeightedGraph parse_graph(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_p = false;
  long long n = 0, m = 0, edges_seen = 0;
  WeightedGraph g;
  std::vector<bool> weight_set;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue; // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_p) fail(lineno, "duplicate p line");
      if (!(ls >> n >> m) || n < 0 || m < 0) fail(lineno, "malformed p line");
      have_p = true;
      for (long long v = 1; v <= n; ++v) g.add_vertex(static_cast<Vertex>(v), 1);
      weight_set.assign(static_cast<std::size_t>(n) + 1, false);
      continue;
    }
    if (!have_p) fail(lineno, "record before p line");
    if (tag == "v") {
      long long id = 0, w = 0;
      if (!(ls >> id >> w)) fail(lineno, "malformed v line");
      if (id < 1 || id > n) fail(lineno, "vertex id out of range");
      if (w < 1) fail(lineno, "non-positive weight");
      if (weight_set[static_cast<std::size_t>(id)]) fail(lineno, "duplicate weight for vertex");
      weight_set[static_cast<std::size_t>(id)] = true;
      g.set_weight(static_cast<Vertex>(id), w);
      continue;
    }
    if (tag == "e") {
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) fail(lineno, "malformed e line");
      if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "vertex id out of range");
      if (u == v) fail(lineno, "self-loop");
      if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) fail(lineno, "duplicate edge");
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ++edges_seen;
      continue;
    }
    fail(lineno, "unknown record '" + tag + "'");
  }
  if (!have_p) fail(lineno, "missing p line");
  if (edges_seen != m) fail(lineno, "edge count mismatch with p line");
  return g;
}

std::string render_graph(const WeightedGraph &g) {
  // Canonical form: ids compacted to 1..n in ascending original order,
  // weight lines only for non-unit weights, edges sorted.
  VertexSet vs = g.vertices();
  std::map<Vertex, int> remap;
  int next = 1;
  for (Vertex v : vs) remap[v] = next++;
  std::ostringstream out;
  out << "p " << vs.size() << " " << g.num_edges() << "\n";
  for (Vertex v : vs)
    if (g.weight(v) != 1) out << "v " << remap[v] << " " << g.weight(v) << "\n";
  for (Vertex v : vs)
    for (Vertex u : g.neighbors(v))
      if (u > v) out << "e " << remap[v] << " " << remap[u] << "\n";
  return out.str();
}

// --- generation ----------------------------------------------------------

namespace {

// mt19937_64 output is fully specified, so these helpers keep generation
// bit-identical across platforms.
std::uint64_t rand_u64(std::mt19937_64 &rng) { return rng(); }

Weight rand_weight(std::mt19937_64 &rng, Weight lo, Weight hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<Weight>(rand_u64(rng) % static_cast<std::uint64_t>(hi - lo + 1));
}

bool rand_coin(std::mt19937_64 &rng, double prob) {
  if (prob <= 0.0) return false;
  if (prob >= 1.0) return true;
  const double scale = 9007199254740992.0; // 2^53
  auto threshold = static_cast<std::uint64_t>(prob * scale);
  return (rand_u64(rng) >> 11) < threshold;
}

} // namespace

WeightedGraph generate_gnp(const GnpParams &p, std::uint64_t seed) {
  if (p.n < 0 || p.wmin < 1 || p.wmax < p.wmin)
    throw std::invalid_argument("invalid gnp params");
  std::mt19937_64 rng(seed);
  WeightedGraph g;
  for (int v = 1; v <= p.n; ++v) g.add_vertex(v, rand_weight(rng, p.wmin, p.wmax));
  for (int u = 1; u <= p.n; ++u)
    for (int v = u + 1; v <= p.n; ++v)
      if (rand_coin(rng, p.edge_prob)) g.add_edge(u, v);
  return g;
}

WeightedGraph generate_clawfree_linegraph(const ClawFreeLineGraphParams &p, std::uint64_t seed) {
  if (p.base_n < 0) throw std::invalid_argument("invalid line graph params");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> base_edges;
  for (int u = 1; u <= p.base_n; ++u)
    for (int v = u + 1; v <= p.base_n; ++v)
      if (rand_coin(rng, p.base_edge_prob)) base_edges.emplace_back(u, v);
  WeightedGraph g;
  for (std::size_t i = 0; i < base_edges.size(); ++i) g.add_vertex(static_cast<Vertex>(i + 1), 1);
  for (std::size_t i = 0; i < base_edges.size(); ++i)
    for (std::size_t j = i + 1; j < base_edges.size(); ++j) {
      auto [a, b] = base_edges[i];
      auto [c, d] = base_edges[j];
      if (a == c || a == d || b == c || b == d)
        g.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
    }
  if (has_induced_claw(g)) throw std::logic_error("line graph self-check failed");
  return g;
}

WeightedGraph generate_disjoint_cliques(const DisjointCliquesParams &p, std::uint64_t seed) {
  if (p.count < 0 || p.size < 1 || p.wmin < 1 || p.wmax < p.wmin)
    throw std::invalid_argument("invalid clique params");
  std::mt19937_64 rng(seed);
  WeightedGraph g;
  int id = 1;
  for (int c = 0; c < p.count; ++c) {
    int first = id;
    for (int i = 0; i < p.size; ++i) g.add_vertex(id++, rand_weight(rng, p.wmin, p.wmax));
    for (int u = first; u < id; ++u)
      for (int v = u + 1; v < id; ++v) g.add_edge(u, v);
  }
  return g;
}

bool has_induced_claw(const WeightedGraph &g) {
  for (Vertex v : g.vertices()) {
    const auto &ns = g.neighbors(v);
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        if (g.has_edge(ns[i], ns[j])) continue;
        for (std::size_t k = j + 1; k < ns.size(); ++k) {
          if (g.has_edge(ns[i], ns[k]) || g.has_edge(ns[j], ns[k])) continue;
          return true;
        }
      }
  }
  return false;
}

} // namespace crownkernel

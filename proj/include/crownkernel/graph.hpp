#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crownkernel {

using Vertex = int;
using Weight = long long;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> ids);
bool set_contains(const VertexSet &s, Vertex v);
VertexSet set_union(const VertexSet &a, const VertexSet &b);
VertexSet set_difference(const VertexSet &a, const VertexSet &b);
VertexSet set_intersection(const VertexSet &a, const VertexSet &b);
bool set_is_subset(const VertexSet &a, const VertexSet &b);
bool sets_disjoint(const VertexSet &a, const VertexSet &b);

// Vertex-weighted undirected simple graph. Ids are 1-based and stable:
// deleting vertices never renumbers the survivors.
class WeightedGraph {
public:
  WeightedGraph() = default;

  void add_vertex(Vertex v, Weight w = 1);
  void add_edge(Vertex u, Vertex v);
  bool has_vertex(Vertex v) const { return weight_.count(v) > 0; }
  bool has_edge(Vertex u, Vertex v) const;
  void erase_vertex(Vertex v);
  void erase_vertices(const VertexSet &vs);
  void set_weight(Vertex v, Weight w);

  Weight weight(Vertex v) const;
  Weight weight_of(const VertexSet &vs) const;
  Weight total_weight() const;
  const std::vector<Vertex> &neighbors(Vertex v) const;

  std::size_t num_vertices() const { return weight_.size(); }
  std::size_t num_edges() const;
  bool empty() const { return weight_.empty(); }

  VertexSet vertices() const;
  // Neighbourhood of a set, excluding the set itself.
  VertexSet neighborhood(const VertexSet &vs) const;

  WeightedGraph induced(const VertexSet &vs) const;
  bool is_connected() const;
  bool unit_weights() const;

  // Induced subgraph on one connected piece, grown from `seed` but
  // restricted to `allowed` vertices.
  VertexSet component_of(Vertex seed, const VertexSet &allowed) const;

  bool operator==(const WeightedGraph &other) const;

private:
  std::map<Vertex, Weight> weight_;
  std::map<Vertex, std::vector<Vertex>> adj_;
};

// Pairwise disjoint connected vertex sets, ordered by ascending minimum id.
struct ComponentList {
  std::vector<VertexSet> components;
};

ComponentList connected_components(const WeightedGraph &g);
// Connected components of the subgraph induced by `within`.
ComponentList connected_components(const WeightedGraph &g, const VertexSet &within);

// Drops every component whose weight (weighted mode) or vertex count
// (unweighted mode) is at most lambda.
enum class SizeMode { Cardinality, Weight };
WeightedGraph drop_light_components(const WeightedGraph &g, long long lambda,
                                    SizeMode mode = SizeMode::Weight);

Weight component_measure(const WeightedGraph &g, const VertexSet &comp, SizeMode mode);

// --- instance I/O ------------------------------------------------------

struct ParseError {
  int line;
  std::string message;
};

// Format, one record per line:
//   c <comment>
//   p <n> <m>        exactly once, first non-comment line; ids are 1..n
//   v <id> <weight>  optional, at most once per id
//   e <u> <v>        m lines, u != v, duplicates rejected
WeightedGraph parse_graph(const std::string &text);
std::string render_graph(const WeightedGraph &g);

// --- instance generation ------------------------------------------------

struct GnpParams {
  int n = 0;
  double edge_prob = 0.5;
  Weight wmin = 1;
  Weight wmax = 1;
};

struct ClawFreeLineGraphParams {
  int base_n = 0;
  double base_edge_prob = 0.5;
};

struct DisjointCliquesParams {
  int count = 0;
  int size = 0;
  Weight wmin = 1;
  Weight wmax = 1;
};

WeightedGraph generate_gnp(const GnpParams &p, std::uint64_t seed);
WeightedGraph generate_clawfree_linegraph(const ClawFreeLineGraphParams &p, std::uint64_t seed);
WeightedGraph generate_disjoint_cliques(const DisjointCliquesParams &p, std::uint64_t seed);

// True iff g contains an induced K_{1,3}.
bool has_induced_claw(const WeightedGraph &g);

} // namespace crownkernel

#pragma once

#include "crownkernel/dbe.hpp"
#include "crownkernel/graph.hpp"

#include <optional>
#include <vector>

namespace crownkernel {

// Disjoint connected vertex sets, each of weight at least `threshold`.
struct Packing {
  std::vector<VertexSet> parts;
  Weight threshold = 1;
};

// Lambda-balanced crown decomposition: {head, crown, body} partition the
// vertex set, the head separates the crown, crown components weigh at most
// lambda, every head vertex plus its crown weighs more than lambda, and the
// body splits into connected parts of weight in (lambda, 3*lambda].
struct Bcd {
  VertexSet crown;
  VertexSet head;
  std::vector<VertexSet> body_parts; // the partition of R
  std::vector<VertexSet> crown_components;
  std::vector<Vertex> assignment; // per crown component: its head
  Weight lambda = 1;

  VertexSet body() const;
  VertexSet crown_of(Vertex head) const;
};

// Contract-first constructor. Requires every component of g to weigh more
// than lambda.
Bcd compute_bcd(const WeightedGraph &g, Weight lambda);

// Variant initialized from a maximal (lambda+1)-packing; the derived packing
// never gets smaller than the seed, so a maximum seed yields a maximum
// derived packing.
Bcd compute_bcd_seeded(const WeightedGraph &g, Weight lambda, const Packing &seed);

// The body parts together with the head stars form a (lambda+1)-packing of
// size |head| + |body parts|.
Packing packing_from_bcd(const WeightedGraph &g, const Bcd &b);

// Maximum-cardinality matching (general graphs, blossom contraction),
// encoded as a 2-packing. Requires unit weights.
Packing maximum_matching(const WeightedGraph &g);

// Connected S with W+1 <= w(S) <= 2W whose removal keeps the rest connected.
// Requires g connected, claw-free, w(V) >= W+1 > max vertex weight.
VertexSet carve_connected_piece(const WeightedGraph &g, Weight w_cap);

// BCD with empty crown and head; all body parts weigh at most 2W except at
// most one of weight at most 3W. Requires g connected, claw-free,
// |V| > W >= max vertex weight.
Bcd clawfree_bcd(const WeightedGraph &g, Weight w_cap);

// Re-evaluates the five BCD conditions; returns the first violated item.
std::optional<int> verify_bcd(const WeightedGraph &g, Weight lambda, const Bcd &b);

} // namespace crownkernel

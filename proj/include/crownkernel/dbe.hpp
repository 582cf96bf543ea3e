#pragma once

#include "crownkernel/graph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace crownkernel {

// Per-head demands.
struct Demands {
  std::map<Vertex, Weight> values;

  static Demands uniform(const VertexSet &heads, Weight d);
  // d_h = a - 2 + b * (w(h) + 1)
  static Demands family_y(const WeightedGraph &g, const VertexSet &heads, Weight a, Weight b);
  // d_h = w(h) - 1 + (ceil(sqrt(s)) + 1) * lambda
  static Demands family_z(const WeightedGraph &g, const VertexSet &heads, Weight s, Weight lambda);

  Weight at(Vertex v) const { return values.at(v); }
};

// Demanded balanced expansion: heads split into the over-demand side a1 and
// the under-demand side a2; every component of G[B] is assigned to exactly
// one neighbouring head.
struct Dbe {
  VertexSet a1;
  VertexSet a2;
  Weight y = 1;
  Demands demands;
  std::vector<VertexSet> components;  // components of G[B], ascending min id
  std::vector<Vertex> assignment;     // per component: its head
  VertexSet assigned_to(Vertex head) const;
  VertexSet assigned_union(const VertexSet &heads) const;
  Weight load(const WeightedGraph &g, Vertex head) const;
};

// Fractional stage: components may spread integer mass over several heads.
struct FractionalDbe {
  VertexSet a1;
  VertexSet a2;
  Weight y = 1;
  Demands demands;
  std::vector<VertexSet> components;
  std::vector<std::map<Vertex, Weight>> mass; // per component: head -> mass
};

// Computes a DBE of G[a_side ∪ b_side]. Flow classification: heads that can
// still reroute mass to the sink form a2, the rest a1; per-head loads then
// sit in the [d - y + 1, d + y - 1] band around their demands.
Dbe compute_dbe(const WeightedGraph &g, const VertexSet &a_side, const VertexSet &b_side,
                const Demands &demands, Weight y);

// Fractional variant, before integral rounding.
FractionalDbe compute_fractional_dbe(const WeightedGraph &g, const VertexSet &a_side,
                                     const VertexSet &b_side, const Demands &demands, Weight y);

// Rounds component mass to whole-component assignments; per-head load moves
// by at most y - 1.
Dbe round_fractional(const WeightedGraph &g, const FractionalDbe &fr);

struct CrownDecomposition {
  VertexSet crown;
  VertexSet head;
  std::vector<VertexSet> crown_components;
  std::vector<Vertex> assignment;
  Weight x = 1;
  Weight y = 1;
};

// The a1 side of a uniform-demand DBE as an (x, y) crown decomposition, or
// nothing when a1 is empty.
std::optional<CrownDecomposition> extract_crown(const Dbe &dbe);

// Re-evaluates the four DBE conditions; returns the first violated one.
std::optional<int> verify_dbe(const WeightedGraph &g, const VertexSet &a_side,
                              const VertexSet &b_side, const Dbe &dbe);

} // namespace crownkernel

#pragma once

#include "crownkernel/graph.hpp"

namespace ck = crownkernel;

inline ck::WeightedGraph path_graph(int n) {
  ck::WeightedGraph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline ck::WeightedGraph cycle_graph(int n) {
  ck::WeightedGraph g = path_graph(n);
  if (n >= 3) g.add_edge(1, n);
  return g;
}

inline ck::WeightedGraph star_graph(int leaves) {
  ck::WeightedGraph g;
  g.add_vertex(1);
  for (int v = 2; v <= leaves + 1; ++v) {
    g.add_vertex(v);
    g.add_edge(1, v);
  }
  return g;
}

inline ck::WeightedGraph complete_graph(int n, int first_id = 1) {
  ck::WeightedGraph g;
  for (int v = first_id; v < first_id + n; ++v) g.add_vertex(v);
  for (int u = first_id; u < first_id + n; ++u)
    for (int v = u + 1; v < first_id + n; ++v) g.add_edge(u, v);
  return g;
}

inline ck::WeightedGraph disjoint_union(const ck::WeightedGraph &a, const ck::WeightedGraph &b) {
  ck::WeightedGraph g = a;
  int shift = 0;
  for (ck::Vertex v : a.vertices()) shift = std::max(shift, v);
  for (ck::Vertex v : b.vertices()) g.add_vertex(v + shift, b.weight(v));
  for (ck::Vertex v : b.vertices())
    for (ck::Vertex u : b.neighbors(v))
      if (u > v) g.add_edge(v + shift, u + shift);
  return g;
}

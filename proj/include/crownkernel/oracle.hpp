#pragma once

#include "crownkernel/graph.hpp"
#include "crownkernel/kernels.hpp"

#include <optional>

namespace crownkernel {

inline constexpr int kDefaultOracleCap = 14;
inline constexpr int kDefaultPairCap = 10;

struct OracleResult {
  bool yes = false;
  std::optional<Weight> optimum;
  std::optional<VertexSet> witness;
  std::optional<Weight> p_ell; // VI only: min over solutions of the heaviest component
};

OracleResult brute_vi(const WeightedGraph &g, Weight p, int cap = kDefaultOracleCap);
OracleResult brute_wvi(const WeightedGraph &g, Weight p, int cap = kDefaultOracleCap);
OracleResult brute_coc(const WeightedGraph &g, Weight k, Weight w_cap, int cap = kDefaultOracleCap);
OracleResult brute_wcoc(const WeightedGraph &g, Weight k, Weight w_cap, int cap = kDefaultOracleCap);

struct PackingResult {
  int size = 0;
  std::vector<VertexSet> parts;
};

// Exact maximum number of disjoint connected subgraphs of weight >= lambda.
PackingResult brute_max_packing(const WeightedGraph &g, Weight lambda,
                                int cap = kDefaultOracleCap);

// Minimal strictly reducible pair by exhaustive head-set enumeration with
// flow-checked assignments, or nothing.
std::optional<ReduciblePair> brute_strict_pair(const WeightedGraph &g, Weight w_cap,
                                               int cap = kDefaultPairCap);

enum class ProblemKind { Vi, Wvi, Coc, Wcoc };

struct ViLike {
  WeightedGraph graph;
  Weight budget;
  Weight w_cap; // COC only
};

// Runs the matching brute solver on both instances and compares answers.
bool check_equivalence(ProblemKind kind, const WeightedGraph &g1, Weight budget1,
                       const WeightedGraph &g2, Weight budget2, Weight w_cap = 1,
                       int cap = kDefaultOracleCap);

} // namespace crownkernel

#pragma once

#include "crownkernel/bcd.hpp"
#include "crownkernel/dbe.hpp"
#include "crownkernel/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crownkernel {

// --- instances --------------------------------------------------------------

struct ViInstance {
  WeightedGraph graph;
  Weight p = 0;
};
using WviInstance = ViInstance;

struct CocInstance {
  WeightedGraph graph;
  Weight k = 0;
  Weight w_cap = 1;
};
using WcocInstance = CocInstance;

// --- outcomes ----------------------------------------------------------------

enum class Verdict { DecidedNo, DecidedYes, Reduced, AlreadySmall };

struct ReductionRecord {
  VertexSet head;   // removed and charged to the budget
  VertexSet crown;  // removed for free
  Weight decrement = 0;
};

struct KernelOutcome {
  Verdict verdict = Verdict::AlreadySmall;
  WeightedGraph reduced_graph;
  Weight reduced_budget = 0; // p (VI) or k (COC) after reductions
  std::vector<ReductionRecord> certificate;
  std::optional<Weight> lambda_lb;
  bool weight_warning = false;  // non-unit weights coerced by an unweighted solver
  long long search_nodes = 0;   // FPT mode: nodes visited
  long long max_branching = 0;  // FPT mode: widest branch set
  long long depth_cap = 0;      // FPT mode: min(3t, k)
};

// --- reducible-pair machinery -------------------------------------------------

struct ReduciblePair {
  VertexSet a_side;
  VertexSet b_side;
  std::vector<VertexSet> b_components;
  std::vector<std::map<Vertex, Weight>> mass; // per component: head -> units
  std::optional<Vertex> strict_witness;
};

// AlgCOC step 2b: DBE over A = S ∪ H(bcd) and B = crown ∪ small components of
// G - S, uniform demand 2W-1; returns the head/crown pair when a1 is nonempty.
std::optional<std::pair<VertexSet, VertexSet>> find_reducible_structure(const WeightedGraph &g,
                                                                        const VertexSet &s,
                                                                        const Bcd &bcd,
                                                                        Weight w_cap);

// The single vertex whose removal leaves only components of size <= W, when
// |V| > 2W; unique when it exists.
std::optional<Vertex> unique_w_separator(const WeightedGraph &g_r, Weight w_cap);

// Body parts of size > 2W admitting a one-vertex W-separator, and those
// separators.
std::pair<std::vector<VertexSet>, VertexSet> compute_r_prime(const WeightedGraph &g,
                                                             const Bcd &bcd, Weight w_cap);

// Removes head ∪ crown and charges `decrement`; the head must separate the
// crown from the rest.
template <typename Inst>
Inst apply_reduction(const Inst &inst, const VertexSet &head, const VertexSet &crown,
                     Weight decrement);

// --- kernelizers ---------------------------------------------------------------

// `max_iterations` overrides the built-in reduction-loop cap when nonzero.
KernelOutcome kernelize_vi(const ViInstance &inst, std::size_t max_iterations = 0);
KernelOutcome kernelize_wvi(const WviInstance &inst, std::size_t max_iterations = 0);
KernelOutcome kernelize_wcoc(const WcocInstance &inst, std::size_t max_iterations = 0);
KernelOutcome kernelize_coc_fpt(const CocInstance &inst, std::size_t max_iterations = 0);

enum class Coc2Mode { MatchingSeeded, ClawFree };
KernelOutcome kernelize_coc2(const CocInstance &inst, Coc2Mode mode,
                             std::size_t max_iterations = 0);

} // namespace crownkernel

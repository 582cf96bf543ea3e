#include "crownkernel/kernels.hpp"

#include "crownkernel/intmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace crownkernel {

namespace {

Demands bump(Demands d) {
  for (auto &[v, x] : d.values) x += 1;
  return d;
}

// w(G) < 3*p*(p + sqrt(p)*b), exact.
bool below_wvi_gate(Weight total, Weight p, Weight b) {
  return below_three_mu_bound(total, p, p, b);
}


// Packing refutation sweep: a solution with heaviest remaining component c
// must hit every part of a (c+1)-packing, so t_c + c <= p is necessary for
// some c; when that fails for every c in [0..p] the instance has no solution.
bool packing_sweep_refutes(const WeightedGraph &g, Weight p, SizeMode mode) {
  if (g.total_weight() <= p) return false; // c = 0 admits S = V
  for (Weight c = 1; c <= p; ++c) {
    WeightedGraph heavy = drop_light_components(g, c, mode);
    Weight t = 0;
    if (!heavy.empty()) {
      Bcd b = compute_bcd(heavy, c);
      t = static_cast<Weight>(b.head.size() + b.body_parts.size());
    }
    if (t + c <= p) return false;
  }
  return true;
}

struct StripResult {
  WeightedGraph graph;
  VertexSet removed;
};

StripResult strip_light(const WeightedGraph &g, Weight lambda, SizeMode mode) {
  StripResult out;
  out.graph = drop_light_components(g, lambda, mode);
  out.removed = set_difference(g.vertices(), out.graph.vertices());
  return out;
}

WeightedGraph coerce_unit(const WeightedGraph &g, bool &warned) {
  if (g.unit_weights()) return g;
  warned = true;
  WeightedGraph out = g;
  for (Vertex v : out.vertices()) out.set_weight(v, 1);
  return out;
}

void record_strip(KernelOutcome &out, const VertexSet &removed) {
  if (removed.empty()) return;
  out.certificate.push_back({{}, removed, 0});
}

void record_reduction(KernelOutcome &out, const VertexSet &head, const VertexSet &crown,
                      Weight dec) {
  out.certificate.push_back({head, crown, dec});
}

[[noreturn]] void overrun() { throw std::logic_error("kernelization exceeded its iteration cap"); }

} // namespace

template <typename Inst>
Inst apply_reduction(const Inst &inst, const VertexSet &head, const VertexSet &crown,
                     Weight decrement) {
  for (Vertex v : set_union(head, crown))
    if (!inst.graph.has_vertex(v)) throw std::invalid_argument("reduction names unknown vertex");
  VertexSet removed = set_union(head, crown);
  for (Vertex v : inst.graph.neighborhood(crown))
    if (!set_contains(head, v)) throw std::invalid_argument("head does not separate crown");
  Inst out = inst;
  out.graph.erase_vertices(removed);
  if constexpr (requires { out.p; })
    out.p -= decrement;
  else
    out.k -= decrement;
  return out;
}

template ViInstance apply_reduction<ViInstance>(const ViInstance &, const VertexSet &,
                                                const VertexSet &, Weight);
template CocInstance apply_reduction<CocInstance>(const CocInstance &, const VertexSet &,
                                                  const VertexSet &, Weight);

// --- vertex integrity (unit weights) -----------------------------------------

KernelOutcome kernelize_vi(const ViInstance &inst, std::size_t max_iterations) {
  KernelOutcome out;
  WeightedGraph g = coerce_unit(inst.graph, out.weight_warning);
  Weight p = inst.p;
  const std::size_t cap = max_iterations ? max_iterations : g.num_vertices() + 3;

  for (std::size_t iter = 0;; ++iter) {
    if (iter > cap) overrun();
    if (p < 0) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    ComponentList comps = connected_components(g);
    bool heavy = false;
    for (const auto &c : comps.components)
      if (static_cast<Weight>(c.size()) > p) heavy = true;
    if (!heavy) {
      out.verdict = g.empty() && !out.certificate.empty() ? Verdict::Reduced
                                                          : Verdict::DecidedYes;
      out.reduced_graph = g;
      out.reduced_budget = p;
      return out;
    }
    if (p <= 1) { // a unit vertex already weighs >= p while a heavy component exists
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    // step 1: a p-BCD with packing larger than p refutes the instance at any
    // size, so it runs ahead of the size gate
    StripResult sp = strip_light(g, p, SizeMode::Cardinality);
    Bcd bcd1 = compute_bcd(sp.graph, p);
    if (static_cast<Weight>(bcd1.head.size() + bcd1.body_parts.size()) > p) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    if (static_cast<Weight>(g.num_vertices()) <= 3 * p * p) {
      if (packing_sweep_refutes(g, p, SizeMode::Cardinality)) {
        out.verdict = Verdict::DecidedNo;
        return out;
      }
      out.verdict = out.certificate.empty() ? Verdict::AlreadySmall : Verdict::Reduced;
      out.reduced_graph = g;
      out.reduced_budget = p;
      return out;
    }

    // step 2: the 1-BCD either strips isolated vertices or hosts a (p,1)-CD
    StripResult s1 = strip_light(g, 1, SizeMode::Cardinality);
    Bcd bcd2 = compute_bcd(s1.graph, 1);
    Weight pack2 = static_cast<Weight>(bcd2.head.size() + bcd2.body_parts.size());
    if (pack2 <= p) {
      if (!s1.removed.empty()) {
        record_strip(out, s1.removed);
        g = s1.graph;
        continue;
      }
      Dbe dbe = compute_dbe(g, bcd2.head, bcd2.crown, Demands::uniform(bcd2.head, p + 2), 1);
      if (dbe.a1.empty()) throw std::logic_error("guaranteed (p,1)-CD missing");
      VertexSet head = dbe.a1;
      VertexSet crown = dbe.assigned_union(head);
      record_reduction(out, head, crown, static_cast<Weight>(head.size()));
      g.erase_vertices(set_union(head, crown));
      p -= static_cast<Weight>(head.size());
      continue;
    }

    // step 3: bracket a failing lambda against a succeeding lambda+1
    auto packing_at = [&](Weight lam) {
      StripResult s = strip_light(g, lam, SizeMode::Cardinality);
      if (s.graph.empty()) return std::pair<Weight, Bcd>(0, Bcd{});
      Bcd b = compute_bcd(s.graph, lam);
      return std::pair<Weight, Bcd>(
          static_cast<Weight>(b.head.size() + b.body_parts.size()), std::move(b));
    };
    Weight lo = 1, hi = p; // packing(1) > p from step 2; packing(p) <= p from step 1
    while (hi - lo > 1) {
      Weight mid = lo + (hi - lo) / 2;
      (packing_at(mid).first > p ? lo : hi) = mid;
    }
    Weight lambda = lo;
    out.lambda_lb = std::max<Weight>(out.lambda_lb.value_or(0), lambda + 1);
    StripResult s4 = strip_light(g, lambda + 1, SizeMode::Cardinality);
    if (!s4.removed.empty()) {
      record_strip(out, s4.removed);
      g = s4.graph;
      continue;
    }
    Bcd bcd4 = compute_bcd(s4.graph, lambda + 1);
    Dbe dbe = compute_dbe(g, bcd4.head, bcd4.crown,
                          Demands::uniform(bcd4.head, p + lambda + 2), lambda + 1);
    if (dbe.a1.empty()) throw std::logic_error("guaranteed (p,lambda+1)-CD missing");
    VertexSet head = dbe.a1;
    VertexSet crown = dbe.assigned_union(head);
    record_reduction(out, head, crown, static_cast<Weight>(head.size()));
    g.erase_vertices(set_union(head, crown));
    p -= static_cast<Weight>(head.size());
  }
}

// --- weighted vertex integrity -----------------------------------------------

KernelOutcome kernelize_wvi(const WviInstance &inst, std::size_t max_iterations) {
  KernelOutcome out;
  WeightedGraph g = inst.graph;
  Weight p = inst.p;
  const std::size_t cap = max_iterations ? max_iterations : g.num_vertices() + 3;

  for (std::size_t iter = 0;; ++iter) {
    if (iter > cap) overrun();
    if (p < 0) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    ComponentList comps = connected_components(g);
    bool heavy = false;
    for (const auto &c : comps.components)
      if (g.weight_of(c) > p) heavy = true;
    if (!heavy) {
      out.verdict = g.empty() && !out.certificate.empty() ? Verdict::Reduced
                                                          : Verdict::DecidedYes;
      out.reduced_graph = g;
      out.reduced_budget = p;
      return out;
    }
    bool big_vertex = false;
    for (Vertex v : g.vertices())
      if (g.weight(v) >= p) big_vertex = true;
    if (big_vertex) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    if (below_wvi_gate(g.total_weight(), p, 1)) {
      // already below 3p(p + sqrt(p)) <= 3p(p + sqrt(p) * p_l)
      if (packing_sweep_refutes(g, p, SizeMode::Weight)) {
        out.verdict = Verdict::DecidedNo;
        return out;
      }
      out.verdict = out.certificate.empty() ? Verdict::AlreadySmall : Verdict::Reduced;
      out.reduced_graph = g;
      out.reduced_budget = p;
      return out;
    }

    // crown structures at a given lambda: BCD plus the Z-demand DBE
    struct CrownStructure {
      StripResult strip;
      Bcd bcd;
      Dbe z;
      Weight packing;
      bool fails;
    };
    auto crown_structure_at = [&](Weight lam) {
      CrownStructure cs{strip_light(g, lam, SizeMode::Weight), {}, {}, 0, false};
      if (cs.strip.graph.empty()) return cs;
      cs.bcd = compute_bcd(cs.strip.graph, lam);
      cs.packing = static_cast<Weight>(cs.bcd.head.size() + cs.bcd.body_parts.size());
      if (cs.packing > p) {
        cs.fails = true;
        return cs;
      }
      cs.z = compute_dbe(cs.strip.graph, cs.bcd.head, cs.bcd.crown,
                         bump(Demands::family_z(cs.strip.graph, cs.bcd.head, p, lam)), lam);
      cs.fails = exceeds_two_mu_pow15(cs.strip.graph.weight_of(cs.z.a1), p);
      return cs;
    };

    // step 1 at lambda = 1
    CrownStructure c1 = crown_structure_at(1);
    if (!c1.strip.removed.empty()) {
      record_strip(out, c1.strip.removed);
      g = c1.strip.graph;
      continue;
    }
    if (!c1.fails) {
      Dbe d2 = compute_dbe(g, c1.bcd.head, c1.bcd.crown,
                           bump(Demands::family_y(g, c1.bcd.head, p, 1)), 1);
      if (d2.a1.empty()) throw std::logic_error("guaranteed wVI reduction missing");
      VertexSet head = d2.a1;
      VertexSet crown = d2.assigned_union(head);
      Weight dec = g.weight_of(head);
      if (p - dec < 0) {
        out.verdict = Verdict::DecidedNo;
        return out;
      }
      record_reduction(out, head, crown, dec);
      g.erase_vertices(set_union(head, crown));
      p -= dec;
      continue;
    }

    // step 2: bracket failing lambda below a succeeding lambda+1
    CrownStructure cp = crown_structure_at(p);
    if (cp.fails) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    Weight lo = 1, hi = p;
    CrownStructure chi = std::move(cp);
    while (hi - lo > 1) {
      Weight mid = lo + (hi - lo) / 2;
      CrownStructure cm = crown_structure_at(mid);
      if (cm.fails)
        lo = mid;
      else {
        hi = mid;
        chi = std::move(cm);
      }
    }
    Weight lambda = lo; // fails; hi = lambda + 1 succeeds
    out.lambda_lb = std::max<Weight>(out.lambda_lb.value_or(0), lambda + 1);
    if (!chi.strip.removed.empty()) {
      record_strip(out, chi.strip.removed);
      g = chi.strip.graph;
      continue;
    }
    if (below_wvi_gate(g.total_weight(), p, lambda + 1)) {
      out.verdict = out.certificate.empty() ? Verdict::AlreadySmall : Verdict::Reduced;
      out.reduced_graph = g;
      out.reduced_budget = p;
      return out;
    }
    // step 3: reduce with the Y demands at lambda+1
    Dbe d5 = compute_dbe(g, chi.bcd.head, chi.bcd.crown,
                         bump(Demands::family_y(g, chi.bcd.head, p, lambda + 1)), lambda + 1);
    if (d5.a1.empty()) throw std::logic_error("guaranteed wVI step-3 reduction missing");
    VertexSet head = d5.a1;
    VertexSet crown = d5.assigned_union(head);
    Weight dec = g.weight_of(head);
    if (p - dec < 0) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    record_reduction(out, head, crown, dec);
    g.erase_vertices(set_union(head, crown));
    p -= dec;
  }
}

// --- weighted component order connectivity ------------------------------------

KernelOutcome kernelize_wcoc(const WcocInstance &inst, std::size_t max_iterations) {
  KernelOutcome out;
  if (inst.w_cap < 1) throw std::invalid_argument("W must be positive");
  WeightedGraph g = inst.graph;
  Weight k = inst.k;
  const std::size_t cap = max_iterations ? max_iterations
                                         : g.num_vertices() +
                                               static_cast<std::size_t>(std::max<Weight>(k, 0)) + 3;

  for (std::size_t iter = 0;; ++iter) {
    if (iter > cap) overrun();
    StripResult s = strip_light(g, inst.w_cap, SizeMode::Weight);
    if (!s.removed.empty()) {
      record_strip(out, s.removed);
      g = s.graph;
    }
    if (k < 0) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    if (g.empty()) {
      out.verdict = out.certificate.empty() ? Verdict::DecidedYes : Verdict::Reduced;
      out.reduced_graph = g;
      out.reduced_budget = k;
      return out;
    }
    Bcd bcd = compute_bcd(g, inst.w_cap);
    if (static_cast<Weight>(bcd.head.size() + bcd.body_parts.size()) > k) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    Weight mu = std::max(k, inst.w_cap);
    if (below_three_mu_bound(g.total_weight(), mu, k, inst.w_cap)) {
      out.verdict = out.certificate.empty() ? Verdict::AlreadySmall : Verdict::Reduced;
      out.reduced_graph = g;
      out.reduced_budget = k;
      return out;
    }
    Dbe dbe = compute_dbe(g, bcd.head, bcd.crown,
                          bump(Demands::family_y(g, bcd.head, inst.w_cap, inst.w_cap)),
                          inst.w_cap);
    if (dbe.a1.empty()) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    VertexSet head = dbe.a1;
    VertexSet crown = dbe.assigned_union(head);
    Weight dec = g.weight_of(head);
    if (k - dec < 0) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    record_reduction(out, head, crown, dec);
    g.erase_vertices(set_union(head, crown));
    k -= dec;
  }
}

// --- reducible-pair utilities ---------------------------------------------------

std::optional<Vertex> unique_w_separator(const WeightedGraph &g_r, Weight w_cap) {
  if (static_cast<Weight>(g_r.num_vertices()) <= 2 * w_cap) return std::nullopt;
  for (Vertex v : g_r.vertices()) {
    VertexSet rest = set_difference(g_r.vertices(), {v});
    bool ok = true;
    for (const auto &c : connected_components(g_r, rest).components)
      if (static_cast<Weight>(c.size()) > w_cap) {
        ok = false;
        break;
      }
    if (ok) return v;
  }
  return std::nullopt;
}

std::pair<std::vector<VertexSet>, VertexSet> compute_r_prime(const WeightedGraph &g,
                                                             const Bcd &bcd, Weight w_cap) {
  std::vector<VertexSet> r_prime;
  std::vector<Vertex> seps;
  for (const auto &r : bcd.body_parts) {
    if (static_cast<Weight>(r.size()) <= 2 * w_cap) continue;
    if (auto v = unique_w_separator(g.induced(r), w_cap)) {
      r_prime.push_back(r);
      seps.push_back(*v);
    }
  }
  return {r_prime, make_vertex_set(std::move(seps))};
}

std::optional<std::pair<VertexSet, VertexSet>> find_reducible_structure(const WeightedGraph &g,
                                                                        const VertexSet &s,
                                                                        const Bcd &bcd,
                                                                        Weight w_cap) {
  VertexSet a_side = set_union(s, bcd.head);
  VertexSet rest = set_difference(g.vertices(), s);
  VertexSet b_side = bcd.crown;
  for (const auto &c : connected_components(g, rest).components)
    if (static_cast<Weight>(c.size()) <= w_cap) b_side = set_union(b_side, c);
  b_side = set_difference(b_side, a_side);
  if (b_side.empty() || a_side.empty()) return std::nullopt;
  Dbe dbe = compute_dbe(g, a_side, b_side, Demands::uniform(a_side, 2 * w_cap), w_cap);
  if (dbe.a1.empty()) return std::nullopt;
  return std::make_pair(dbe.a1, dbe.assigned_union(dbe.a1));
}

// --- COC, FPT search tree ---------------------------------------------------------

namespace {

struct CocSearch {
  const WeightedGraph &g;
  Weight k;
  Weight w_cap;
  Weight depth_cap;
  long long nodes = 0;
  long long max_branching = 0;

  enum class Status { Exhausted, Yes, No, Reduced };
  Status status = Status::Exhausted;
  VertexSet witness;
  VertexSet red_head, red_crown;

  bool run(VertexSet s, Weight depth) {
    ++nodes;
    WeightedGraph stripped =
        drop_light_components(g.induced(set_difference(g.vertices(), s)), w_cap,
                              SizeMode::Cardinality);
    if (stripped.empty()) {
      status = Status::Yes;
      witness = s;
      return true;
    }
    Bcd bcd = compute_bcd(stripped, w_cap);
    if (static_cast<Weight>(bcd.head.size() + bcd.body_parts.size()) > k) {
      status = Status::No;
      return true;
    }
    if (auto red = find_reducible_structure(g, s, bcd, w_cap)) {
      status = Status::Reduced;
      red_head = red->first;
      red_crown = red->second;
      return true;
    }
    if (depth >= depth_cap) return false;
    auto [r_prime, s_rp] = compute_r_prime(stripped, bcd, w_cap);
    VertexSet branch = set_union(bcd.head, s_rp);
    max_branching = std::max<long long>(max_branching, static_cast<long long>(branch.size()));
    for (Vertex v : bcd.head)
      if (run(set_union(s, {v}), depth + 1)) return true;
    for (Vertex v : set_difference(s_rp, bcd.head))
      if (run(set_union(s, {v}), depth + 1)) return true;
    return false;
  }
};

} // namespace

KernelOutcome kernelize_coc_fpt(const CocInstance &inst, std::size_t max_iterations) {
  KernelOutcome out;
  if (inst.w_cap < 1) throw std::invalid_argument("W must be positive");
  WeightedGraph g = coerce_unit(inst.graph, out.weight_warning);
  Weight k = inst.k;
  const std::size_t cap = max_iterations ? max_iterations
                                         : g.num_vertices() +
                                               static_cast<std::size_t>(std::max<Weight>(k, 0)) + 3;

  for (std::size_t iter = 0;; ++iter) {
    if (iter > cap) overrun();
    StripResult s = strip_light(g, inst.w_cap, SizeMode::Cardinality);
    if (!s.removed.empty()) {
      record_strip(out, s.removed);
      g = s.graph;
    }
    if (k < 0) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    if (g.empty()) {
      out.verdict = out.certificate.empty() ? Verdict::DecidedYes : Verdict::Reduced;
      out.reduced_graph = g;
      out.reduced_budget = k;
      return out;
    }
    if (static_cast<Weight>(g.num_vertices()) <= 2 * k * inst.w_cap) {
      out.verdict = out.certificate.empty() ? Verdict::AlreadySmall : Verdict::Reduced;
      out.reduced_graph = g;
      out.reduced_budget = k;
      return out;
    }
    Bcd bcd0 = compute_bcd(g, inst.w_cap);
    Weight t = static_cast<Weight>(bcd0.head.size() + bcd0.body_parts.size());
    CocSearch search{g, k, inst.w_cap, std::min<Weight>(3 * t, k)};
    search.run({}, 0);
    out.search_nodes += search.nodes;
    out.max_branching = std::max(out.max_branching, search.max_branching);
    out.depth_cap = std::max<long long>(out.depth_cap, search.depth_cap);
    switch (search.status) {
    case CocSearch::Status::Yes:
      out.verdict = Verdict::DecidedYes;
      out.reduced_graph = WeightedGraph{};
      out.reduced_budget = k;
      return out;
    case CocSearch::Status::No:
    case CocSearch::Status::Exhausted:
      out.verdict = Verdict::DecidedNo;
      return out;
    case CocSearch::Status::Reduced: {
      Weight dec = static_cast<Weight>(search.red_head.size());
      if (k - dec < 0) {
        out.verdict = Verdict::DecidedNo;
        return out;
      }
      record_reduction(out, search.red_head, search.red_crown, dec);
      g.erase_vertices(set_union(search.red_head, search.red_crown));
      k -= dec;
      break;
    }
    }
  }
}

// --- COC, polynomial special cases --------------------------------------------------

KernelOutcome kernelize_coc2(const CocInstance &inst, Coc2Mode mode,
                             std::size_t max_iterations) {
  KernelOutcome out;
  if (inst.w_cap < 1) throw std::invalid_argument("W must be positive");
  if (mode == Coc2Mode::MatchingSeeded && inst.w_cap != 1)
    throw std::invalid_argument("matching-seeded mode requires W = 1");
  WeightedGraph g = coerce_unit(inst.graph, out.weight_warning);
  if (mode == Coc2Mode::ClawFree && has_induced_claw(g))
    throw std::invalid_argument("claw-free mode on a graph with an induced claw");
  Weight k = inst.k;
  const std::size_t cap = max_iterations ? max_iterations
                                         : g.num_vertices() +
                                               static_cast<std::size_t>(std::max<Weight>(k, 0)) + 3;

  auto mode_bcd = [&](const WeightedGraph &gp) {
    if (mode == Coc2Mode::MatchingSeeded)
      return compute_bcd_seeded(gp, 1, maximum_matching(gp));
    Bcd acc;
    acc.lambda = inst.w_cap;
    for (const auto &comp : connected_components(gp).components) {
      Bcd local = clawfree_bcd(gp.induced(comp), inst.w_cap);
      acc.body_parts.insert(acc.body_parts.end(), local.body_parts.begin(),
                            local.body_parts.end());
    }
    return acc;
  };

  for (std::size_t iter = 0;; ++iter) {
    if (iter > cap) overrun();
    StripResult st = strip_light(g, inst.w_cap, SizeMode::Cardinality);
    if (!st.removed.empty()) {
      record_strip(out, st.removed);
      g = st.graph;
    }
    if (k < 0) {
      out.verdict = Verdict::DecidedNo;
      return out;
    }
    if (g.empty()) {
      out.verdict = out.certificate.empty() ? Verdict::DecidedYes : Verdict::Reduced;
      out.reduced_graph = g;
      out.reduced_budget = k;
      return out;
    }
    if (static_cast<Weight>(g.num_vertices()) <= 2 * k * inst.w_cap) {
      out.verdict = out.certificate.empty() ? Verdict::AlreadySmall : Verdict::Reduced;
      out.reduced_graph = g;
      out.reduced_budget = k;
      return out;
    }

    // one run of the while-loop algorithm
    VertexSet s;
    WeightedGraph gp = g;
    std::optional<std::pair<VertexSet, VertexSet>> red;
    bool decided_no = false;
    std::size_t guard = g.num_vertices() + 2;
    while (!gp.empty()) {
      if (guard-- == 0) overrun();
      Bcd bcd = mode_bcd(gp);
      if (static_cast<Weight>(bcd.head.size() + bcd.body_parts.size()) > k) {
        decided_no = true;
        break;
      }
      auto [r_prime, s_rp] = compute_r_prime(gp, bcd, inst.w_cap);
      if (r_prime.empty() && bcd.head.empty()) {
        decided_no = true;
        break;
      }
      s = set_union(s, set_union(s_rp, bcd.head));
      red = find_reducible_structure(g, s, bcd, inst.w_cap);
      if (red) break;
      gp = drop_light_components(g.induced(set_difference(g.vertices(), s)), inst.w_cap,
                                 SizeMode::Cardinality);
    }
    if (red) {
      Weight dec = static_cast<Weight>(red->first.size());
      if (k - dec < 0) {
        out.verdict = Verdict::DecidedNo;
        return out;
      }
      record_reduction(out, red->first, red->second, dec);
      g.erase_vertices(set_union(red->first, red->second));
      k -= dec;
      continue;
    }
    (void)decided_no; // both loop exits conclude no-instance
    out.verdict = Verdict::DecidedNo;
    return out;
  }
}

} // namespace crownkernel

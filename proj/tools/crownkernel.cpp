#include "crownkernel/graph.hpp"
#include "crownkernel/kernels.hpp"
#include "crownkernel/oracle.hpp"
#include "crownkernel/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ck = crownkernel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int oracle_cap(int flag_cap) {
  if (flag_cap > 0) return flag_cap;
  if (const char *env = std::getenv("CROWNKERNEL_ORACLE_CAP")) return std::atoi(env);
  return ck::kDefaultOracleCap;
}

struct KernelizeArgs {
  std::string problem;
  long long p = -1, k = -1, w_cap = -1;
  std::string mode = "auto";
  std::string input, output, report_path;
  std::size_t max_iterations = 0;
  std::uint64_t seed = 0;
};

ck::Coc2Mode pick_coc2(const std::string &mode) {
  return mode == "poly-w1" ? ck::Coc2Mode::MatchingSeeded : ck::Coc2Mode::ClawFree;
}

int run_kernelize(const KernelizeArgs &a) {
  auto t0 = std::chrono::steady_clock::now();
  ck::WeightedGraph g = ck::parse_graph(slurp(a.input));
  ck::RunReport rep;
  rep.problem = a.problem;
  rep.input_hash_hex = ck::input_hash(g);
  rep.seed = a.seed;
  rep.timings_ms["parse"] = ms_since(t0);

  std::string mode = a.mode;
  if (a.problem == "coc" && mode == "auto") {
    if (a.w_cap == 1)
      mode = "poly-w1";
    else if (!ck::has_induced_claw(g))
      mode = "poly-clawfree";
    else
      mode = "fpt";
  }

  auto t1 = std::chrono::steady_clock::now();
  ck::KernelOutcome out;
  if (a.problem == "vi" || a.problem == "wvi") {
    if (a.p < 0) throw CLI::ValidationError("-p is required for vi/wvi");
    ck::ViInstance inst{g, a.p};
    out = a.problem == "vi" ? ck::kernelize_vi(inst, a.max_iterations)
                            : ck::kernelize_wvi(inst, a.max_iterations);
    rep.parameters["p"] = a.p;
  } else if (a.problem == "coc" || a.problem == "wcoc") {
    if (a.k < 0) throw CLI::ValidationError("-k is required for coc/wcoc");
    if (a.w_cap < 1) throw CLI::ValidationError("-W is required for coc/wcoc");
    ck::CocInstance inst{g, a.k, a.w_cap};
    if (a.problem == "wcoc")
      out = ck::kernelize_wcoc(inst, a.max_iterations);
    else if (mode == "fpt")
      out = ck::kernelize_coc_fpt(inst, a.max_iterations);
    else
      out = ck::kernelize_coc2(inst, pick_coc2(mode), a.max_iterations);
    rep.parameters["k"] = a.k;
    rep.parameters["W"] = a.w_cap;
  } else {
    throw CLI::ValidationError("unknown problem " + a.problem);
  }
  rep.timings_ms["kernelize"] = ms_since(t1);

  rep.verdict = ck::verdict_name(out.verdict);
  rep.certificate = out.certificate;
  rep.lambda_lb = out.lambda_lb;
  rep.weight_warning = out.weight_warning;
  rep.kernel_vertices = static_cast<long long>(out.reduced_graph.num_vertices());
  rep.kernel_weight = out.reduced_graph.total_weight();
  rep.parameters["kernel_budget"] = out.reduced_budget;
  if (out.weight_warning)
    std::cerr << "warning: non-unit weights coerced to 1 by an unweighted solver\n";

  auto t2 = std::chrono::steady_clock::now();
  if (!a.output.empty() && out.verdict != ck::Verdict::DecidedNo)
    ck::write_file_atomic(a.output, ck::render_graph(out.reduced_graph));
  rep.timings_ms["write"] = ms_since(t2);
  if (!a.report_path.empty()) ck::write_file_atomic(a.report_path, ck::render_report(rep));

  std::cout << "verdict: " << rep.verdict << "  kernel-vertices: " << rep.kernel_vertices
            << "  kernel-weight: " << rep.kernel_weight << "  budget: " << out.reduced_budget;
  if (out.lambda_lb) std::cout << "  lambda-lb: " << *out.lambda_lb;
  std::cout << "\n";
  return out.verdict == ck::Verdict::DecidedNo ? kExitNo : kExitOk;
}

int run_solve(const std::string &problem, const std::string &input, long long p, long long k,
              long long w, int cap_flag) {
  ck::WeightedGraph g = ck::parse_graph(slurp(input));
  int cap = oracle_cap(cap_flag);
  ck::OracleResult res;
  if (problem == "vi")
    res = ck::brute_vi(g, p, cap);
  else if (problem == "wvi")
    res = ck::brute_wvi(g, p, cap);
  else if (problem == "coc")
    res = ck::brute_coc(g, k, w, cap);
  else if (problem == "wcoc")
    res = ck::brute_wcoc(g, k, w, cap);
  else
    throw CLI::ValidationError("unknown problem " + problem);
  std::cout << "answer: " << (res.yes ? "yes" : "no") << "\n";
  if (res.optimum) std::cout << "optimum: " << *res.optimum << "\n";
  if (res.witness) {
    std::cout << "witness:";
    for (ck::Vertex v : *res.witness) std::cout << " " << v;
    std::cout << "\n";
  }
  if (res.p_ell) std::cout << "p_ell: " << *res.p_ell << "\n";
  return kExitOk;
}

int run_verify(const std::string &problem, const std::string &input, const std::string &kernel,
               const std::string &report_path, long long budget, long long kernel_budget,
               long long w, int cap_flag) {
  ck::WeightedGraph g1 = ck::parse_graph(slurp(input));
  ck::WeightedGraph g2 = ck::parse_graph(slurp(kernel));
  if (!report_path.empty()) {
    ck::RunReport rep = ck::parse_report(slurp(report_path));
    kernel_budget = rep.parameters.at("kernel_budget");
    // the certificate must replay to the emitted kernel byte-for-byte
    ck::WeightedGraph replayed = ck::replay_certificate(g1, rep.certificate);
    if (ck::render_graph(replayed) != ck::render_graph(g2)) {
      std::cout << "verify: FAIL (certificate replay mismatch)\n";
      return kExitNo;
    }
  }
  ck::ProblemKind kind = problem == "vi"    ? ck::ProblemKind::Vi
                         : problem == "wvi" ? ck::ProblemKind::Wvi
                         : problem == "coc" ? ck::ProblemKind::Coc
                                            : ck::ProblemKind::Wcoc;
  bool ok = ck::check_equivalence(kind, g1, budget, g2, kernel_budget, w, oracle_cap(cap_flag));
  std::cout << "verify: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitNo;
}

struct GenArgs {
  std::string kind;
  int n = 0, count = 0, size = 0, base_n = 0;
  double edge_prob = 0.5, base_edge_prob = 0.5;
  long long wmin = 1, wmax = 1;
  std::uint64_t seed = 0;
  std::string output;
};

ck::WeightedGraph generate(const GenArgs &a) {
  if (a.kind == "random-gnp")
    return ck::generate_gnp({a.n, a.edge_prob, a.wmin, a.wmax}, a.seed);
  if (a.kind == "clawfree-linegraph")
    return ck::generate_clawfree_linegraph({a.base_n, a.base_edge_prob}, a.seed);
  if (a.kind == "disjoint-cliques")
    return ck::generate_disjoint_cliques({a.count, a.size, a.wmin, a.wmax}, a.seed);
  throw CLI::ValidationError("unknown kind " + a.kind);
}

int run_gen(const GenArgs &a) {
  std::string text = ck::render_graph(generate(a));
  if (a.output.empty())
    std::cout << text;
  else
    ck::write_file_atomic(a.output, text);
  return kExitOk;
}

struct BenchArgs {
  std::string problem = "coc";
  std::string mode = "auto";
  std::vector<int> n_list;
  std::vector<long long> k_list, p_list, w_list{1};
  double edge_prob = 0.2;
  int seeds = 3;
  std::uint64_t seed = 1;
  std::string outdir;
};

int run_bench(const BenchArgs &a) {
  bool vi_like = a.problem == "vi" || a.problem == "wvi";
  const auto &budgets = vi_like ? a.p_list : a.k_list;
  if (a.n_list.empty() || budgets.empty() || (!vi_like && a.w_list.empty()))
    throw CLI::ValidationError("empty bench grid");
  std::cout << "problem n budget W verdict kernel_vertices bound time_ms\n";
  struct Cell {
    long long max_kernel = 0;
    long long bound = 0;
    int runs = 0;
    int refuted = 0;
  };
  std::map<std::string, Cell> agg;
  int run_id = 0;
  for (int n : a.n_list)
    for (long long b : budgets)
      for (long long w : (vi_like ? std::vector<long long>{1} : a.w_list))
        for (int s = 0; s < a.seeds; ++s) {
          ck::WeightedGraph g =
              ck::generate_gnp({n, a.edge_prob, 1, 1}, a.seed + static_cast<std::uint64_t>(s));
          auto t0 = std::chrono::steady_clock::now();
          ck::KernelOutcome out;
          if (a.problem == "vi")
            out = ck::kernelize_vi({g, b});
          else if (a.problem == "wvi")
            out = ck::kernelize_wvi({g, b});
          else if (a.problem == "wcoc")
            out = ck::kernelize_wcoc({g, b, w});
          else if (a.mode == "fpt")
            out = ck::kernelize_coc_fpt({g, b, w});
          else if (a.mode == "poly-w1" || (a.mode == "auto" && w == 1))
            out = ck::kernelize_coc2({g, b, w}, ck::Coc2Mode::MatchingSeeded);
          else
            out = ck::kernelize_coc_fpt({g, b, w});
          double ms = ms_since(t0);
          long long bound = vi_like ? 3 * b * b : 2 * b * w;
          std::cout << a.problem << " " << n << " " << b << " " << w << " "
                    << ck::verdict_name(out.verdict) << " " << out.reduced_graph.num_vertices()
                    << " " << bound << " " << ms << "\n";
          {
            std::ostringstream key;
            key << "n=" << n << " budget=" << b << " W=" << w;
            Cell &cell = agg[key.str()];
            cell.bound = bound;
            ++cell.runs;
            if (out.verdict == ck::Verdict::DecidedNo)
              ++cell.refuted;
            else
              cell.max_kernel = std::max(
                  cell.max_kernel, static_cast<long long>(out.reduced_graph.num_vertices()));
          }
          if (!a.outdir.empty()) {
            ck::RunReport rep;
            rep.problem = a.problem;
            rep.input_hash_hex = ck::input_hash(g);
            rep.parameters[vi_like ? "p" : "k"] = b;
            if (!vi_like) rep.parameters["W"] = w;
            rep.parameters["kernel_budget"] = out.reduced_budget;
            rep.verdict = ck::verdict_name(out.verdict);
            rep.certificate = out.certificate;
            rep.lambda_lb = out.lambda_lb;
            rep.kernel_vertices = static_cast<long long>(out.reduced_graph.num_vertices());
            rep.kernel_weight = out.reduced_graph.total_weight();
            rep.timings_ms["kernelize"] = ms;
            rep.seed = a.seed + static_cast<std::uint64_t>(s);
            ck::write_file_atomic(a.outdir + "/run_" + std::to_string(run_id++) + ".json",
                                  ck::render_report(rep));
          }
        }
  std::cout << "\naggregate (max kernel size vs bound):\n";
  for (auto &[key, cell] : agg)
    std::cout << key << "  runs=" << cell.runs << "  refuted=" << cell.refuted
              << "  max_kernel=" << cell.max_kernel << "  bound=" << cell.bound
              << (cell.max_kernel <= cell.bound ? "  ok" : "  OVER") << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"crownkernel: crown-decomposition kernelization for vertex integrity "
               "and component order connectivity"};
  app.require_subcommand(1);

  KernelizeArgs ka;
  auto *kz = app.add_subcommand("kernelize", "reduce an instance to a small kernel");
  kz->add_option("--problem", ka.problem, "vi|wvi|coc|wcoc")->required();
  kz->add_option("-p", ka.p, "integrity budget");
  kz->add_option("-k", ka.k, "separator budget");
  kz->add_option("-W", ka.w_cap, "component cap");
  kz->add_option("--mode", ka.mode, "fpt|poly-w1|poly-clawfree|auto");
  kz->add_option("-i,--input", ka.input, "instance file")->required();
  kz->add_option("-o,--output", ka.output, "kernel graph file");
  kz->add_option("--report", ka.report_path, "run report file");
  kz->add_option("--max-iterations", ka.max_iterations, "reduction loop cap");
  kz->add_option("--seed", ka.seed, "seed recorded in the report");

  std::string sp, si;
  long long spp = -1, spk = -1, spw = 1;
  int scap = 0;
  auto *sv = app.add_subcommand("solve", "exact answer by brute force");
  sv->add_option("--problem", sp, "vi|wvi|coc|wcoc")->required();
  sv->add_option("-i,--input", si, "instance file")->required();
  sv->add_option("-p", spp, "integrity budget");
  sv->add_option("-k", spk, "separator budget");
  sv->add_option("-W", spw, "component cap");
  sv->add_option("--cap", scap, "oracle size cap");

  std::string vp, vi_in, vk, vrep;
  long long vb = -1, vkb = -1, vw = 1;
  int vcap = 0;
  auto *vf = app.add_subcommand("verify", "check kernel equivalence against the input");
  vf->add_option("--problem", vp, "vi|wvi|coc|wcoc")->required();
  vf->add_option("-i,--input", vi_in, "original instance")->required();
  vf->add_option("--kernel", vk, "kernel graph file")->required();
  vf->add_option("--report", vrep, "run report (enables replay check)");
  vf->add_option("-p,-k", vb, "original budget")->required();
  vf->add_option("--kernel-budget", vkb, "kernel budget (read from report when given)");
  vf->add_option("-W", vw, "component cap");
  vf->add_option("--cap", vcap, "oracle size cap");

  GenArgs ga;
  auto *gn = app.add_subcommand("gen", "generate a deterministic instance");
  gn->add_option("--kind", ga.kind, "random-gnp|clawfree-linegraph|disjoint-cliques")->required();
  gn->add_option("-n", ga.n, "vertices (random-gnp)");
  gn->add_option("--edge-prob", ga.edge_prob, "edge probability");
  gn->add_option("--count", ga.count, "cliques");
  gn->add_option("--size", ga.size, "clique size");
  gn->add_option("--base-n", ga.base_n, "base graph size (line graph)");
  gn->add_option("--base-edge-prob", ga.base_edge_prob, "base edge probability");
  gn->add_option("--wmin", ga.wmin, "minimum weight");
  gn->add_option("--wmax", ga.wmax, "maximum weight");
  gn->add_option("--seed", ga.seed, "seed")->required();
  gn->add_option("-o,--output", ga.output, "output file");

  BenchArgs ba;
  auto *bn = app.add_subcommand("bench", "sweep a grid and tabulate kernel sizes");
  bn->add_option("--problem", ba.problem, "vi|wvi|coc|wcoc");
  bn->add_option("--mode", ba.mode, "coc mode");
  bn->add_option("--n", ba.n_list, "instance sizes");
  bn->add_option("--k", ba.k_list, "separator budgets");
  bn->add_option("--p", ba.p_list, "integrity budgets");
  bn->add_option("--W", ba.w_list, "component caps");
  bn->add_option("--edge-prob", ba.edge_prob, "edge probability");
  bn->add_option("--seeds", ba.seeds, "seeds per cell");
  bn->add_option("--seed", ba.seed, "base seed");
  bn->add_option("--outdir", ba.outdir, "directory for per-run reports");

  try {
    app.parse(argc, argv);
    if (kz->parsed()) return run_kernelize(ka);
    if (sv->parsed()) return run_solve(sp, si, spp, spk, spw, scap);
    if (vf->parsed()) return run_verify(vp, vi_in, vk, vrep, vb, vkb, vw, vcap);
    if (gn->parsed()) return run_gen(ga);
    if (bn->parsed()) return run_bench(ba);
    return kExitUsage;
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const crownkernel::ParseError &e) {
    std::cerr << "parse error: line " << e.line << ": " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

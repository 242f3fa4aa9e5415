// Command-line front end: graph generation, the four solvers, Monte Carlo
// checks, and CSV experiment sweeps. Exit codes: 0 success, 1 usage error,
// 2 budget error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rga/approx_mis.hpp"
#include "rga/common_subgraph.hpp"
#include "rga/exact_mis.hpp"
#include "rga/experiment.hpp"
#include "rga/graph.hpp"
#include "rga/param_decide.hpp"

namespace {

std::string join(const rga::VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

double elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void emit_record(const std::optional<std::string>& out_path,
                 const rga::ExperimentRecord& rec) {
  if (out_path) write_file(*out_path, rga::emit_csv({rec}));
}

struct GraphArgs {
  std::optional<std::string> input;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool n_given = false;

  // Resolved graph; generator parameters are recorded when known.
  rga::Graph load() const {
    if (input) {
      if (n_given)
        throw CLI::ValidationError("give either --input or --n, not both");
      return rga::read_edge_list(read_file(*input));
    }
    if (!n_given) throw CLI::ValidationError("one of --input or --n is required");
    return rga::generate({n, p, seed});
  }
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
  auto* input = cmd->add_option("--input", args.input, "edge-list file");
  auto* n = cmd->add_option("--n", args.n, "vertex count")->check(CLI::NonNegativeNumber);
  cmd->add_option("--p", args.p, "edge probability");
  cmd->add_option("--seed", args.seed, "generator seed");
  n->excludes(input);
  cmd->callback([&args, n] { args.n_given = n->count() > 0; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random-graph independent set and common subgraph toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random graph as an edge list");
  int gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  std::optional<std::string> gen_out;
  gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--p", gen_p, "edge probability")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "write the edge list to a file");

  // mis
  auto* mis = app.add_subcommand("mis", "maximum independent set");
  GraphArgs mis_graph;
  add_graph_options(mis, mis_graph);
  std::string mis_algo = "branch";
  std::optional<double> mis_eps;
  int mis_cap = 24;
  std::optional<std::string> mis_out;
  mis->add_option("--algo", mis_algo, "branch | brute | oracle")
      ->check(CLI::IsMember({"branch", "brute", "oracle"}));
  mis->add_option("--epsilon", mis_eps, "degree-threshold epsilon (default min(p,1-p)/2)");
  mis->add_option("--cap", mis_cap, "brute-force size cap");
  mis->add_option("--out", mis_out, "write a one-row CSV record");

  // decide
  auto* decide = app.add_subcommand("decide", "decide independent set of size k");
  GraphArgs dec_graph;
  add_graph_options(decide, dec_graph);
  int dec_k = 0;
  std::optional<double> dec_eps;
  std::optional<std::string> dec_out;
  decide->add_option("--k", dec_k, "target set size")->required()->check(CLI::NonNegativeNumber);
  decide->add_option("--epsilon", dec_eps, "threshold epsilon (default min(p,1-p)/2)");
  decide->add_option("--out", dec_out, "write a one-row CSV record");

  // lcs
  auto* lcs = app.add_subcommand("lcs", "largest common induced subgraph");
  std::vector<std::string> lcs_inputs;
  int lcs_n = 0, lcs_m = 0;
  double lcs_p = 0.5, lcs_q = 0.5;
  std::uint64_t lcs_seed = 1, lcs_seed2 = 2;
  bool lcs_brute = false;
  int lcs_cap = 8;
  std::optional<std::string> lcs_out;
  lcs->add_option("--input", lcs_inputs, "edge-list files (exactly two)")->expected(0, 2);
  lcs->add_option("--n", lcs_n, "vertex count of the first graph");
  lcs->add_option("--m", lcs_m, "vertex count of the second graph");
  lcs->add_option("--p", lcs_p, "edge probability of the first graph");
  lcs->add_option("--q", lcs_q, "edge probability of the second graph");
  lcs->add_option("--seed", lcs_seed, "seed of the first graph");
  lcs->add_option("--seed2", lcs_seed2, "seed of the second graph");
  lcs->add_flag("--brute", lcs_brute, "run the full enumeration instead of the threshold algorithm");
  lcs->add_option("--cap", lcs_cap, "brute-force size cap");
  lcs->add_option("--out", lcs_out, "write a one-row CSV record");

  // approx
  auto* approx = app.add_subcommand("approx", "block-partition approximate MIS");
  GraphArgs apx_graph;
  add_graph_options(approx, apx_graph);
  std::optional<double> apx_eps;
  int apx_cap = 24;
  std::optional<std::string> apx_out;
  approx->add_option("--epsilon", apx_eps, "threshold epsilon (default min(p,1-p)/2)");
  approx->add_option("--cap", apx_cap, "brute-force size cap");
  approx->add_option("--out", apx_out, "write a one-row CSV record");

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo checks of the degree and isomorphism rates");
  std::string mc_check;
  int mc_n = 64, mc_k = 4, mc_trials = 200, mc_threads = 1;
  double mc_p = 0.5, mc_q = 0.5;
  std::optional<double> mc_eps;
  std::uint64_t mc_seed = 1;
  std::optional<std::string> mc_out;
  mc->add_option("--check", mc_check, "good | mindeg | iso")
      ->required()
      ->check(CLI::IsMember({"good", "mindeg", "iso"}));
  mc->add_option("--n", mc_n, "vertex count per trial graph");
  mc->add_option("--k", mc_k, "vertex count per trial pair (iso)");
  mc->add_option("--p", mc_p, "edge probability");
  mc->add_option("--q", mc_q, "edge probability of the second graph (iso)");
  mc->add_option("--epsilon", mc_eps, "threshold epsilon (default min(p,1-p)/2)");
  mc->add_option("--trials", mc_trials, "trial count")->check(CLI::PositiveNumber);
  mc->add_option("--seed", mc_seed, "base seed; trial t uses seed + t");
  mc->add_option("--threads", mc_threads, "parallel trial workers")->check(CLI::PositiveNumber);
  mc->add_option("--out", mc_out, "write the report as CSV");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run an experiment grid and emit CSV");
  rga::SweepConfig sweep_cfg;
  std::optional<double> sweep_eps;
  std::optional<std::string> sweep_out;
  sweep->add_option("--n", sweep_cfg.ns, "vertex counts")->required();
  sweep->add_option("--p", sweep_cfg.ps, "edge probabilities")->required();
  sweep->add_option("--seed", sweep_cfg.seeds, "seeds")->required();
  sweep->add_option("--algo", sweep_cfg.algos, "exact | brute | oracle | approx")->required();
  sweep->add_option("--epsilon", sweep_eps, "threshold epsilon (default min(p,1-p)/2)");
  sweep->add_option("--cap", sweep_cfg.brute_force_cap, "brute-force size cap");
  sweep->add_option("--threads", sweep_cfg.threads, "parallel workers")->check(CLI::PositiveNumber);
  sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) {
      const std::string text = rga::write_edge_list(rga::generate({gen_n, gen_p, gen_seed}));
      if (gen_out)
        write_file(*gen_out, text);
      else
        std::cout << text;
    } else if (*mis) {
      const rga::Graph g = mis_graph.load();
      rga::ExperimentRecord rec;
      rec.algo = mis_algo == "branch" ? "exact" : mis_algo;
      rec.n = g.vertex_count();
      if (!mis_graph.input) {
        rec.p = mis_graph.p;
        rec.seed = mis_graph.seed;
      }
      const auto t0 = std::chrono::steady_clock::now();
      if (mis_algo == "branch") {
        const double eps = mis_eps ? *mis_eps : rga::EpsilonConfig::default_epsilon(mis_graph.p);
        rec.epsilon = eps;
        rga::MisSolution sol = rga::max_independent_set(g, mis_graph.p, {eps, mis_cap});
        rec.result_size = static_cast<int>(sol.set.size());
        rec.nodes_expanded = sol.stats.nodes_expanded;
        rec.fallbacks = sol.stats.fallback_invocations;
        rec.path_taken = "branch";
        std::cout << "size " << sol.set.size() << "\nset " << join(sol.set)
                  << "\nnodes_expanded " << sol.stats.nodes_expanded
                  << "\nfallbacks " << sol.stats.fallback_invocations
                  << "\nmax_depth " << sol.stats.max_depth << "\n";
      } else if (mis_algo == "brute") {
        rga::VertexSet best = rga::brute_force_mis(g, mis_cap);
        rec.result_size = static_cast<int>(best.size());
        rec.path_taken = "brute";
        std::cout << "size " << best.size() << "\nset " << join(best) << "\n";
      } else {
        const int alpha = rga::mis_recursive_oracle(g, mis_cap);
        rec.result_size = alpha;
        rec.path_taken = "oracle";
        std::cout << "size " << alpha << "\n";
      }
      rec.elapsed_ms = elapsed_ms_since(t0);
      emit_record(mis_out, rec);
    } else if (*decide) {
      const rga::Graph g = dec_graph.load();
      const double eps = dec_eps ? *dec_eps : rga::EpsilonConfig::default_epsilon(dec_graph.p);
      const auto t0 = std::chrono::steady_clock::now();
      rga::DecideOutcome out = rga::decide_k_independent(g, dec_k, dec_graph.p, eps);
      std::cout << "answer " << (out.answer ? "yes" : "no") << "\n";
      if (out.witness) std::cout << "witness " << join(*out.witness) << "\n";
      std::cout << "path " << rga::to_string(out.path_taken) << "\n";
      rga::ExperimentRecord rec;
      rec.algo = "decide";
      rec.n = g.vertex_count();
      if (!dec_graph.input) {
        rec.p = dec_graph.p;
        rec.seed = dec_graph.seed;
      }
      rec.epsilon = eps;
      if (out.witness) rec.result_size = static_cast<int>(out.witness->size());
      rec.path_taken = std::string(rga::to_string(out.path_taken));
      rec.elapsed_ms = elapsed_ms_since(t0);
      emit_record(dec_out, rec);
    } else if (*lcs) {
      rga::Graph g, h;
      rga::ExperimentRecord rec;
      if (!lcs_inputs.empty()) {
        if (lcs_inputs.size() != 2)
          throw CLI::ValidationError("lcs needs exactly two --input files");
        g = rga::read_edge_list(read_file(lcs_inputs[0]));
        h = rga::read_edge_list(read_file(lcs_inputs[1]));
      } else {
        if (lcs_n <= 0 || lcs_m <= 0)
          throw CLI::ValidationError("lcs needs --n and --m (or two --input files)");
        g = rga::generate({lcs_n, lcs_p, lcs_seed});
        h = rga::generate({lcs_m, lcs_q, lcs_seed2});
        rec.p = lcs_p;
        rec.q = lcs_q;
        rec.seed = lcs_seed;
      }
      bool swapped = false;
      if (g.vertex_count() < h.vertex_count()) {
        std::swap(g, h);
        swapped = true;
      }
      const auto t0 = std::chrono::steady_clock::now();
      rga::CommonSubgraphResult res =
          lcs_brute ? rga::lcs_bruteforce(g, h, lcs_cap)
                    : rga::lcs_main(g, h, swapped ? lcs_q : lcs_p,
                                    swapped ? lcs_p : lcs_q, {lcs_cap});
      if (swapped) {
        std::swap(res.s1, res.s2);
        for (auto& [a, b] : res.mapping.pairs) std::swap(a, b);
        std::sort(res.mapping.pairs.begin(), res.mapping.pairs.end());
      }
      std::cout << "size " << res.size << "\ns1 " << join(res.s1) << "\ns2 "
                << join(res.s2) << "\nmapping";
      for (const auto& [a, b] : res.mapping.pairs) std::cout << ' ' << a << "->" << b;
      std::cout << "\npath " << rga::to_string(res.path_taken) << "\n";
      rec.algo = "lcs";
      rec.n = std::max(g.vertex_count(), h.vertex_count());
      rec.m = std::min(g.vertex_count(), h.vertex_count());
      rec.result_size = res.size;
      rec.path_taken = std::string(rga::to_string(res.path_taken));
      rec.elapsed_ms = elapsed_ms_since(t0);
      emit_record(lcs_out, rec);
    } else if (*approx) {
      const rga::Graph g = apx_graph.load();
      if (g.vertex_count() < 1)
        throw CLI::ValidationError("approx needs a graph with at least one vertex");
      const double eps = apx_eps ? *apx_eps : rga::EpsilonConfig::default_epsilon(apx_graph.p);
      const auto t0 = std::chrono::steady_clock::now();
      rga::ApproxResult res = rga::approx_mis(g, apx_graph.p, {eps, apx_cap});
      std::cout << "size " << res.chosen.size() << "\nset " << join(res.chosen)
                << "\nblocks " << res.block_count << "\nblock_size "
                << res.block_size << "\nratio_bound " << res.ratio_bound << "\n";
      rga::ExperimentRecord rec;
      rec.algo = "approx";
      rec.n = g.vertex_count();
      if (!apx_graph.input) {
        rec.p = apx_graph.p;
        rec.seed = apx_graph.seed;
      }
      rec.epsilon = eps;
      rec.result_size = static_cast<int>(res.chosen.size());
      rec.nodes_expanded = res.stats.nodes_expanded;
      rec.fallbacks = res.stats.fallback_invocations;
      rec.path_taken = "blocks";
      rec.elapsed_ms = elapsed_ms_since(t0);
      emit_record(apx_out, rec);
    } else if (*mc) {
      rga::MonteCarloReport rep;
      if (mc_check == "good") {
        const double eps = mc_eps ? *mc_eps : rga::EpsilonConfig::default_epsilon(mc_p);
        rep = rga::mc_good_fraction(mc_n, mc_p, eps, mc_trials, mc_seed, mc_threads);
      } else if (mc_check == "mindeg") {
        const double eps = mc_eps ? *mc_eps : rga::EpsilonConfig::default_epsilon(mc_p);
        rep = rga::mc_min_degree_fraction(mc_n, mc_p, eps, mc_trials, mc_seed, mc_threads);
      } else {
        rep = rga::mc_mapping_iso_rate(mc_k, mc_p, mc_q, mc_trials, mc_seed, mc_threads);
      }
      std::cout << "quantity " << rep.quantity << "\ntrials " << rep.trials
                << "\nobserved " << rep.observed << "\npredicted " << rep.predicted
                << "\nstd_error " << rep.std_error << "\n";
      if (mc_out) {
        std::string csv = "quantity,trials,observed,predicted,std_error\n";
        csv += rep.quantity + ',' + std::to_string(rep.trials) + ',' +
               rga::detail::format_double(rep.observed) + ',' +
               rga::detail::format_double(rep.predicted) + ',' +
               rga::detail::format_double(rep.std_error) + '\n';
        write_file(*mc_out, csv);
      }
    } else if (*sweep) {
      sweep_cfg.epsilon = sweep_eps;
      const std::string csv = rga::emit_csv(rga::run_experiment(sweep_cfg));
      if (sweep_out)
        write_file(*sweep_out, csv);
      else
        std::cout << csv;
    }
  } catch (const rga::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#pragma once

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rga/approx_mis.hpp"
#include "rga/common_subgraph.hpp"
#include "rga/errors.hpp"
#include "rga/exact_mis.hpp"
#include "rga/graph.hpp"

namespace rga {

// One CSV row of a harness run. Optional fields are written as empty cells;
// nothing is silently defaulted.
struct ExperimentRecord {
  std::string algo;
  int n = 0;
  std::optional<int> m;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::optional<int> result_size;
  std::optional<std::uint64_t> nodes_expanded;
  std::optional<std::uint64_t> fallbacks;
  std::optional<std::string> path_taken;
  std::optional<double> elapsed_ms;  // wall clock, excluded from determinism

  bool operator==(const ExperimentRecord&) const = default;
};

struct MonteCarloReport {
  std::string quantity;
  int trials = 0;
  double observed = 0.0;
  double predicted = 0.0;
  double std_error = 0.0;
};

// Size that a maximum independent set of G(n, p) concentrates around:
// 2 log2(n) / log2(1 / (1 - p)).
inline double theoretical_mis_size(int n, double p) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0, 1)");
  return 2.0 * std::log2(static_cast<double>(n)) / std::log2(1.0 / (1.0 - p));
}

namespace detail {

// Runs fn(i) for i in [0, count) on `threads` workers. Results must be
// written to pre-sized slots so the outcome is independent of scheduling.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min(threads, count);
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

template <typename Pred>
MonteCarloReport mc_fraction(std::string quantity, int trials, std::uint64_t seed,
                             int threads, double predicted, Pred&& pred) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::vector<char> hit(trials, 0);
  parallel_for(trials, threads, [&](int t) {
    Prng rng(seed + static_cast<std::uint64_t>(t));
    hit[t] = pred(rng) ? 1 : 0;
  });
  int count = 0;
  for (char h : hit) count += h;
  MonteCarloReport r;
  r.quantity = std::move(quantity);
  r.trials = trials;
  r.observed = static_cast<double>(count) / trials;
  r.predicted = predicted;
  r.std_error = std::sqrt(predicted * (1.0 - predicted) / trials);
  return r;
}

}  // namespace detail

// Fraction of sampled G(n, p) graphs containing a vertex of degree at least
// (p - epsilon) * n. Concentration of the edge count predicts this fraction
// tends to 1, and it should already be ~1 at modest n.
inline MonteCarloReport mc_good_fraction(int n, double p, double epsilon,
                                         int trials, std::uint64_t seed,
                                         int threads = 1) {
  if (!(epsilon > 0.0 && epsilon < p))
    throw std::invalid_argument("epsilon must satisfy 0 < epsilon < p");
  return detail::mc_fraction("good_fraction", trials, seed, threads, 1.0,
                             [&](Prng& rng) {
                               Graph g = generate(n, p, rng);
                               return find_good_vertex(g, p, epsilon).has_value();
                             });
}

// Fraction of sampled graphs containing a vertex of degree at most
// (p + epsilon) * n; the mirror-image concentration statement.
inline MonteCarloReport mc_min_degree_fraction(int n, double p, double epsilon,
                                               int trials, std::uint64_t seed,
                                               int threads = 1) {
  if (!(epsilon > 0.0) || !(p > 0.0) || !(p + epsilon < 1.0))
    throw std::invalid_argument("need 0 < epsilon and p + epsilon < 1");
  return detail::mc_fraction(
      "min_degree_fraction", trials, seed, threads, 1.0, [&](Prng& rng) {
        Graph g = generate(n, p, rng);
        const double threshold = (p + epsilon) * n;
        for (int v = 0; v < n; ++v)
          if (static_cast<double>(g.degree(v)) <= threshold) return true;
        return false;
      });
}

// Frequency that two independently drawn k-vertex graphs are isomorphic under
// the identity mapping, against the closed-form prediction. Both graphs of a
// trial come from one stream seeded with base + trial index.
inline MonteCarloReport mc_mapping_iso_rate(int k, double p, double q, int trials,
                                            std::uint64_t seed, int threads = 1) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  VertexSet all(k);
  for (int i = 0; i < k; ++i) all[i] = i;
  Mapping identity;
  for (int i = 0; i < k; ++i) identity.pairs.emplace_back(i, i);
  MonteCarloReport r = detail::mc_fraction(
      "mapping_iso_rate", trials, seed, threads, pair_iso_probability(p, q, k),
      [&](Prng& rng) {
        Graph g = generate(k, p, rng);
        Graph h = generate(k, q, rng);
        return iso_under_mapping(g, all, h, all, identity);
      });
  return r;
}

// --- Sweeps --------------------------------------------------------------

struct SweepConfig {
  std::vector<int> ns;
  std::vector<double> ps;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algos;  // exact | brute | oracle | approx
  std::optional<double> epsilon;   // default per p: min(p, 1-p)/2
  int brute_force_cap = 24;
  int threads = 1;
};

namespace detail {

inline ExperimentRecord run_one(const std::string& algo, int n, double p,
                                std::uint64_t seed, double epsilon, int cap) {
  ExperimentRecord rec;
  rec.algo = algo;
  rec.n = n;
  rec.p = p;
  rec.seed = seed;
  const Graph g = generate({n, p, seed});
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (algo == "exact") {
      rec.epsilon = epsilon;
      MisSolution sol = max_independent_set(g, p, {epsilon, cap});
      rec.result_size = static_cast<int>(sol.set.size());
      rec.nodes_expanded = sol.stats.nodes_expanded;
      rec.fallbacks = sol.stats.fallback_invocations;
      rec.path_taken = "branch";
    } else if (algo == "brute") {
      VertexSet best = brute_force_mis(g, cap);
      rec.result_size = static_cast<int>(best.size());
      rec.path_taken = "brute";
    } else if (algo == "oracle") {
      rec.result_size = mis_recursive_oracle(g, cap);
      rec.path_taken = "oracle";
    } else if (algo == "approx") {
      rec.epsilon = epsilon;
      ApproxResult res = approx_mis(g, p, {epsilon, cap});
      rec.result_size = static_cast<int>(res.chosen.size());
      rec.nodes_expanded = res.stats.nodes_expanded;
      rec.fallbacks = res.stats.fallback_invocations;
      rec.path_taken = "blocks";
    } else {
      throw std::invalid_argument("unknown algorithm: " + algo);
    }
  } catch (const BudgetError&) {
    rec.result_size.reset();
    rec.nodes_expanded.reset();
    rec.fallbacks.reset();
    rec.path_taken = "budget_exceeded";
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rec;
}

}  // namespace detail

// Runs every (algo, n, p, seed) combination of the config. Per-instance
// budget errors become budget_exceeded records instead of aborting the sweep.
// Output is sorted by (algo, n, p, seed), so results do not depend on thread
// scheduling; only elapsed_ms is nondeterministic.
inline std::vector<ExperimentRecord> run_experiment(const SweepConfig& cfg) {
  bool needs_epsilon = false;
  for (const std::string& algo : cfg.algos) {
    if (algo != "exact" && algo != "brute" && algo != "oracle" && algo != "approx")
      throw std::invalid_argument("unknown algorithm: " + algo);
    needs_epsilon |= (algo == "exact" || algo == "approx");
  }
  for (int n : cfg.ns)
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (double p : cfg.ps) {
    detail::check_probability(p, "edge probability");
    if (needs_epsilon) {
      const double eps = cfg.epsilon ? *cfg.epsilon : EpsilonConfig::default_epsilon(p);
      if (!(eps > 0.0 && eps < p))
        throw std::invalid_argument("epsilon must satisfy 0 < epsilon < p for p=" +
                                    std::to_string(p));
    }
  }

  struct Instance {
    std::string algo;
    int n;
    double p;
    std::uint64_t seed;
  };
  std::vector<Instance> instances;
  std::vector<std::string> algos = cfg.algos;
  std::sort(algos.begin(), algos.end());
  std::vector<int> ns = cfg.ns;
  std::sort(ns.begin(), ns.end());
  std::vector<double> ps = cfg.ps;
  std::sort(ps.begin(), ps.end());
  std::vector<std::uint64_t> seeds = cfg.seeds;
  std::sort(seeds.begin(), seeds.end());
  for (const auto& algo : algos)
    for (int n : ns)
      for (double p : ps)
        for (std::uint64_t seed : seeds) instances.push_back({algo, n, p, seed});

  std::vector<ExperimentRecord> records(instances.size());
  detail::parallel_for(static_cast<int>(instances.size()), cfg.threads, [&](int i) {
    const Instance& in = instances[i];
    const double eps =
        cfg.epsilon ? *cfg.epsilon : EpsilonConfig::default_epsilon(in.p);
    records[i] = detail::run_one(in.algo, in.n, in.p, in.seed, eps,
                                 cfg.brute_force_cap);
  });
  return records;
}

// --- CSV -----------------------------------------------------------------
// Header is mandatory, columns fixed, '.' decimal separator, empty cell for
// null. Doubles are written in shortest round-trip form, so
// parse_csv(emit_csv(r)) == r including the timing column.

namespace detail {

inline constexpr std::string_view kCsvHeader =
    "algo,n,m,p,q,seed,epsilon,result_size,nodes_expanded,fallbacks,path_taken,"
    "elapsed_ms";

inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) {
    return format_double(*v);
  } else if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else {
    return std::to_string(*v);
  }
}

template <typename T>
std::optional<T> parse_cell(std::string_view s, int line) {
  if (s.empty()) return std::nullopt;
  if constexpr (std::is_same_v<T, std::string>) {
    return std::string(s);
  } else {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw ParseError("bad value '" + std::string(s) + "'", line);
    return value;
  }
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

inline std::string emit_csv(const std::vector<ExperimentRecord>& records) {
  std::string out(detail::kCsvHeader);
  out += '\n';
  for (const ExperimentRecord& r : records) {
    out += r.algo;
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += detail::cell(r.m);
    out += ',';
    out += detail::cell(r.p);
    out += ',';
    out += detail::cell(r.q);
    out += ',';
    out += detail::cell(r.seed);
    out += ',';
    out += detail::cell(r.epsilon);
    out += ',';
    out += detail::cell(r.result_size);
    out += ',';
    out += detail::cell(r.nodes_expanded);
    out += ',';
    out += detail::cell(r.fallbacks);
    out += ',';
    out += detail::cell(r.path_taken);
    out += ',';
    out += detail::cell(r.elapsed_ms);
    out += '\n';
  }
  return out;
}

inline std::vector<ExperimentRecord> parse_csv(std::string_view text) {
  std::vector<ExperimentRecord> records;
  int line_no = 0;
  bool saw_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != detail::kCsvHeader)
        throw ParseError("unexpected CSV header", line_no);
      saw_header = true;
      continue;
    }
    const auto f = detail::split_fields(line);
    if (f.size() != 12) throw ParseError("expected 12 fields", line_no);
    ExperimentRecord r;
    r.algo = std::string(f[0]);
    const auto n = detail::parse_cell<int>(f[1], line_no);
    if (!n) throw ParseError("n must not be empty", line_no);
    r.n = *n;
    r.m = detail::parse_cell<int>(f[2], line_no);
    r.p = detail::parse_cell<double>(f[3], line_no);
    r.q = detail::parse_cell<double>(f[4], line_no);
    r.seed = detail::parse_cell<std::uint64_t>(f[5], line_no);
    r.epsilon = detail::parse_cell<double>(f[6], line_no);
    r.result_size = detail::parse_cell<int>(f[7], line_no);
    r.nodes_expanded = detail::parse_cell<std::uint64_t>(f[8], line_no);
    r.fallbacks = detail::parse_cell<std::uint64_t>(f[9], line_no);
    r.path_taken = detail::parse_cell<std::string>(f[10], line_no);
    r.elapsed_ms = detail::parse_cell<double>(f[11], line_no);
    records.push_back(std::move(r));
  }
  if (!saw_header) throw ParseError("missing CSV header", line_no);
  return records;
}

}  // namespace rga

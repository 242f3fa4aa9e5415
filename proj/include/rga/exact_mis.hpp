#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rga/errors.hpp"
#include "rga/graph.hpp"

namespace rga {

// Counters from one run of the branching solver. nodes_expanded is the
// empirical stand-in for the recursion-tree size; fallback_invocations counts
// the exhaustive-enumeration escape hatch.
struct BranchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t fallback_invocations = 0;
  std::uint64_t good_vertex_checks = 0;
  int max_depth = 0;

  // Associative merge, usable when branches or blocks run independently.
  void merge(const BranchStats& other) {
    nodes_expanded += other.nodes_expanded;
    fallback_invocations += other.fallback_invocations;
    good_vertex_checks += other.good_vertex_checks;
    max_depth = std::max(max_depth, other.max_depth);
  }
};

struct EpsilonConfig {
  double epsilon = 0.0;
  int brute_force_cap = 24;

  static EpsilonConfig defaults(double p) { return {default_epsilon(p), 24}; }

  // One epsilon that keeps both degree-threshold arguments valid:
  // 0 < eps < p and p + eps < 1.
  static double default_epsilon(double p) { return std::min(p, 1.0 - p) / 2.0; }
};

// Lowest-index vertex whose degree reaches (p - epsilon) * n, n the current
// vertex count. Such a vertex exists in almost every random graph at usable
// sizes, which is what makes the branching recursion shallow on one side.
inline std::optional<int> find_good_vertex(const Graph& g, double p, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < p))
    throw std::invalid_argument("epsilon must satisfy 0 < epsilon < p");
  const double threshold = (p - epsilon) * g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (static_cast<double>(g.degree(v)) >= threshold) return v;
  return std::nullopt;
}

// Exhaustive maximum independent set. Subsets are scanned as binary counters
// (vertex 0 = least significant bit) in ascending order and the incumbent is
// replaced only on strict improvement, so the winner is the first maximum in
// counter order. Independence of a counter is derived from the counter with
// its lowest bit cleared, which keeps the scan linear in 2^n.
inline VertexSet brute_force_mis(const Graph& g, int cap = 24) {
  const int n = g.vertex_count();
  if (n > cap) throw BudgetError("brute-force enumeration", n, cap);
  if (n > 30) throw BudgetError("brute-force enumeration (hard limit)", n, 30);
  if (n == 0) return {};

  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = g.row_word0(v);

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> independent((total + 63) / 64, 0);
  independent[0] = 1;  // the empty set
  std::uint64_t best_mask = 0;
  int best_size = 0;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    const bool rest_ok = (independent[rest >> 6] >> (rest & 63)) & 1u;
    if (rest_ok && (rows[v] & rest) == 0) {
      independent[mask >> 6] |= std::uint64_t{1} << (mask & 63);
      const int size = std::popcount(mask);
      if (size > best_size) {
        best_size = size;
        best_mask = mask;
      }
    }
  }

  VertexSet best;
  best.reserve(best_size);
  for (std::uint64_t bits = best_mask; bits; bits &= bits - 1)
    best.push_back(std::countr_zero(bits));
  return best;
}

namespace detail {

inline int mis_size_recursive(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const Subgraph with0 = delete_closed_neighborhood(g, 0);
  const Subgraph without0 = delete_vertex(g, 0);
  return std::max(1 + mis_size_recursive(with0.graph),
                  mis_size_recursive(without0.graph));
}

}  // namespace detail

// Second, structurally independent oracle: plain include/exclude recursion on
// vertex 0 with no degree threshold. Returns only the independence number.
inline int mis_recursive_oracle(const Graph& g, int cap = 24) {
  if (g.vertex_count() > cap)
    throw BudgetError("recursive oracle", g.vertex_count(), cap);
  return detail::mis_size_recursive(g);
}

struct MisSolution {
  VertexSet set;  // original vertex indices
  BranchStats stats;
};

namespace detail {

inline VertexSet mis_branch(const Graph& g, double p, const EpsilonConfig& cfg,
                            int depth, BranchStats& stats) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  ++stats.nodes_expanded;
  stats.max_depth = std::max(stats.max_depth, depth);

  ++stats.good_vertex_checks;
  const std::optional<int> v = find_good_vertex(g, p, cfg.epsilon);
  if (!v) {
    ++stats.fallback_invocations;
    return brute_force_mis(g, cfg.brute_force_cap);
  }

  const Subgraph with_v = delete_closed_neighborhood(g, *v);
  VertexSet i1 = mis_branch(with_v.graph, p, cfg, depth + 1, stats);
  for (int& u : i1) u = with_v.original_ids[u];

  const Subgraph without_v = delete_vertex(g, *v);
  VertexSet i2 = mis_branch(without_v.graph, p, cfg, depth + 1, stats);
  for (int& u : i2) u = without_v.original_ids[u];

  if (i2.size() >= i1.size() + 1) return i2;
  i1.insert(std::lower_bound(i1.begin(), i1.end(), *v), *v);
  return i1;
}

}  // namespace detail

// Branching solver: pick a high-degree vertex, branch on membership, fall
// back to exhaustive enumeration when no vertex reaches the degree threshold.
// Correct on arbitrary graphs; the degree threshold only shapes the recursion.
inline MisSolution max_independent_set(const Graph& g, double p,
                                       const EpsilonConfig& cfg) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < p))
    throw std::invalid_argument("epsilon must satisfy 0 < epsilon < p");
  if (cfg.brute_force_cap < 1)
    throw std::invalid_argument("brute_force_cap must be at least 1");
  MisSolution out;
  out.set = detail::mis_branch(g, p, cfg, 1, out.stats);
  return out;
}

inline MisSolution max_independent_set(const Graph& g, double p) {
  return max_independent_set(g, p, EpsilonConfig::defaults(p));
}

}  // namespace rga

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "rga/enumerate.hpp"
#include "rga/exact_mis.hpp"
#include "rga/graph.hpp"

namespace rga {

enum class DecidePath {
  large_k_enumeration,
  greedy_success,
  greedy_fail_enumeration,
};

inline std::string_view to_string(DecidePath p) {
  switch (p) {
    case DecidePath::large_k_enumeration: return "large_k_enumeration";
    case DecidePath::greedy_success: return "greedy_success";
    case DecidePath::greedy_fail_enumeration: return "greedy_fail_enumeration";
  }
  return "?";
}

struct DecideOutcome {
  bool answer = false;
  std::optional<VertexSet> witness;  // present iff answer, exactly k vertices
  DecidePath path_taken = DecidePath::large_k_enumeration;
};

// Size threshold that separates the enumerate-everything regime from the
// greedy regime: (1/3) * log base 1/(1-p-epsilon) of n.
inline double level_threshold(int n, double p, double epsilon) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(epsilon > 0.0) || !(p > 0.0) || !(p + epsilon < 1.0))
    throw std::invalid_argument("need 0 < epsilon and p + epsilon < 1");
  return std::log(static_cast<double>(n)) / (3.0 * std::log(1.0 / (1.0 - p - epsilon)));
}

// Min-degree peeling: take the minimum-degree vertex (lowest index on ties),
// add it to the result, delete its closed neighborhood; repeat until at most
// n^(2/3) vertices remain, n the original vertex count. The first pick is
// unconditional for nonempty graphs (n = 1 has n^(2/3) = n, and the pick
// must still happen). The result is independent because every later pick
// survives deletion of earlier neighborhoods.
inline VertexSet greedy_peel(const Graph& g) {
  const double stop_at = std::pow(static_cast<double>(g.vertex_count()), 2.0 / 3.0);
  VertexSet picked;
  Graph current = g;
  VertexSet ids(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) ids[v] = v;

  while (current.vertex_count() > 0 &&
         (picked.empty() || static_cast<double>(current.vertex_count()) > stop_at)) {
    int best = 0;
    for (int v = 1; v < current.vertex_count(); ++v)
      if (current.degree(v) < current.degree(best)) best = v;
    picked.push_back(ids[best]);
    Subgraph next = delete_closed_neighborhood(current, best);
    VertexSet next_ids(next.original_ids.size());
    for (std::size_t i = 0; i < next.original_ids.size(); ++i)
      next_ids[i] = ids[next.original_ids[i]];
    current = std::move(next.graph);
    ids = std::move(next_ids);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

namespace detail {

// First independent size-k subset in binary-counter order, if any.
inline std::optional<VertexSet> first_independent_k_subset(const Graph& g, int k) {
  std::optional<VertexSet> hit;
  for_each_combination(g.vertex_count(), k, [&](const std::vector<int>& c) {
    if (is_independent(g, c)) {
      hit = c;
      return true;
    }
    return false;
  });
  return hit;
}

}  // namespace detail

// Decides whether g has an independent set of size k, with witness. Exact on
// every path: for k above the level threshold it enumerates size-k subsets
// directly; otherwise it tries the cheap peeling first and only enumerates
// when peeling comes up short. k = 0 is trivially yes; k > n yields no via an
// empty enumeration.
inline DecideOutcome decide_k_independent(const Graph& g, int k, double p,
                                          double epsilon) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (!(epsilon > 0.0) || !(p > 0.0) || !(p + epsilon < 1.0))
    throw std::invalid_argument("need 0 < epsilon and p + epsilon < 1");
  const int n = g.vertex_count();
  if (n == 0) {
    if (k == 0) return {true, VertexSet{}, DecidePath::greedy_success};
    return {false, std::nullopt, DecidePath::large_k_enumeration};
  }

  if (static_cast<double>(k) > level_threshold(n, p, epsilon)) {
    auto witness = detail::first_independent_k_subset(g, k);
    if (witness) return {true, std::move(witness), DecidePath::large_k_enumeration};
    return {false, std::nullopt, DecidePath::large_k_enumeration};
  }

  VertexSet peeled = greedy_peel(g);
  if (static_cast<int>(peeled.size()) >= k) {
    peeled.resize(k);  // the k lowest-indexed members
    return {true, std::move(peeled), DecidePath::greedy_success};
  }
  auto witness = detail::first_independent_k_subset(g, k);
  if (witness) return {true, std::move(witness), DecidePath::greedy_fail_enumeration};
  return {false, std::nullopt, DecidePath::greedy_fail_enumeration};
}

}  // namespace rga

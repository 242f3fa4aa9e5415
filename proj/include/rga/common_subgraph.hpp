#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "rga/enumerate.hpp"
#include "rga/errors.hpp"
#include "rga/graph.hpp"

namespace rga {

// Bijection between two equal-size vertex subsets, kept as pairs sorted by
// source index.
struct Mapping {
  std::vector<std::pair<int, int>> pairs;

  VertexSet sources() const {
    VertexSet out;
    out.reserve(pairs.size());
    for (const auto& [u, w] : pairs) out.push_back(u);
    return out;
  }
  VertexSet targets_sorted() const {
    VertexSet out;
    out.reserve(pairs.size());
    for (const auto& [u, w] : pairs) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const Mapping&) const = default;
};

enum class LcsPath {
  bruteforce,
  threshold_hit_step4,
  threshold_descent_step5,
};

inline std::string_view to_string(LcsPath p) {
  switch (p) {
    case LcsPath::bruteforce: return "bruteforce";
    case LcsPath::threshold_hit_step4: return "threshold_hit_step4";
    case LcsPath::threshold_descent_step5: return "threshold_descent_step5";
  }
  return "?";
}

struct CommonSubgraphResult {
  int size = 0;
  VertexSet s1;  // in g
  VertexSet s2;  // in h
  Mapping mapping;
  LcsPath path_taken = LcsPath::bruteforce;
};

// True iff the subgraph induced by s1 in g is isomorphic to the subgraph
// induced by s2 in h under the explicit bijection m: for every pair u < v in
// s1, (u, v) is an edge exactly when (m(u), m(v)) is.
inline bool iso_under_mapping(const Graph& g, const VertexSet& s1, const Graph& h,
                              const VertexSet& s2, const Mapping& m) {
  detail::check_vertex_set(g, s1);
  detail::check_vertex_set(h, s2);
  if (m.pairs.size() != s1.size() || s1.size() != s2.size())
    throw std::invalid_argument("mapping does not biject the two vertex sets");
  if (m.sources() != s1 || m.targets_sorted() != s2)
    throw std::invalid_argument("mapping does not biject the two vertex sets");
  const std::size_t k = m.pairs.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.has_edge(m.pairs[i].first, m.pairs[j].first) !=
          h.has_edge(m.pairs[i].second, m.pairs[j].second))
        return false;
  return true;
}

namespace detail {

struct CommonWitness {
  VertexSet s1;
  VertexSet s2;
  Mapping mapping;
};

// First size-l common induced subgraph in deterministic enumeration order:
// subsets of g in counter order, then subsets of h in counter order, then
// bijections in lexicographic order of the image sequence. l = 0 trivially
// matches with the empty mapping.
inline std::optional<CommonWitness> find_common_of_size(const Graph& g,
                                                        const Graph& h, int l) {
  std::optional<CommonWitness> hit;
  for_each_combination(g.vertex_count(), l, [&](const std::vector<int>& s1) {
    return for_each_combination(h.vertex_count(), l, [&](const std::vector<int>& s2) {
      std::vector<int> image = s2;  // ascending = lexicographically first
      do {
        bool ok = true;
        for (int i = 0; i < l && ok; ++i)
          for (int j = i + 1; j < l && ok; ++j)
            if (g.has_edge(s1[i], s1[j]) != h.has_edge(image[i], image[j]))
              ok = false;
        if (ok) {
          Mapping m;
          m.pairs.reserve(l);
          for (int i = 0; i < l; ++i) m.pairs.emplace_back(s1[i], image[i]);
          hit = CommonWitness{s1, s2, std::move(m)};
          return true;
        }
      } while (std::next_permutation(image.begin(), image.end()));
      return false;
    });
  });
  return hit;
}

}  // namespace detail

// Full enumeration: sizes descending from min(n, m), first hit wins. The cap
// guards the factorial mapping enumeration; exceeding it is an explicit
// budget error, never a silent truncation.
inline CommonSubgraphResult lcs_bruteforce(const Graph& g, const Graph& h,
                                           int cap = 8) {
  const int limit = std::min(g.vertex_count(), h.vertex_count());
  if (limit > cap) throw BudgetError("common-subgraph brute force", limit, cap);
  for (int l = limit; l >= 1; --l) {
    if (auto w = detail::find_common_of_size(g, h, l))
      return {l, std::move(w->s1), std::move(w->s2), std::move(w->mapping),
              LcsPath::bruteforce};
  }
  return {0, {}, {}, {}, LcsPath::bruteforce};
}

// Probability that two independently drawn k-vertex graphs, edge densities p
// and q, are isomorphic under one fixed bijection: each of the k(k-1)/2 pairs
// must agree, and a single pair agrees with probability pq + (1-p)(1-q).
inline double pair_iso_probability(double p, double q, int k) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0))
    throw std::invalid_argument("p and q must be in (0, 1)");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const double s = p * q + (1.0 - p) * (1.0 - q);
  return std::pow(s, static_cast<double>(k) * (k - 1) / 2.0);
}

// Union bound on the probability that graphs of n and m vertices share a
// common induced subgraph of size k: n^k * m^k * s^(k(k-1)/2). Deliberately
// uncapped; values above 1 just mean the bound is vacuous.
inline double common_size_union_bound(int n, int m, int k, double p, double q) {
  if (k > std::min(n, m)) throw std::invalid_argument("k must be at most min(n, m)");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const double s = p * q + (1.0 - p) * (1.0 - q);
  return std::pow(static_cast<double>(n), k) * std::pow(static_cast<double>(m), k) *
         std::pow(s, static_cast<double>(k) * (k - 1) / 2.0);
}

struct LcsConfig {
  int bruteforce_cap = 8;
};

// Threshold algorithm for the largest common induced subgraph of g (n
// vertices) and h (m vertices, m <= n):
//   k = ceil(sqrt(n) * log2(n)^(2/3));
//   m <= k            -> full brute force;
//   size-k hit found  -> full brute force (rare for random inputs);
//   otherwise         -> first hit scanning sizes k-1 down to 1.
inline CommonSubgraphResult lcs_main(const Graph& g, const Graph& h, double p,
                                     double q, const LcsConfig& cfg = {}) {
  const int n = g.vertex_count();
  const int m = h.vertex_count();
  if (n < m)
    throw std::invalid_argument("first graph must be the one with more vertices");
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0))
    throw std::invalid_argument("p and q must be in (0, 1)");
  if (m == 0) return {0, {}, {}, {}, LcsPath::bruteforce};

  const int k = static_cast<int>(
      std::ceil(std::sqrt(static_cast<double>(n)) *
                std::pow(std::log2(static_cast<double>(n)), 2.0 / 3.0)));

  if (m <= k) return lcs_bruteforce(g, h, cfg.bruteforce_cap);

  if (detail::find_common_of_size(g, h, k)) {
    if (m > cfg.bruteforce_cap)
      throw BudgetError("size-k hit routes to full brute force (step 4)", m,
                        cfg.bruteforce_cap);
    CommonSubgraphResult r = lcs_bruteforce(g, h, cfg.bruteforce_cap);
    r.path_taken = LcsPath::threshold_hit_step4;
    return r;
  }

  for (int i = k - 1; i >= 1; --i) {
    if (auto w = detail::find_common_of_size(g, h, i))
      return {i, std::move(w->s1), std::move(w->s2), std::move(w->mapping),
              LcsPath::threshold_descent_step5};
  }
  return {0, {}, {}, {}, LcsPath::threshold_descent_step5};
}

}  // namespace rga

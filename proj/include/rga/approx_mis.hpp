#pragma once

#include <cmath>
#include <vector>

#include "rga/errors.hpp"
#include "rga/exact_mis.hpp"
#include "rga/graph.hpp"

namespace rga {

// Block width floor(2^sqrt(log2 n)), at least 1. Blocks this size keep the
// exact solver polynomial in n while the block count stays within the
// advertised approximation ratio.
inline int block_size(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const double k = std::floor(std::exp2(std::sqrt(std::log2(static_cast<double>(n)))));
  return std::max(1, static_cast<int>(k));
}

// Consecutive index ranges [0,k), [k,2k), ...; all blocks have exactly k
// vertices except possibly the last.
inline std::vector<VertexSet> partition_blocks(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("block width must be at least 1");
  const int n = g.vertex_count();
  std::vector<VertexSet> blocks;
  for (int start = 0; start < n; start += k) {
    VertexSet block;
    const int end = std::min(start + k, n);
    block.reserve(end - start);
    for (int v = start; v < end; ++v) block.push_back(v);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

inline std::vector<VertexSet> partition_blocks(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  return partition_blocks(g, block_size(g.vertex_count()));
}

struct ApproxResult {
  VertexSet chosen;   // original indices, independent in the full graph
  int block_count = 0;
  int block_size = 0;
  double ratio_bound = 0.0;  // 2n / 2^sqrt(log2 n)
  BranchStats stats;         // merged across blocks
};

// Solves each block exactly and returns the largest block solution, ties
// resolved to the lowest block index. Any vertices of a maximum independent
// set fall into some block, so the winner has at least alpha / block_count
// vertices.
inline ApproxResult approx_mis(const Graph& g, double p, const EpsilonConfig& cfg) {
  const int n = g.vertex_count();
  ApproxResult out;
  if (n == 0) return out;

  out.block_size = block_size(n);
  out.ratio_bound = 2.0 * n / std::exp2(std::sqrt(std::log2(static_cast<double>(n))));
  const std::vector<VertexSet> blocks = partition_blocks(g);
  out.block_count = static_cast<int>(blocks.size());

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    MisSolution sol;
    try {
      sol = max_independent_set(induced(g, blocks[b]), p, cfg);
    } catch (const BudgetError& e) {
      throw BudgetError("block " + std::to_string(b) + ": " + e.what(),
                        e.instance_size(), e.cap());
    }
    out.stats.merge(sol.stats);
    if (sol.set.size() > out.chosen.size()) {
      VertexSet mapped;
      mapped.reserve(sol.set.size());
      for (int local : sol.set) mapped.push_back(blocks[b][local]);
      out.chosen = std::move(mapped);
    }
  }
  return out;
}

inline ApproxResult approx_mis(const Graph& g, double p) {
  return approx_mis(g, p, EpsilonConfig::defaults(p));
}

}  // namespace rga

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rga/errors.hpp"
#include "rga/prng.hpp"

namespace rga {

// Vertex subset in canonical form: strictly ascending indices.
using VertexSet = std::vector<int>;

// Undirected simple graph on vertices 0..n-1, adjacency stored as one bit row
// per vertex. No self loops, symmetric by construction. Immutable in spirit:
// algorithms build new graphs instead of mutating shared ones, so concurrent
// reads are safe.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  int vertex_count() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    mutable_row(u)[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    mutable_row(v)[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
  }

  int degree(int v) const {
    check_vertex(v);
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    VertexSet out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  // Raw bit row; words_per_row() 64-bit words per vertex.
  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  int words_per_row() const { return words_; }

  // First word of the row, enough for graphs with n <= 64 (enumerators).
  std::uint64_t row_word0(int v) const { return words_ > 0 ? row(v)[0] : 0; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }
  std::uint64_t* mutable_row(int v) {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Parameters of one reproducible random graph: G(n, p) drawn from the stream
// seeded with `seed`.
struct GraphSpec {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

namespace detail {

inline void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
}

inline void check_vertex_set(const Graph& g, const VertexSet& s) {
  int prev = -1;
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("vertex index out of range");
    if (v <= prev)
      throw std::invalid_argument("vertex set must be strictly ascending");
    prev = v;
  }
}

// Bit mask of a vertex set, one word layout matching Graph rows.
inline std::vector<std::uint64_t> set_mask(const Graph& g, const VertexSet& s) {
  std::vector<std::uint64_t> mask(g.words_per_row(), 0);
  for (int v : s) mask[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  return mask;
}

}  // namespace detail

// Draws each pair (i, j), i < j, in lexicographic order, one 64-bit value per
// pair, consuming the stream even when p makes the outcome certain. The edge
// exists iff draw < floor(p * 2^64); p = 1 forces every edge (the threshold
// would not fit in 64 bits). ldexp(p, 64) is exact for doubles, so the graph
// is a pure function of (n, p, seed).
inline Graph generate(int n, double p, Prng& rng) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  detail::check_probability(p, "edge probability");
  const bool all_edges = (p == 1.0);
  const std::uint64_t threshold =
      all_edges ? 0 : static_cast<std::uint64_t>(std::floor(std::ldexp(p, 64)));
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint64_t draw = rng.next_u64();
      if (all_edges || draw < threshold) g.add_edge(i, j);
    }
  }
  return g;
}

inline Graph generate(const GraphSpec& spec) {
  Prng rng(spec.seed);
  return generate(spec.n, spec.p, rng);
}

// Subgraph on |s| vertices relabeled 0..|s|-1 in ascending original order.
inline Graph induced(const Graph& g, const VertexSet& s) {
  detail::check_vertex_set(g, s);
  const int k = static_cast<int>(s.size());
  Graph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(s[i], s[j])) out.add_edge(i, j);
  return out;
}

// Induced subgraph together with the relabeling back to the parent graph:
// original_ids[i] is the parent index of vertex i.
struct Subgraph {
  Graph graph;
  VertexSet original_ids;
};

inline Subgraph delete_closed_neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::out_of_range("vertex index out of range");
  VertexSet kept;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v && !g.has_edge(u, v)) kept.push_back(u);
  return {induced(g, kept), std::move(kept)};
}

inline Subgraph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::out_of_range("vertex index out of range");
  VertexSet kept;
  kept.reserve(g.vertex_count() - 1);
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v) kept.push_back(u);
  return {induced(g, kept), std::move(kept)};
}

// True iff no edge of g joins two members of s.
inline bool is_independent(const Graph& g, const VertexSet& s) {
  detail::check_vertex_set(g, s);
  const auto mask = detail::set_mask(g, s);
  for (int v : s) {
    const std::uint64_t* r = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w)
      if (r[w] & mask[w]) return false;
  }
  return true;
}

// --- Edge-list text format ---------------------------------------------
// Line 1: "n m". Then m lines "u v" with u < v, sorted lexicographically.
// '#' starts a comment line. The writer emits exactly that canonical form;
// the reader also accepts reversed endpoint order and interleaved comment or
// blank lines, and reports 1-based line numbers on malformed input.

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count());
  out += ' ';
  out += std::to_string(g.edge_count());
  out += '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v)) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
      }
  return out;
}

inline Graph read_edge_list(std::string_view text) {
  int line_no = 0;
  std::optional<Graph> g;
  long long n = 0, m = 0, edges_seen = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    // strip trailing carriage return and surrounding spaces
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;

    long long a = 0, b = 0;
    {
      std::istringstream iss{std::string(line)};
      std::string extra;
      if (!(iss >> a >> b) || (iss >> extra))
        throw ParseError(g ? "expected two integers \"u v\"" : "malformed header, expected \"n m\"",
                         line_no);
    }
    if (!g) {
      if (a < 0 || b < 0) throw ParseError("malformed header, expected non-negative \"n m\"", line_no);
      n = a;
      m = b;
      // bit rows cost n^2/8 bytes; refuse inputs that would not fit
      if (n > 32768) throw ParseError("vertex count too large for the dense representation", line_no);
      g.emplace(static_cast<int>(n));
      continue;
    }
    if (edges_seen == m) throw ParseError("more edges than declared in header", line_no);
    if (a >= n || b >= n || a < 0 || b < 0)
      throw ParseError("vertex index out of range", line_no);
    if (a == b) throw ParseError("self-loop", line_no);
    if (g->has_edge(static_cast<int>(a), static_cast<int>(b)))
      throw ParseError("duplicate edge", line_no);
    g->add_edge(static_cast<int>(a), static_cast<int>(b));
    ++edges_seen;
  }
  if (!g) throw ParseError("missing header", line_no);
  if (edges_seen != m)
    throw ParseError("fewer edges than declared in header", line_no);
  return *std::move(g);
}

}  // namespace rga

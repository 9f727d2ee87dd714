#pragma once

#include "ariadne/types.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ariadne {

/// Sorted, duplicate-free list of 1-based vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts the input; throws ValidationError on duplicates or indices below 1.
  explicit VertexSet(std::vector<int> members);
  VertexSet(std::initializer_list<int> members) : VertexSet(std::vector<int>(members)) {}

  const std::vector<int>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(int v) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::string to_string() const;

 private:
  std::vector<int> members_;
};

/// Undirected simple graph on vertices 1..n.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  /// Edgeless graph on n vertices (n >= 1).
  explicit Graph(int n);
  /// Throws RangeError for endpoints outside 1..n and ValidationError for self-loops.
  /// Duplicate and reversed pairs are merged.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  int max_degree() const;
  bool connected() const;

  /// n x n symmetric 0/1 matrix with zero diagonal; row i corresponds to vertex i+1.
  Matrix adjacency_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void add_edge(int u, int v);
  void check_vertex(int v) const;

  int n_;
  std::vector<std::uint8_t> adj_;
  std::vector<Edge> edges_;
};

/// Parses the DIMACS ASCII clique format (`c` comments, one `p edge n m` line, `e u v` lines).
Graph parse_dimacs(std::string_view text);
/// Emits `c`, `p edge n m`, then `e u v` lines with u < v, newline-terminated.
std::string to_dimacs(const Graph& g, std::string_view comment = "");

Graph read_dimacs_file(const std::string& path);

inline constexpr int kDefaultOracleCap = 20;

struct CliqueResult {
  int size = 0;
  VertexSet witness;
};

/// Exact clique number by branch and bound. The witness is the lexicographically least
/// maximum clique. Throws OracleRefused when g.n() > cap.
CliqueResult max_clique_bruteforce(const Graph& g, int cap = kDefaultOracleCap);

bool is_clique(const Graph& g, const VertexSet& s);

/// Maximal clique of the subgraph induced by s, grown greedily by ascending vertex index.
VertexSet greedy_clique_within(const Graph& g, const VertexSet& s);

}  // namespace ariadne

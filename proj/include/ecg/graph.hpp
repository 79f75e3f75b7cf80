#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ecg/bitset.hpp"

namespace ecg {

/// An edge {u, v} stored with u < v.
struct EdgeRef {
  int u = 0;
  int v = 0;

  EdgeRef() = default;
  EdgeRef(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Undirected simple graph on vertices 0..n-1 with optional vertex labels.
///
/// Adjacency is held both as dense bitset rows (O(1) probes) and as sorted
/// neighbour lists. Graphs are plain values; after construction they are
/// only read, so sharing across threads is safe.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return u != v && rows_[u].test(v); }
  bool has_edge(const EdgeRef& e) const { return has_edge(e.u, e.v); }

  /// Adds {u,v}. Self-loops and out-of-range ids throw InvalidArgument;
  /// adding an existing edge is a no-op.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const Bitset& row(int v) const { return rows_[v]; }

  /// All edges, sorted lexicographically.
  std::vector<EdgeRef> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const;
  void set_label(int v, std::string text);
  const std::vector<std::string>& labels() const { return labels_; }

  /// Subgraph induced by `vertices` (renumbered in the given order).
  Graph induced(const std::vector<int>& vertices) const;
  Graph complement() const;

  bool is_clique(const std::vector<int>& vertices) const;
  bool is_independent(const std::vector<int>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> rows_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

// Constructors for standard graphs and operations.

Graph complete(int n);
Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);
/// W_n: hub 0 joined to the cycle 1..n.
Graph wheel(int n);
/// K_{part_size}^{parts}: `parts` independent sets of `part_size` vertices,
/// all cross edges present. complete_multipartite(2, n) is cp(n).
Graph complete_multipartite(int part_size, int parts);
Graph petersen();

/// Vertices of g1 then g2 (shifted), no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Vertices of g1 then g2 (shifted), all cross edges.
Graph join(const Graph& g1, const Graph& g2);
/// Appends one vertex adjacent to exactly e.u and e.v. e must be an edge.
Graph add_simplicial_vertex(const Graph& g, const EdgeRef& e);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// 2-colouring if bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace ecg

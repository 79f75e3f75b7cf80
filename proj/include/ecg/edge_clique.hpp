#pragma once

#include <span>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

/// K_e(G): one vertex per edge of G; two are adjacent when the union of the
/// two edges' endpoints induces a clique of G.
struct EdgeCliqueGraph {
  Graph graph;
  /// K_e vertex id -> edge of G (sorted, so ids follow edge order).
  std::vector<EdgeRef> edges;

  /// K_e vertex for an edge of G, or -1.
  int vertex_of(const EdgeRef& e) const;
  std::vector<EdgeRef> edges_of(const std::vector<int>& ke_vertices) const;
};

/// True when e and f lie in a common clique of g (e != f).
bool edges_in_common_clique(const Graph& g, const EdgeRef& e, const EdgeRef& f);

EdgeCliqueGraph edge_clique_graph(const Graph& g);

/// No two edges of `edges` lie in a common clique. Every member must be an
/// edge of g (InvalidArgument otherwise); a repeated edge makes the set
/// dependent.
bool is_independent_edge_set(const Graph& g, std::span<const EdgeRef> edges);

/// Exact clique number by branch and bound. Throws BudgetExceeded when
/// n > max_vertices.
int omega(const Graph& g, int max_vertices = 64);

/// Vertices of one maximum clique.
std::vector<int> maximum_clique(const Graph& g, int max_vertices = 64);

}  // namespace ecg

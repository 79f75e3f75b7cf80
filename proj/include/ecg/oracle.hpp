#pragma once

#include <span>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

/// Limits for the exponential solvers. All fields must be positive.
struct SolverBudget {
  int max_vertices = 4096;
  long max_nodes = 500'000'000;
  double time_limit = 600.0;  // seconds

  void validate() const;
};

struct VertexSet {
  int size = 0;
  std::vector<int> vertices;  // sorted
};

struct WeightedVertexSet {
  long weight = 0;
  std::vector<int> vertices;  // sorted
};

struct EdgeSet {
  int size = 0;
  std::vector<EdgeRef> edges;  // sorted
};

/// Maximum independent set by branch and bound: dominated vertices are
/// dropped, isolated ones taken, the bound is a greedy clique cover and the
/// branch vertex has maximum degree (lowest id on ties). Deterministic.
/// Throws BudgetExceeded; never returns a non-optimal set.
VertexSet max_independent_set(const Graph& g, const SolverBudget& budget = {});

/// Maximum total weight over independent sets; weights must be >= 0.
WeightedVertexSet max_weight_independent_set(const Graph& g, std::span<const long> weights,
                                             const SolverBudget& budget = {});

/// n - alpha(g), as the complement of a maximum independent set.
VertexSet min_vertex_cover(const Graph& g, const SolverBudget& budget = {});

/// alpha'(g) = alpha(K_e(g)) with a witness edge set. The vertex budget
/// applies to K_e(g), i.e. to the edge count of g.
EdgeSet alpha_prime_oracle(const Graph& g, const SolverBudget& budget = {});

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, in
/// lexicographic order. Isolated vertices give singleton cliques.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, const SolverBudget& budget = {});

/// Exact edge-clique covering number: minimum number of cliques covering
/// every edge, by set cover over the maximal cliques.
int theta_e_exact(const Graph& g, const SolverBudget& budget = {});

}  // namespace ecg

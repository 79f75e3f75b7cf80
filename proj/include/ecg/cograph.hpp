#pragma once

#include <vector>

#include "ecg/graph.hpp"
#include "ecg/oracle.hpp"

namespace ecg {

enum class CotreeKind { leaf, join, disjoint_union };

struct CotreeNode {
  CotreeKind kind = CotreeKind::leaf;
  int vertex = -1;  // leaves only
  int left = -1;
  int right = -1;
  int parent = -1;
  int min_vertex = 0;  // smallest vertex below; left.min_vertex < right.min_vertex
  int size = 1;        // leaves below

  // Caches. alpha is filled by build_cotree; the other two by
  // alpha_prime_cograph.
  int alpha = 1;            // alpha(G_p)
  long alpha_prime = -1;    // alpha'(G_p)
  long weighted_alpha = -1; // max over independent W of G_p of sum d'(x), d' taken in G
};

/// Binary cotree: each internal node is the join or the disjoint union of the
/// subgraphs below its two children.
struct Cotree {
  std::vector<CotreeNode> nodes;
  int root = -1;
  std::vector<int> leaf_of;  // vertex -> leaf node

  int vertex_count() const { return static_cast<int>(leaf_of.size()); }
  /// The graph the cotree describes.
  Graph evaluate() const;
  /// Vertices below node p, sorted.
  std::vector<int> vertices_below(int p) const;
};

/// O(n^2) construction by repeatedly merging a pair of twins (hashing
/// neighbourhoods to find them). Throws NotCograph with an induced P4 when the
/// elimination gets stuck.
Cotree build_cotree(const Graph& g);

/// d'(x) = alpha(G[N(x)]) for every vertex: the largest alpha of the opposite
/// side over the join nodes above x (0 when there are none).
std::vector<int> d_prime_all(const Cotree& t);

struct CographAlphaPrime {
  long value = 0;
  std::vector<int> d_prime;
  /// Independent set of G maximising the sum of d'.
  std::vector<int> weight_set;
  /// Independent edge set of size `value`: for x in weight_set, edges from x
  /// to a maximum independent set of N(x).
  std::vector<EdgeRef> witness;
};

/// alpha'(G) for a cograph: unions add, a join takes the better side's
/// d'-weighted independence number. Fills the per-node alpha_prime and
/// weighted_alpha caches of t.
CographAlphaPrime alpha_prime_cograph(Cotree& t);

struct EquationZero {
  long value = 0;
  std::vector<int> d_prime;
  std::vector<int> weight_set;
};

/// max over independent W of sum_{x in W} alpha(G[N(x)]) for any graph, with
/// every alpha from the exact oracle. A lower bound for alpha'(g).
EquationZero rhs_equation0(const Graph& g, const SolverBudget& budget = {});

}  // namespace ecg

#pragma once

#include <utility>
#include <vector>

#include "ecg/embedding.hpp"
#include "ecg/graph.hpp"

namespace ecg {

/// Tree decomposition: bags (sorted vertex lists) and the edges of a tree
/// over bag indices.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int width() const;
};

enum class NiceKind { leaf, introduce, forget, join };

const char* to_string(NiceKind kind);

struct NiceNode {
  NiceKind kind = NiceKind::leaf;
  /// Introduced or forgotten vertex; -1 for leaf and join nodes.
  int vertex = -1;
  std::vector<int> bag;  // sorted
  std::vector<int> children;
};

/// Rooted tree decomposition whose leaves hold one vertex, introduce/forget
/// nodes change the bag by one vertex and join nodes have two children with
/// the child bags equal to their own.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
  /// Node ids with every child before its parent.
  std::vector<int> postorder() const;
};

/// Checks vertex and edge coverage, the tree shape and the connectivity of
/// each vertex's bag set. Throws InvalidDecomposition.
void validate(const Graph& g, const TreeDecomposition& td);
/// General axioms plus the nice-node shape rules.
void validate(const Graph& g, const NiceTreeDecomposition& ntd);

/// Decomposition induced by eliminating vertices in `order`.
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order);
/// Greedy minimum fill-in elimination order (ties broken by degree then id).
std::vector<int> min_fill_order(const Graph& g);
TreeDecomposition heuristic_decomposition(const Graph& g);

/// Converts to nice form. Empty graphs give an empty decomposition.
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

/// Decomposition of a plane graph built from its face-vertex layering.
///
/// Each component is stellated (one new vertex per face), a spanning tree is
/// chosen where every vertex hangs below a vertex of the previous layer
/// through a shared face, and the triangles of the stellated map, connected
/// along their dual tree, become bags holding the tree paths of their
/// corners. With d+1 layers the width is at most 3d+1. The root face of each
/// component is the one giving the fewest layers.
TreeDecomposition layered_planar_decomposition(const PlanarEmbedding& pe);

/// Nice decomposition of a slice of at most k layers with width <= 3k-1:
/// the narrower of the layered construction and the min-fill heuristic.
/// Throws InternalError if the result breaks the axioms or the width bound.
NiceTreeDecomposition tree_decomposition_outerplanar_slice(const PlanarEmbedding& slice, int k);

}  // namespace ecg

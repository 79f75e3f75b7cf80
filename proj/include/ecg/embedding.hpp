#pragma once

#include <optional>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

/// Directed edge u -> v.
struct Dart {
  int from = 0;
  int to = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// A combinatorial plane embedding: for every vertex the clockwise cyclic
/// order of its neighbours, plus a dart on the outer face.
///
/// Faces are traced with next(u->v) = (v -> w), w the clockwise successor of u
/// around v; a face lies to the left of its darts. Components that do not
/// contain the outer dart are taken to lie in the outer face, with their own
/// longest face walk as outer boundary.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;
  /// Validates symmetry of the rotation data and Euler's formula per
  /// component; throws InvalidEmbedding.
  PlanarEmbedding(Graph g, std::vector<std::vector<int>> rotation,
                  std::optional<Dart> outer = std::nullopt);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  std::optional<Dart> outer_dart() const { return outer_; }

  int dart_count() const { return static_cast<int>(tail_.size()); }
  /// Dart id for u -> v, -1 when uv is not an edge.
  int dart_id(int u, int v) const;
  Dart dart(int id) const { return {tail_[id], head_[id]}; }
  int reverse(int id) const { return reverse_[id]; }
  /// Next dart along the face to the left of `id`.
  int next_in_face(int id) const { return next_[id]; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  /// Face walk as a cyclic list of dart ids.
  const std::vector<int>& face(int f) const { return faces_[f]; }
  std::vector<int> face_vertices(int f) const;
  int face_of_dart(int id) const { return face_of_[id]; }

  /// One outer face per connected component with edges.
  const std::vector<int>& outer_faces() const { return outer_faces_; }

  /// Embedding of the induced subgraph (vertices renumbered in the given
  /// order), rotations restricted. The outer dart is kept when both its ends
  /// survive.
  PlanarEmbedding restricted(const std::vector<int>& vertices) const;
  /// Same rotations with a different outer face.
  PlanarEmbedding with_outer(Dart outer) const;

 private:
  void build();

  Graph graph_;
  std::vector<std::vector<int>> rotation_;
  std::optional<Dart> outer_;

  std::vector<int> offset_;  // first dart id of each vertex
  std::vector<int> tail_, head_, reverse_, next_, face_of_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> outer_faces_;
};

/// Outer-face peeling: L_0 = vertices on the outer face, L_{i+1} = vertices
/// on the outer face once L_0..L_i are removed. Vertices without incident
/// edges go to L_0.
std::vector<std::vector<int>> peel_layers(const PlanarEmbedding& pe);
/// Layer index of each vertex (same partition as peel_layers).
std::vector<int> layer_index(const PlanarEmbedding& pe);

/// Rotation system of a straight-line drawing (clockwise by angle), with the
/// outer face found as the face of negative signed area.
PlanarEmbedding embedding_from_coordinates(const Graph& g,
                                           const std::vector<std::pair<double, double>>& xy);

}  // namespace ecg

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ecg/embedding.hpp"
#include "ecg/graph.hpp"

namespace ecg {

/// A triangle whose removal disconnects g, or nothing. g must be connected
/// (Disconnected otherwise).
std::optional<std::array<int, 3>> has_triangle_separator(const Graph& g);

struct PlanarAlphaPrime {
  int size = 0;
  std::vector<EdgeRef> witness;  // sorted
};

/// Exact alpha' of a connected plane graph without triangle separator: every
/// face longer than three is stellated and the edges of g crossed by a
/// maximum matching of the resulting dual form the answer. K_4 gives 1.
/// Throws Disconnected or TriangleSeparatorPresent.
PlanarAlphaPrime alpha_prime_planar_matching(const PlanarEmbedding& pe);

struct BakerResult {
  int size = 0;
  std::vector<EdgeRef> witness;  // sorted, independent in g
  int shift = 0;                 // best i
  std::vector<int> shift_sizes;  // |A_i| for i = 0..k-1
};

/// Baker's scheme: for each shift i the slices of layers
/// jk+i+1 .. jk+i+k-1 are solved exactly by tree-decomposition DP and their
/// answers united; the best shift is returned. At least (1 - 2/k) alpha'.
BakerResult baker_alpha_prime(const PlanarEmbedding& pe, int k);

// Embedded generators.

PlanarEmbedding grid_embedding(int rows, int cols);
PlanarEmbedding cycle_embedding(int n);
/// Hub 0, rim 1..n.
PlanarEmbedding wheel_embedding(int n);
/// cp(3) with partners (0,1), (2,3), (4,5); outer face 0-2-4.
PlanarEmbedding octahedron_embedding();
PlanarEmbedding k4_embedding();

/// Random triangulation on n >= 3 vertices: repeated stacking of a new
/// vertex into a random face, then `flips` attempted random edge flips.
/// With flips = 0 the result is a stacked (Apollonian) triangulation.
PlanarEmbedding random_triangulation(int n, std::uint64_t seed, int flips);

/// Random triangulation on n >= 6 vertices without separating triangles
/// (4-connected): random flips, then flips on separating triangles until
/// none is left.
PlanarEmbedding random_4connected_triangulation(int n, std::uint64_t seed);

}  // namespace ecg

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

/// cp(n): 2n vertices, 2i and 2i+1 the only non-adjacent pairs. n >= 1.
Graph cocktail_party(int n);

/// Connected trivially perfect graph: the comparability graph of a random
/// rooted tree (every vertex adjacent to its ancestors), randomly relabelled.
Graph random_trivially_perfect(int n, std::uint64_t seed);

/// Throws NotTriviallyPerfect with an induced C4 or P4 unless every edge uv
/// has nested closed neighbourhoods.
void check_trivially_perfect(const Graph& g);
bool is_trivially_perfect(const Graph& g);

/// alpha'(g) for connected trivially perfect g, which equals theta_e(g) and
/// alpha(g); 0 for a single vertex. Throws Disconnected or NotTriviallyPerfect.
int alpha_prime_trivially_perfect(const Graph& g);

/// Two 4-wheels (hubs 0 and 5, rims 1-4 and 6-9) with the hubs joined.
Graph dh_counterexample();

/// Elimination order by isolated vertices, pendant vertices and twins, if
/// one empties the graph to a single vertex (distance-hereditary graphs).
std::optional<std::vector<int>> distance_hereditary_elimination(const Graph& g);

/// log2(n + 1), n >= 1.
double gyarfas_bound(int n);

/// G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);
/// G(n, p) with a rim edge deleted from each odd wheel until none is left.
Graph odd_wheel_free_random(int n, double p, std::uint64_t seed);
/// Random cograph: recursive random split into a join or a union.
Graph random_cograph(int n, std::uint64_t seed);
/// Random chordal graph: each new vertex is attached to a random clique.
Graph random_chordal(int n, std::uint64_t seed);
/// Random graph with a random elimination that keeps treewidth <= width.
Graph random_partial_ktree(int n, int width, double keep, std::uint64_t seed);

}  // namespace ecg

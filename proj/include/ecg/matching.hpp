#pragma once

#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(n^3)). Edges are returned sorted.
std::vector<EdgeRef> max_cardinality_matching_general(const Graph& g);

}  // namespace ecg

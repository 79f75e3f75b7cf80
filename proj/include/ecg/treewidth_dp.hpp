#pragma once

#include <map>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/tree_decomposition.hpp"

namespace ecg {

/// Per node: independent edge sets F of the bag's induced edges mapped to the
/// largest independent edge set A of the graph below with A restricted to the
/// bag equal to F. Keys that admit no such A are absent.
using DpTable = std::map<std::vector<EdgeRef>, int>;

struct TreewidthDpResult {
  int size = 0;
  std::vector<EdgeRef> witness;  // sorted
  std::vector<DpTable> tables;   // indexed like the decomposition nodes
};

/// alpha'(g) by dynamic programming over a nice tree decomposition of g.
/// Throws InvalidDecomposition for a bad decomposition and BudgetExceeded
/// when its width exceeds max_width.
TreewidthDpResult treewidth_dp(const Graph& g, const NiceTreeDecomposition& ntd,
                               int max_width = 25);

}  // namespace ecg

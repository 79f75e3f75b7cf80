#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

struct Literal {
  int var = 0;  // 0-based
  bool positive = true;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;

  /// Throws InvalidArgument on a variable out of range.
  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// DIMACS CNF with exactly three literals per clause.
CnfFormula parse_dimacs(std::string_view text);

/// H: g, two simplicial vertices on every edge and one vertex x adjacent to
/// all of g. alpha'(H) = 2m + alpha(g).
Graph lemma1_reduction(const Graph& g);

/// The octahedron cp(3) with inner triangle a0 a1 a2 and outer triangle
/// b0 b1 b2, b_j adjacent to a_i for i != j.
struct ClauseGadget {
  Graph graph;
  std::array<int, 3> inner{};
  std::array<int, 3> outer{};
  std::vector<EdgeRef> cross_edges;  // the six inner-outer edges
  /// Three maximum independent edge sets, each an induced C4, partitioning
  /// the edges. They are not the only ones: there are nine in all, and some
  /// avoid every independent triple of cross edges.
  std::array<std::vector<EdgeRef>, 3> max_sets;
};

ClauseGadget clause_gadget();

struct ReductionOutput {
  Graph g;                 // labelled, odd-wheel-free
  Graph k_graph;           // K_e(g) minus the simplicial triangles' edges
  std::vector<EdgeRef> k_edges;  // k_graph vertex -> edge of g
  int threshold = 0;       // L + 14M
  int simplicial_count = 0;
  CnfFormula formula;
  /// Gadget element name -> vertex ids of g (two ids for an edge).
  std::map<std::string, std::vector<int>> trace;
};

/// 3-SAT to vertex cover in edge-clique graphs of graphs without odd wheels.
ReductionOutput sat_reduction(const CnfFormula& f);

struct OddWheel {
  int hub = 0;
  std::vector<int> cycle;  // odd, in cyclic order, inside N(hub)
};

/// An odd wheel of g, or nothing. Uses: no odd wheel iff every neighbourhood
/// induces a bipartite graph.
std::optional<OddWheel> check_no_odd_wheel(const Graph& g);

/// Reads an assignment off a vertex cover of k_graph: a variable is true when
/// its positive literal edge is covered. Throws InvalidArgument for a cover
/// that misses an edge or exceeds the threshold, and InternalError if the
/// assignment fails the formula. That can happen even for a satisfiable
/// formula: a clause gadget can cover all three of its slots at cost 8.
std::vector<bool> decode_assignment(const ReductionOutput& r, const std::vector<int>& cover);

}  // namespace ecg

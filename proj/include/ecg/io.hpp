#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ecg/embedding.hpp"
#include "ecg/graph.hpp"
#include "ecg/tree_decomposition.hpp"

namespace ecg::io {

/// graph6, with or without the ">>graph6<<" header. Padding bits must be zero.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge list: "n m", then m lines "u v", then optional "label <v> <text>"
/// lines. '#' starts a comment. When the first line cannot be a header (too
/// many edges for n, or fewer edge lines than m) all leading pairs are read as
/// edges and n is the largest id plus one.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Edge-list header and edges, then one "rot <v> <w1> <w2> ..." line per
/// vertex (clockwise neighbour order), then "outer <u> <v>".
PlanarEmbedding parse_planar(std::string_view text);
std::string to_planar(const PlanarEmbedding& pe);

/// "bag <id> <v>..." lines and "edge <a> <b>" lines.
TreeDecomposition parse_tree_decomposition(std::string_view text);
std::string to_tree_decomposition(const TreeDecomposition& td);

enum class Format { graph6, edges, planar };
Format parse_format(std::string_view name);
/// Guess from content: "rot"/"outer" lines mean planar, a leading "n m"
/// pair means an edge list, anything else graph6.
Format detect_format(std::string_view text);

/// Any graph format (planar files yield their underlying graph).
Graph parse_graph(std::string_view text, Format format);

std::string read_file(const std::string& path);

}  // namespace ecg::io

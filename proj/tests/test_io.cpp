#include "doctest.h"
#include "ecg/errors.hpp"
#include "ecg/families.hpp"
#include "ecg/io.hpp"
#include "ecg/planar.hpp"

using namespace ecg;

namespace {

ParseErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no ParseError thrown");
  return ParseErrorKind::malformed_body;
}

}  // namespace

TEST_CASE("graph6 known strings") {
  // Standard encodings: K_2 is "A_", P_3 (0-1-2) is "Bg", K_4 is "C~".
  CHECK(io::to_graph6(complete(2)) == "A_");
  CHECK(io::to_graph6(path(3)) == "Bg");
  CHECK(io::to_graph6(complete(4)) == "C~");
  CHECK(io::parse_graph6("C~") == complete(4));
  CHECK(io::parse_graph6(">>graph6<<Bg\n") == path(3));
  CHECK(io::parse_graph6("?").vertex_count() == 0);
}

TEST_CASE("graph6 round trip") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = static_cast<int>(seed % 70);
    const Graph g = random_graph(n, 0.3, seed);
    const std::string s = io::to_graph6(g);
    CHECK(io::parse_graph6(s) == g);
    CHECK(io::to_graph6(io::parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 errors") {
  CHECK(kind_of([] { io::parse_graph6(""); }) == ParseErrorKind::malformed_header);
  CHECK(kind_of([] { io::parse_graph6("C~~"); }) == ParseErrorKind::malformed_body);
  CHECK(kind_of([] { io::parse_graph6("B!"); }) == ParseErrorKind::malformed_body);
  // P_3 body with a padding bit set.
  CHECK(kind_of([] { io::parse_graph6("Bh"); }) == ParseErrorKind::malformed_body);
}

TEST_CASE("edge list") {
  CHECK(io::parse_edge_list("0 1\n1 2") == path(3));
  CHECK(io::parse_edge_list("3 2\n0 1\n1 2\n") == path(3));
  Graph g = path(3);
  g.set_label(1, "middle vertex");
  const std::string text = io::to_edge_list(g);
  CHECK(text == "3 2\n0 1\n1 2\nlabel 1 middle vertex\n");
  const Graph back = io::parse_edge_list(text);
  CHECK(back == g);
  CHECK(back.label(1) == "middle vertex");
  CHECK(io::parse_edge_list("# comment\n2 1\n0 1 # edge\n") == complete(2));

  CHECK(kind_of([] { io::parse_edge_list("x y\n"); }) == ParseErrorKind::malformed_header);
  CHECK(kind_of([] { io::parse_edge_list("3 1\n0 3\n"); }) == ParseErrorKind::vertex_out_of_range);
  CHECK(kind_of([] { io::parse_edge_list("3 2\n0 1\n1 0\n"); }) == ParseErrorKind::duplicate_edge);
  CHECK(kind_of([] { io::parse_edge_list("3 1\n1 1\n"); }) == ParseErrorKind::self_loop);
  CHECK(kind_of([] { io::parse_edge_list("3 1\n0 1\nextra\n"); }) == ParseErrorKind::malformed_body);
}

TEST_CASE("planar format") {
  const char* k4 =
      "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
      "rot 0 1 3 2\nrot 1 0 2 3\nrot 2 0 3 1\nrot 3 0 1 2\nouter 1 2\n";
  const PlanarEmbedding pe = io::parse_planar(k4);
  CHECK(pe.face_count() == 4);
  CHECK(pe.graph() == complete(4));
  const PlanarEmbedding again = io::parse_planar(io::to_planar(pe));
  CHECK(io::to_planar(again) == io::to_planar(pe));

  for (const auto& emb : {grid_embedding(3, 4), octahedron_embedding(), wheel_embedding(5),
                          random_triangulation(12, 3, 20)}) {
    const std::string text = io::to_planar(emb);
    CHECK(io::to_planar(io::parse_planar(text)) == text);
  }

  CHECK(kind_of([] {
          io::parse_planar("3 2\n0 1\n1 2\nrot 0 1\nrot 1 0 2\nrot 2\nouter 0 1\n");
        }) == ParseErrorKind::non_symmetric_rotation);
  CHECK(kind_of([] { io::parse_planar("2 1\n0 1\nrot 0 1\nrot 1 0\n"); }) ==
        ParseErrorKind::missing_outer_face);
  CHECK(kind_of([] { io::parse_planar("2 1\n0 1\nrot 0 2\nrot 1 0\nouter 0 1\n"); }) ==
        ParseErrorKind::vertex_out_of_range);
}

TEST_CASE("non-planar rotation data is rejected") {
  // K_4 with one rotation reversed has Euler characteristic 0.
  const char* bad =
      "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
      "rot 0 1 2 3\nrot 1 0 2 3\nrot 2 0 3 1\nrot 3 0 1 2\nouter 1 2\n";
  CHECK_THROWS_AS(io::parse_planar(bad), InvalidEmbedding);
}

TEST_CASE("tree decomposition format") {
  const auto td = io::parse_tree_decomposition("bag 0 0 1\nbag 1 2 1\nedge 0 1\n");
  CHECK(td.bags[1] == std::vector<int>{1, 2});
  CHECK(io::to_tree_decomposition(td) == "bag 0 0 1\nbag 1 1 2\nedge 0 1\n");
  CHECK_THROWS_AS(io::parse_tree_decomposition("bag 0 1\nedge 0 3\n"), ParseError);
}

TEST_CASE("format detection") {
  CHECK(io::detect_format("C~") == io::Format::graph6);
  CHECK(io::detect_format("3 2\n0 1\n1 2\n") == io::Format::edges);
  CHECK(io::detect_format("2 1\n0 1\nrot 0 1\nrot 1 0\nouter 0 1\n") == io::Format::planar);
  CHECK(io::parse_format("g6") == io::Format::graph6);
  CHECK_THROWS_AS(io::parse_format("dot"), InvalidArgument);
}

#include <algorithm>
#include <cmath>

#include "brute_force.hpp"
#include "doctest.h"
#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/families.hpp"
#include "ecg/matching.hpp"
#include "ecg/oracle.hpp"
#include "ecg/planar.hpp"
#include "ecg/random.hpp"
#include "ecg/tree_decomposition.hpp"
#include "ecg/treewidth_dp.hpp"

using namespace ecg;

namespace {

std::vector<int> layer_sizes(const PlanarEmbedding& pe) {
  std::vector<int> sizes;
  for (const auto& l : peel_layers(pe)) sizes.push_back(static_cast<int>(l.size()));
  return sizes;
}

bool euler_ok(const PlanarEmbedding& pe) {
  const Graph& g = pe.graph();
  return g.vertex_count() - g.edge_count() + pe.face_count() == 2;
}

NiceTreeDecomposition random_nice(const Graph& g, Rng& rng) {
  std::vector<int> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  rng.shuffle(order);
  return make_nice(g, decomposition_from_elimination(g, order));
}

}  // namespace

TEST_CASE("faces of generated embeddings") {
  CHECK(k4_embedding().face_count() == 4);
  CHECK(octahedron_embedding().face_count() == 8);
  CHECK(grid_embedding(4, 4).face_count() == 10);
  CHECK(cycle_embedding(6).face_count() == 2);
  CHECK(wheel_embedding(5).face_count() == 6);
  for (const auto& pe : {k4_embedding(), octahedron_embedding(), grid_embedding(3, 5),
                         wheel_embedding(7)})
    CHECK(euler_ok(pe));
  // Outer faces found from coordinates.
  CHECK(grid_embedding(4, 4).face(grid_embedding(4, 4).outer_faces().front()).size() == 12);
  const auto oct = octahedron_embedding();
  auto outer = oct.face_vertices(oct.outer_faces().front());
  std::sort(outer.begin(), outer.end());
  CHECK(outer == std::vector<int>{0, 2, 4});
}

TEST_CASE("random triangulations") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 4 + static_cast<int>(seed % 30);
    const auto pe = random_triangulation(n, seed, 3 * n);
    CHECK(pe.graph().edge_count() == 3 * n - 6);
    CHECK(euler_ok(pe));
    for (int f = 0; f < pe.face_count(); ++f) CHECK(pe.face(f).size() == 3);
  }
}

TEST_CASE("layers") {
  CHECK(layer_sizes(cycle_embedding(4)) == std::vector<int>{4});
  CHECK(layer_sizes(grid_embedding(4, 4)) == std::vector<int>{12, 4});
  CHECK(layer_sizes(octahedron_embedding()) == std::vector<int>{3, 3});
  CHECK(layer_sizes(grid_embedding(5, 5)) == std::vector<int>{16, 8, 1});
  CHECK(layer_sizes(wheel_embedding(6)) == std::vector<int>{6, 1});
}

TEST_CASE("layers match literal outer-face peeling") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto pe = random_triangulation(10 + static_cast<int>(seed), seed, 30);
    const auto level = layer_index(pe);
    std::vector<int> rest(pe.vertex_count());
    for (int v = 0; v < pe.vertex_count(); ++v) rest[v] = v;
    for (int t = 0; !rest.empty(); ++t) {
      const auto sub = pe.restricted(rest);
      std::vector<char> on_outer(rest.size(), 0);
      for (int v = 0; v < sub.vertex_count(); ++v)
        if (sub.graph().degree(v) == 0) on_outer[v] = 1;
      for (int f : sub.outer_faces())
        for (int v : sub.face_vertices(f)) on_outer[v] = 1;
      std::vector<int> next;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (on_outer[i]) {
          CHECK(level[rest[i]] == t);
        } else {
          next.push_back(rest[i]);
        }
      }
      rest = next;
    }
  }
}

TEST_CASE("tree decomposition validation") {
  const Graph g = path(3);
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK_NOTHROW(validate(g, td));
  TreeDecomposition missing_edge{{{0, 1}, {2}}, {{0, 1}}};
  CHECK_THROWS_AS(validate(g, missing_edge), InvalidDecomposition);
  TreeDecomposition broken_subtree{{{0, 1}, {2, 1}, {0}}, {{0, 2}, {2, 1}}};
  CHECK_THROWS_AS(validate(g, broken_subtree), InvalidDecomposition);
  TreeDecomposition not_tree{{{0, 1}, {1, 2}}, {}};
  CHECK_THROWS_AS(validate(g, not_tree), InvalidDecomposition);
  const auto ntd = make_nice(g, td);
  CHECK_NOTHROW(validate(g, ntd));
  for (const auto& node : ntd.nodes)
    if (node.kind == NiceKind::leaf) CHECK(node.bag.size() == 1);
}

TEST_CASE("outerplanar slice decompositions") {
  CHECK(tree_decomposition_outerplanar_slice(cycle_embedding(3), 1).width() == 2);
  for (int n = 3; n <= 12; ++n) CHECK(tree_decomposition_outerplanar_slice(cycle_embedding(n), 1).width() <= 2);
  CHECK(tree_decomposition_outerplanar_slice(grid_embedding(3, 10), 2).width() <= 5);
  // The layered construction alone also respects 3k-1.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pe = random_triangulation(8 + static_cast<int>(seed), seed, 40);
    const int layers = static_cast<int>(peel_layers(pe).size());
    const auto td = layered_planar_decomposition(pe);
    CHECK_NOTHROW(validate(pe.graph(), td));
    CHECK(td.width() <= 3 * layers - 1);
  }
  for (const auto& pe : {grid_embedding(6, 7), grid_embedding(2, 9), wheel_embedding(9),
                         octahedron_embedding()}) {
    const auto td = layered_planar_decomposition(pe);
    CHECK_NOTHROW(validate(pe.graph(), td));
    CHECK(td.width() <= 3 * static_cast<int>(peel_layers(pe).size()) - 1);
  }
  // Disconnected input with isolated vertices.
  const auto two = embedding_from_coordinates(disjoint_union(cycle(4), empty_graph(2)),
                                              {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {5, 5}, {6, 6}});
  CHECK_NOTHROW(validate(two.graph(), layered_planar_decomposition(two)));
}

TEST_CASE("treewidth DP") {
  SUBCASE("K3 in one bag") {
    const Graph g = complete(3);
    const auto ntd = make_nice(g, TreeDecomposition{{{0, 1, 2}}, {}});
    const auto r = treewidth_dp(g, ntd);
    CHECK(r.size == 1);
  }
  SUBCASE("leaf tables") {
    const Graph g = random_graph(9, 0.5, 4);
    const auto ntd = make_nice(g, heuristic_decomposition(g));
    const auto r = treewidth_dp(g, ntd);
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
      CHECK(r.tables[i].count({}) == 1);
      if (ntd.nodes[i].kind == NiceKind::leaf) {
        CHECK(r.tables[i].size() == 1);
        CHECK(r.tables[i].at({}) == 0);
      }
      for (const auto& [f, value] : r.tables[i]) {
        CHECK(is_independent_edge_set(g, f));
        CHECK(value >= static_cast<int>(f.size()));
      }
    }
  }
  SUBCASE("agrees with the oracle") {
    Rng rng(99);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const int n = 1 + static_cast<int>(seed % 12);
      const Graph g = random_graph(n, 0.2 + 0.6 * (seed % 5) / 4.0, seed + 400);
      const auto ntd = seed % 2 ? random_nice(g, rng) : make_nice(g, heuristic_decomposition(g));
      const auto r = treewidth_dp(g, ntd);
      CHECK(r.size == alpha_prime_oracle(g).size);
      CHECK(is_independent_edge_set(g, r.witness));
    }
  }
  SUBCASE("width guard") {
    const Graph g = complete(27);
    TreeDecomposition one;
    one.bags.push_back({});
    for (int v = 0; v < 27; ++v) one.bags[0].push_back(v);
    CHECK_THROWS_AS(treewidth_dp(g, make_nice(g, one)), BudgetExceeded);
  }
}

TEST_CASE("general matching") {
  CHECK(max_cardinality_matching_general(cycle(5)).size() == 2);
  CHECK(max_cardinality_matching_general(petersen()).size() == 5);
  CHECK(max_cardinality_matching_general(complete(4)).size() == 2);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = random_graph(4 + static_cast<int>(seed % 11), 0.3, seed);
    const auto m = max_cardinality_matching_general(g);
    CHECK(static_cast<int>(m.size()) == brute::matching(g));
    std::vector<int> used;
    for (const auto& e : m) {
      CHECK(g.has_edge(e));
      used.push_back(e.u);
      used.push_back(e.v);
    }
    std::sort(used.begin(), used.end());
    CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
  }
}

TEST_CASE("triangle separators") {
  Graph two_k4(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (!(u == 3 && v == 4)) two_k4.add_edge(u, v);
  const auto t = has_triangle_separator(two_k4);
  REQUIRE(t.has_value());
  CHECK(*t == std::array<int, 3>{0, 1, 2});
  CHECK_FALSE(has_triangle_separator(cocktail_party(3)).has_value());
  CHECK_FALSE(has_triangle_separator(grid_embedding(4, 4).graph()).has_value());
  CHECK_FALSE(has_triangle_separator(complete(4)).has_value());
  CHECK_THROWS_AS(has_triangle_separator(empty_graph(2)), Disconnected);
}

TEST_CASE("dual matching") {
  CHECK(alpha_prime_planar_matching(k4_embedding()).size == 1);
  CHECK(alpha_prime_planar_matching(octahedron_embedding()).size == 4);
  CHECK(alpha_prime_planar_matching(cycle_embedding(4)).size == 4);
  CHECK(alpha_prime_planar_matching(grid_embedding(4, 4)).size == 24);
  CHECK_THROWS_AS(alpha_prime_planar_matching(random_triangulation(8, 1, 0)), TriangleSeparatorPresent);
  const auto split = embedding_from_coordinates(disjoint_union(cycle(3), cycle(3)),
                                                {{0, 0}, {1, 0}, {0, 1}, {5, 0}, {6, 0}, {5, 1}});
  CHECK_THROWS_AS(alpha_prime_planar_matching(split), Disconnected);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 6 + static_cast<int>(seed % 9);
    const auto pe = random_4connected_triangulation(n, seed);
    REQUIRE_FALSE(has_triangle_separator(pe.graph()));
    const auto r = alpha_prime_planar_matching(pe);
    CHECK(r.size == alpha_prime_oracle(pe.graph()).size);
    CHECK(is_independent_edge_set(pe.graph(), r.witness));
  }
  for (const auto& pe : {grid_embedding(2, 5), grid_embedding(3, 4), wheel_embedding(4),
                         wheel_embedding(6), cycle_embedding(7)}) {
    REQUIRE_FALSE(has_triangle_separator(pe.graph()));
    CHECK(alpha_prime_planar_matching(pe).size == alpha_prime_oracle(pe.graph()).size);
  }
}

TEST_CASE("Baker") {
  CHECK(baker_alpha_prime(cycle_embedding(4), 3).size == 4);
  CHECK(baker_alpha_prime(grid_embedding(4, 4), 4).size == 24);
  CHECK_THROWS_AS(baker_alpha_prime(cycle_embedding(4), 2), InvalidArgument);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 8 + static_cast<int>(seed % 20);
    const auto pe = random_triangulation(n, seed, 3 * n);
    const int opt = alpha_prime_oracle(pe.graph()).size;
    for (int k : {3, 4, 6}) {
      const auto r = baker_alpha_prime(pe, k);
      CHECK(is_independent_edge_set(pe.graph(), r.witness));
      CHECK(r.size >= static_cast<int>(std::ceil((1.0 - 2.0 / k) * opt)));
      CHECK(r.size <= opt);
    }
  }
}

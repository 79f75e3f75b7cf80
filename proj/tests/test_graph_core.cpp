#include <algorithm>

#include "brute_force.hpp"
#include "doctest.h"
#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/families.hpp"
#include "ecg/graph.hpp"

using namespace ecg;

namespace {

// join(P3, C4): path 0-1-2, cycle 3-4-5-6.
Graph p3_join_c4() { return join(path(3), cycle(4)); }

}  // namespace

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(2, 1);
  g.add_edge(1, 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(EdgeRef(2, 1)));
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 4), InvalidArgument);
  g.remove_edge(1, 2);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("constructors") {
  CHECK(join(complete(1), cycle(5)) == wheel(5));
  CHECK(complete_multipartite(2, 2) == cycle(4).induced({0, 2, 1, 3}));
  for (int n = 1; n <= 5; ++n) {
    const Graph cp = complete_multipartite(2, n);
    CHECK(cp.vertex_count() == 2 * n);
    CHECK(cp.edge_count() == 2 * n * (n - 1));
    CHECK(cp == cocktail_party(n));
  }
  const Graph s = add_simplicial_vertex(complete(3), EdgeRef(0, 2));
  CHECK(s.vertex_count() == 4);
  CHECK(s.edge_count() == 5);
  CHECK(s.neighbors(3) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(add_simplicial_vertex(path(3), EdgeRef(0, 2)), InvalidArgument);
  CHECK(petersen().edge_count() == 15);
  CHECK(disjoint_union(complete(3), complete(3)).edge_count() == 6);
  CHECK_THROWS_AS(cycle(2), InvalidArgument);
}

TEST_CASE("edge-clique graph examples") {
  SUBCASE("K3 maps to K3") {
    const auto ke = edge_clique_graph(complete(3));
    CHECK(ke.graph == complete(3));
  }
  SUBCASE("triangle-free graphs map to edgeless graphs") {
    for (const Graph& g : {cycle(5), path(6), petersen(), cycle(4)}) {
      const auto ke = edge_clique_graph(g);
      CHECK(ke.graph.vertex_count() == g.edge_count());
      CHECK(ke.graph.edge_count() == 0);
    }
  }
  SUBCASE("join(P3, C4) has an induced C5") {
    const Graph g = p3_join_c4();
    const auto ke = edge_clique_graph(g);
    CHECK(ke.graph.vertex_count() == 18);  // 2 + 4 + 3*4 edges
    std::vector<int> ids;
    for (auto e : {EdgeRef(0, 1), EdgeRef(2, 3), EdgeRef(2, 6), EdgeRef(3, 4), EdgeRef(5, 6)})
      ids.push_back(ke.vertex_of(e));
    const Graph h = ke.graph.induced(ids);
    CHECK(h.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(h.degree(v) == 2);
    CHECK(is_connected(h));
  }
  SUBCASE("labels and index") {
    const auto ke = edge_clique_graph(path(3));
    CHECK(ke.graph.label(0) == "0-1");
    CHECK(ke.graph.label(1) == "1-2");
    CHECK(ke.vertex_of(EdgeRef(0, 2)) == -1);
    CHECK(ke.edges_of({1}) == std::vector<EdgeRef>{EdgeRef(1, 2)});
  }
}

TEST_CASE("independent edge sets") {
  const std::vector<EdgeRef> k3_pair{EdgeRef(0, 1), EdgeRef(0, 2)};
  CHECK_FALSE(is_independent_edge_set(complete(3), k3_pair));
  const auto c4 = cycle(4).edges();
  CHECK(is_independent_edge_set(cycle(4), c4));
  const std::vector<EdgeRef> joined{EdgeRef(0, 1), EdgeRef(3, 4)};
  CHECK_FALSE(is_independent_edge_set(p3_join_c4(), joined));
  const std::vector<EdgeRef> missing{EdgeRef(0, 2)};
  CHECK_THROWS_AS(is_independent_edge_set(path(3), missing), InvalidArgument);
  const std::vector<EdgeRef> repeated{EdgeRef(0, 1), EdgeRef(0, 1)};
  CHECK_FALSE(is_independent_edge_set(path(3), repeated));
}

TEST_CASE("independence agrees with K_e adjacency") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(7, 0.55, seed);
    const auto ke = edge_clique_graph(g);
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const std::vector<EdgeRef> pair{edges[i], edges[j]};
        const bool brute_dep = brute::same_clique(g, edges[i], edges[j]);
        CHECK(ke.graph.has_edge(static_cast<int>(i), static_cast<int>(j)) == brute_dep);
        CHECK(is_independent_edge_set(g, pair) == !brute_dep);
      }
  }
}

TEST_CASE("clique number") {
  CHECK(omega(complete(4)) == 4);
  CHECK(omega(cycle(5)) == 2);
  CHECK(omega(cocktail_party(3)) == 3);
  CHECK(omega(empty_graph(3)) == 1);
  CHECK(omega(Graph(0)) == 0);
  CHECK_THROWS_AS(omega(empty_graph(65)), BudgetExceeded);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(9, 0.5, seed);
    CHECK(omega(g) == brute::omega(g));
    const auto q = maximum_clique(g);
    CHECK(static_cast<int>(q.size()) == omega(g));
    CHECK(g.is_clique(q));
  }
}

TEST_CASE("omega identity on small graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph(8, 0.6, seed + 100);
    const int w = omega(g);
    if (w < 2) continue;
    CHECK(omega(edge_clique_graph(g).graph) == w * (w - 1) / 2);
  }
}

TEST_CASE("components and bipartition") {
  const Graph g = disjoint_union(path(3), cycle(4));
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[1] == std::vector<int>{3, 4, 5, 6});
  CHECK_FALSE(is_connected(g));
  CHECK(bipartition(g).has_value());
  CHECK_FALSE(bipartition(cycle(5)).has_value());
}

#include <algorithm>

#include "brute_force.hpp"
#include "doctest.h"
#include "ecg/cograph.hpp"
#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/families.hpp"
#include "ecg/oracle.hpp"

using namespace ecg;

namespace {

long cograph_alpha_prime(const Graph& g) {
  Cotree t = build_cotree(g);
  return alpha_prime_cograph(t).value;
}

}  // namespace

TEST_CASE("cotree of K2") {
  const Cotree t = build_cotree(complete(2));
  REQUIRE(t.nodes.size() == 3);
  const auto& root = t.nodes[t.root];
  CHECK(root.kind == CotreeKind::join);
  CHECK(t.nodes[root.left].vertex == 0);
  CHECK(t.nodes[root.right].vertex == 1);
}

TEST_CASE("P4 is rejected with the path as witness") {
  try {
    build_cotree(path(4));
    FAIL("expected NotCograph");
  } catch (const NotCograph& e) {
    auto w = e.witness();
    const Graph g = path(4);
    // a-b-c-d induced path.
    CHECK(g.has_edge(w[0], w[1]));
    CHECK(g.has_edge(w[1], w[2]));
    CHECK(g.has_edge(w[2], w[3]));
    CHECK_FALSE(g.has_edge(w[0], w[2]));
    CHECK_FALSE(g.has_edge(w[1], w[3]));
    CHECK_FALSE(g.has_edge(w[0], w[3]));
  }
}

TEST_CASE("non-cographs give induced P4 witnesses") {
  int rejected = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_graph(9, 0.4, seed);
    try {
      build_cotree(g);
    } catch (const NotCograph& e) {
      ++rejected;
      const auto w = e.witness();
      const Graph p = g.induced({w[0], w[1], w[2], w[3]});
      CHECK(p == path(4));
    }
  }
  CHECK(rejected > 50);
}

TEST_CASE("cotree evaluation reproduces the graph") {
  for (int n = 1; n <= 5; ++n) CHECK(build_cotree(cocktail_party(n)).evaluate() == cocktail_party(n));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_cograph(1 + static_cast<int>(seed % 25), seed);
    const Cotree t = build_cotree(g);
    CHECK(t.evaluate() == g);
    int leaves = 0;
    for (const auto& node : t.nodes) {
      if (node.kind == CotreeKind::leaf) {
        ++leaves;
        continue;
      }
      CHECK(t.nodes[node.left].min_vertex < t.nodes[node.right].min_vertex);
      const int a = t.nodes[node.left].alpha, b = t.nodes[node.right].alpha;
      CHECK(node.alpha == (node.kind == CotreeKind::join ? std::max(a, b) : a + b));
    }
    CHECK(leaves == g.vertex_count());
    CHECK(t.nodes[t.root].alpha == max_independent_set(g).size);
  }
}

TEST_CASE("d prime values") {
  for (int n = 1; n <= 6; ++n)
    for (int d : d_prime_all(build_cotree(complete(n)))) CHECK(d == (n > 1 ? 1 : 0));
  for (int n = 2; n <= 5; ++n)
    for (int d : d_prime_all(build_cotree(cocktail_party(n)))) CHECK(d == 2);
  const auto w4 = d_prime_all(build_cotree(wheel(4)));
  CHECK(w4 == std::vector<int>(5, 2));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_cograph(12, seed + 9);
    const auto d = d_prime_all(build_cotree(g));
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(d[v] == brute::alpha(g.induced(g.neighbors(v))));
  }
}

TEST_CASE("alpha prime for cographs: examples") {
  CHECK(cograph_alpha_prime(complete(4)) == 1);
  for (int n = 2; n <= 6; ++n) CHECK(cograph_alpha_prime(cocktail_party(n)) == 4);
  CHECK(cograph_alpha_prime(join(path(3), cycle(4))) == 4);
  CHECK(cograph_alpha_prime(disjoint_union(complete(3), complete(3))) == 2);
  CHECK(cograph_alpha_prime(complete(1)) == 0);
  CHECK(cograph_alpha_prime(empty_graph(4)) == 0);
}

TEST_CASE("alpha prime for cographs agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_cograph(1 + static_cast<int>(seed % 12), seed + 31);
    Cotree t = build_cotree(g);
    const auto r = alpha_prime_cograph(t);
    CHECK(r.value == alpha_prime_oracle(g).size);
    CHECK(is_independent_edge_set(g, r.witness));
    CHECK(static_cast<long>(r.witness.size()) == r.value);
    CHECK(g.is_independent(r.weight_set));
    long sum = 0;
    for (int x : r.weight_set) sum += r.d_prime[x];
    CHECK(sum == r.value);
    CHECK(rhs_equation0(g).value == r.value);
    // Node caches hold alpha' of each cotree node's subgraph.
    for (std::size_t p = 0; p < t.nodes.size(); p += 3) {
      const Graph sub = g.induced(t.vertices_below(static_cast<int>(p)));
      CHECK(t.nodes[p].alpha_prime == alpha_prime_oracle(sub).size);
    }
  }
}

TEST_CASE("d-prime lower bound") {
  CHECK(rhs_equation0(cycle(5)).value == 4);
  CHECK(alpha_prime_oracle(cycle(5)).size == 5);
  const Graph dh = dh_counterexample();
  CHECK(rhs_equation0(dh).value == 8);
  CHECK(alpha_prime_oracle(dh).size == 9);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_graph(8, 0.5, seed + 222);
    CHECK(rhs_equation0(g).value <= alpha_prime_oracle(g).size);
  }
}

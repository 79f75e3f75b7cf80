#include <cmath>

#include "brute_force.hpp"
#include "doctest.h"
#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/families.hpp"
#include "ecg/oracle.hpp"

using namespace ecg;

TEST_CASE("maximum independent set examples") {
  CHECK(max_independent_set(cycle(5)).size == 2);
  for (int n = 1; n <= 6; ++n) CHECK(max_independent_set(cocktail_party(n)).size == 2);
  const auto p = max_independent_set(petersen());
  CHECK(p.size == 4);
  CHECK(petersen().is_independent(p.vertices));
  CHECK(max_independent_set(Graph(0)).size == 0);
  CHECK(max_independent_set(empty_graph(5)).size == 5);
}

TEST_CASE("maximum independent set matches brute force") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 1 + static_cast<int>(seed % 16);
    const Graph g = random_graph(n, 0.1 + 0.8 * (seed % 7) / 6.0, seed);
    const auto r = max_independent_set(g);
    CHECK(r.size == brute::alpha(g));
    CHECK(static_cast<int>(r.vertices.size()) == r.size);
    CHECK(g.is_independent(r.vertices));
  }
}

TEST_CASE("witnesses are deterministic") {
  const Graph g = random_graph(30, 0.2, 5);
  CHECK(max_independent_set(g).vertices == max_independent_set(g).vertices);
}

TEST_CASE("weighted independent set") {
  const Graph g = path(3);
  const std::vector<long> w{1, 5, 1};
  CHECK(max_weight_independent_set(g, w).weight == 5);
  const std::vector<long> w2{3, 5, 3};
  const auto r = max_weight_independent_set(g, w2);
  CHECK(r.weight == 6);
  CHECK(r.vertices == std::vector<int>{0, 2});
  const std::vector<long> negative{-1, 0, 0};
  CHECK_THROWS_AS(max_weight_independent_set(g, negative), InvalidArgument);
}

TEST_CASE("vertex cover") {
  CHECK(min_vertex_cover(cycle(4)).size == 2);
  for (int n = 1; n <= 7; ++n) CHECK(min_vertex_cover(complete(n)).size == n - 1);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(12, 0.3, seed);
    const auto c = min_vertex_cover(g);
    CHECK(c.size + max_independent_set(g).size == 12);
    Bitset in(12);
    for (int v : c.vertices) in.set(v);
    for (const auto& e : g.edges()) CHECK((in.test(e.u) || in.test(e.v)));
  }
}

TEST_CASE("alpha prime oracle") {
  CHECK(alpha_prime_oracle(complete(4)).size == 1);
  CHECK(alpha_prime_oracle(cycle(5)).size == 5);
  for (int n = 2; n <= 6; ++n) CHECK(alpha_prime_oracle(cocktail_party(n)).size == 4);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph g = random_graph(7, 0.6, seed + 1000);
    const auto r = alpha_prime_oracle(g);
    CHECK(r.size == brute::alpha_prime(g));
    CHECK(r.size == max_independent_set(edge_clique_graph(g).graph).size);
    CHECK(is_independent_edge_set(g, r.edges));
    CHECK(static_cast<int>(r.edges.size()) == r.size);
  }
}

TEST_CASE("budgets are honoured") {
  SolverBudget tiny;
  tiny.max_nodes = 3;
  CHECK_THROWS_AS(max_independent_set(random_graph(60, 0.1, 1), tiny), BudgetExceeded);
  SolverBudget few;
  few.max_vertices = 5;
  CHECK_THROWS_AS(max_independent_set(cycle(6), few), BudgetExceeded);
  CHECK_THROWS_AS(alpha_prime_oracle(cycle(6), few), BudgetExceeded);
  SolverBudget invalid;
  invalid.time_limit = 0;
  CHECK_THROWS_AS(max_independent_set(cycle(6), invalid), InvalidArgument);
}

TEST_CASE("maximal cliques") {
  const auto c = maximal_cliques(cocktail_party(3));
  CHECK(c.size() == 8);
  for (const auto& q : c) CHECK(q.size() == 3);
  const auto s = maximal_cliques(disjoint_union(complete(1), path(3)));
  CHECK(s == std::vector<std::vector<int>>{{0}, {1, 2}, {2, 3}});
}

TEST_CASE("theta_e exact") {
  for (const Graph& g : {cycle(5), petersen(), path(6)}) CHECK(theta_e_exact(g) == g.edge_count());
  CHECK(theta_e_exact(cocktail_party(2)) == 4);
  CHECK(theta_e_exact(cocktail_party(2)) >= std::log2(5.0));
  CHECK(theta_e_exact(complete(5)) == 1);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(7, 0.5, seed + 77);
    CHECK(theta_e_exact(g) == brute::theta_e(g));
  }
}

TEST_CASE("chordal graphs: alpha prime equals theta_e") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_chordal(9, seed);
    CHECK(alpha_prime_oracle(g).size == theta_e_exact(g));
  }
}

TEST_CASE("Gyarfas bound on graphs without isolated or equivalent vertices") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200 && checked < 40; ++seed) {
    const Graph g = random_graph(8, 0.5, seed + 5000);
    bool ok = true;
    for (int v = 0; v < 8 && ok; ++v) {
      if (g.degree(v) == 0) ok = false;
      for (int w : g.neighbors(v)) {
        Bitset a = g.row(v), b = g.row(w);
        a.set(v);
        b.set(w);
        if (a == b) ok = false;
      }
    }
    if (!ok) continue;
    ++checked;
    CHECK(theta_e_exact(g) >= gyarfas_bound(8));
  }
  CHECK(checked > 10);
}

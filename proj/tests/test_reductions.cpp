#include <algorithm>

#include "doctest.h"
#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/families.hpp"
#include "ecg/oracle.hpp"
#include "ecg/reductions.hpp"

using namespace ecg;

namespace {

CnfFormula one_clause() {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses.push_back({Literal{0, true}, Literal{1, true}, Literal{2, true}});
  return f;
}

}  // namespace

TEST_CASE("DIMACS parsing") {
  const auto f = parse_dimacs("c example\np cnf 3 2\n1 -2 3 0\n-1 2\n-3 0\n");
  CHECK(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0][1].var == 1);
  CHECK_FALSE(f.clauses[0][1].positive);
  CHECK(f.clauses[1][2].var == 2);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
}

TEST_CASE("independent-set reduction adds 2m") {
  auto check = [](const Graph& g) {
    const Graph h = lemma1_reduction(g);
    CHECK(h.vertex_count() == g.vertex_count() + 2 * g.edge_count() + 1);
    CHECK(alpha_prime_oracle(h).size == 2 * g.edge_count() + max_independent_set(g).size);
  };
  CHECK(alpha_prime_oracle(lemma1_reduction(complete(3))).size == 7);
  CHECK(alpha_prime_oracle(lemma1_reduction(complete(2))).size == 3);
  CHECK(alpha_prime_oracle(lemma1_reduction(empty_graph(3))).size == 3);
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    check(random_graph(1 + static_cast<int>(seed % 7), 0.5, seed));
}

TEST_CASE("clause gadget") {
  const ClauseGadget cg = clause_gadget();
  CHECK(cg.graph == cocktail_party(3).induced({0, 2, 4, 1, 3, 5}));
  CHECK(cg.graph.edge_count() == 12);
  CHECK(alpha_prime_oracle(cg.graph).size == 4);
  const auto ke = edge_clique_graph(cg.graph);
  std::vector<int> f;
  for (const auto& e : cg.cross_edges) f.push_back(ke.vertex_of(e));
  const Graph c6 = ke.graph.induced(f);
  CHECK(c6.edge_count() == 6);
  CHECK(is_connected(c6));
  for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
  std::vector<EdgeRef> all;
  for (const auto& set : cg.max_sets) {
    CHECK(set.size() == 4);
    CHECK(is_independent_edge_set(cg.graph, set));
    all.insert(all.end(), set.begin(), set.end());
  }
  std::sort(all.begin(), all.end());
  CHECK(all == cg.graph.edges());
}

TEST_CASE("odd wheel check") {
  const auto w = check_no_odd_wheel(complete(4));
  REQUIRE(w.has_value());
  CHECK(w->cycle.size() % 2 == 1);
  for (std::size_t i = 0; i < w->cycle.size(); ++i) {
    CHECK(complete(4).has_edge(w->hub, w->cycle[i]));
    CHECK(complete(4).has_edge(w->cycle[i], w->cycle[(i + 1) % w->cycle.size()]));
  }
  CHECK_FALSE(check_no_odd_wheel(cocktail_party(3)).has_value());
  CHECK_FALSE(check_no_odd_wheel(cycle(6)).has_value());
  CHECK_FALSE(check_no_odd_wheel(complete_multipartite(3, 2)).has_value());
  const auto w5 = check_no_odd_wheel(wheel(5));
  REQUIRE(w5.has_value());
  CHECK(w5->hub == 0);
  CHECK(w5->cycle.size() == 5);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK_FALSE(check_no_odd_wheel(odd_wheel_free_random(12, 0.5, seed)).has_value());
}

TEST_CASE("SAT reduction of a single clause") {
  const auto r = sat_reduction(one_clause());
  CHECK(r.threshold == 17);
  CHECK_FALSE(check_no_odd_wheel(r.g).has_value());
  CHECK(omega(r.g) <= 3);
  const auto cover = min_vertex_cover(r.k_graph);
  CHECK(cover.size == 17);
  const auto assignment = decode_assignment(r, cover.vertices);
  CHECK(one_clause().satisfied_by(assignment));
  // The simplicial vertices account for the rest of a cover of all of K_e(g).
  CHECK(min_vertex_cover(edge_clique_graph(r.g).graph).size == 17 + 2 * r.simplicial_count);

  std::vector<int> short_cover(cover.vertices.begin() + 1, cover.vertices.end());
  CHECK_THROWS_AS(decode_assignment(r, short_cover), InvalidArgument);
  std::vector<int> big(r.k_graph.vertex_count());
  for (int i = 0; i < r.k_graph.vertex_count(); ++i) big[i] = i;
  CHECK_THROWS_AS(decode_assignment(r, big), InvalidArgument);

  CHECK(r.trace.count("var:0:pos") == 1);
  CHECK(r.trace.count("clause:0:link:2:v3") == 1);
  for (const auto& [name, ids] : r.trace)
    for (int v : ids) CHECK(v < r.g.vertex_count());
}

TEST_CASE("SAT reduction round trip on small formulas") {
  // (x | y | z) & (!x | !y | !z) & (x | !y | z) and a repeated-literal clause.
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{Literal{0, true}, Literal{1, true}, Literal{2, true}},
               {Literal{0, false}, Literal{1, false}, Literal{2, false}}};
  const auto r = sat_reduction(f);
  CHECK(r.threshold == 3 + 28);
  const auto cover = min_vertex_cover(r.k_graph);
  CHECK(cover.size <= r.threshold);
  CHECK(f.satisfied_by(decode_assignment(r, cover.vertices)));

  CnfFormula repeated;
  repeated.num_vars = 1;
  repeated.clauses = {{Literal{0, true}, Literal{0, true}, Literal{0, true}}};
  const auto rr = sat_reduction(repeated);
  CHECK(min_vertex_cover(rr.k_graph).size == rr.threshold);
}

TEST_CASE("K_e of reduction outputs: neighbourhoods are matchings") {
  const auto r = sat_reduction(one_clause());
  const auto ke = edge_clique_graph(r.g).graph;
  for (int v = 0; v < ke.vertex_count(); ++v) {
    const Graph nb = ke.induced(ke.neighbors(v));
    for (int x = 0; x < nb.vertex_count(); ++x) CHECK(nb.degree(x) <= 1);
    CHECK(nb.vertex_count() == 2 * nb.edge_count());
  }
  for (const auto& e : ke.edges()) {
    const Bitset common = ke.row(e.u) & ke.row(e.v);
    CHECK(common.count() == 1);
  }
}

TEST_CASE("octahedron has nine maximum independent edge sets") {
  const ClauseGadget cg = clause_gadget();
  const auto ke = edge_clique_graph(cg.graph);
  const int n = ke.graph.vertex_count();
  std::vector<unsigned> sets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    bool independent = true;
    for (const auto& e : ke.graph.edges()) independent = independent && !((mask >> e.u & 1) && (mask >> e.v & 1));
    if (independent) sets.push_back(mask);
  }
  CHECK(sets.size() == 9);
  unsigned slots = 0;
  for (int s = 0; s < 3; ++s) slots |= 1u << ke.vertex_of(EdgeRef(cg.inner[s], cg.outer[(s + 1) % 3]));
  // Some maximum set avoids all three slots, so a minimum clause cover can
  // cover every slot.
  CHECK(std::any_of(sets.begin(), sets.end(), [&](unsigned m) { return (m & slots) == 0; }));
}

TEST_CASE("a threshold cover need not encode a satisfying assignment") {
  const auto r = sat_reduction(one_clause());
  // Forbid all three positive literal vertices: their neighbours must be in
  // the cover, and the rest is solved exactly.
  Bitset forced(r.k_graph.vertex_count()), excluded(r.k_graph.vertex_count());
  for (int i = 0; i < 3; ++i) {
    const auto& ids = r.trace.at("var:" + std::to_string(i) + ":pos");
    const auto it = std::lower_bound(r.k_edges.begin(), r.k_edges.end(), EdgeRef(ids[0], ids[1]));
    REQUIRE(it != r.k_edges.end());
    const int x = static_cast<int>(it - r.k_edges.begin());
    excluded.set(x);
    forced |= r.k_graph.row(x);
  }
  std::vector<int> rest;
  for (int v = 0; v < r.k_graph.vertex_count(); ++v)
    if (!excluded.test(v) && !forced.test(v)) rest.push_back(v);
  const auto sub = min_vertex_cover(r.k_graph.induced(rest));
  std::vector<int> cover;
  for (int v = forced.first(); v >= 0; v = forced.next(v)) cover.push_back(v);
  for (int x : sub.vertices) cover.push_back(rest[x]);
  std::sort(cover.begin(), cover.end());
  CHECK(static_cast<int>(cover.size()) == r.threshold);
  CHECK_THROWS_AS(decode_assignment(r, cover), InternalError);
}

#include "ecg/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ecg/cograph.hpp"
#include "ecg/errors.hpp"
#include "ecg/random.hpp"
#include "ecg/reductions.hpp"

namespace ecg {

Graph cocktail_party(int n) {
  if (n < 1) throw InvalidArgument("cp(n) needs n >= 1");
  return complete_multipartite(2, n);
}

namespace {

Graph relabel(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  Graph h(g.vertex_count());
  for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

}  // namespace

Graph random_trivially_perfect(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("n must be positive");
  Rng rng(seed);
  Graph g(n);
  std::vector<int> parent(n, -1);
  for (int v = 1; v < n; ++v) {
    parent[v] = static_cast<int>(rng.below(v));
    for (int a = parent[v]; a >= 0; a = parent[a]) g.add_edge(v, a);
  }
  return relabel(g, rng);
}

void check_trivially_perfect(const Graph& g) {
  for (const auto& e : g.edges()) {
    Bitset nu = g.row(e.u), nv = g.row(e.v);
    nu.set(e.u);
    nv.set(e.v);
    Bitset only_u = nu, only_v = nv;
    only_u.subtract(nv);
    only_v.subtract(nu);
    if (only_u.none() || only_v.none()) continue;
    const int a = only_u.first(), b = only_v.first();
    if (g.has_edge(a, b)) throw NotTriviallyPerfect({a, e.u, e.v, b}, true);
    throw NotTriviallyPerfect({a, e.u, e.v, b}, false);
  }
}

bool is_trivially_perfect(const Graph& g) {
  try {
    check_trivially_perfect(g);
    return true;
  } catch (const NotTriviallyPerfect&) {
    return false;
  }
}

int alpha_prime_trivially_perfect(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  if (!is_connected(g)) throw Disconnected("trivially perfect solver needs a connected graph");
  check_trivially_perfect(g);
  if (g.vertex_count() == 1) return 0;
  const Cotree t = build_cotree(g);
  return t.nodes[t.root].alpha;
}

Graph dh_counterexample() {
  Graph g = disjoint_union(wheel(4), wheel(4));
  g.add_edge(0, 5);
  return g;
}

std::optional<std::vector<int>> distance_hereditary_elimination(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Bitset> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = g.row(v);
  Bitset alive(n);
  alive.set_all();
  std::vector<int> order;
  for (int left = n; left > 1; --left) {
    int pick = -1;
    for (int v = alive.first(); v >= 0 && pick < 0; v = alive.next(v)) {
      const int deg = rows[v].count();
      if (deg <= 1) {
        pick = v;
        break;
      }
      for (int u = alive.first(); u >= 0; u = alive.next(u)) {
        if (u == v) continue;
        Bitset a = rows[u], b = rows[v];
        a.reset(v);
        b.reset(u);
        if (a == b) {
          pick = v;
          break;
        }
      }
    }
    if (pick < 0) return std::nullopt;
    order.push_back(pick);
    alive.reset(pick);
    for (int w = rows[pick].first(); w >= 0; w = rows[pick].next(w)) rows[w].reset(pick);
    rows[pick].clear();
  }
  if (alive.any()) order.push_back(alive.first());
  return order;
}

double gyarfas_bound(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  return std::log2(static_cast<double>(n) + 1.0);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

Graph odd_wheel_free_random(int n, double p, std::uint64_t seed) {
  Graph g = random_graph(n, p, seed);
  while (auto w = check_no_odd_wheel(g)) g.remove_edge(w->cycle[0], w->cycle[1]);
  return g;
}

Graph random_cograph(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("n must be positive");
  Rng rng(seed);
  // Build bottom-up over a random split tree, iteratively to allow large n.
  struct Task {
    int size;
    int first;  // first vertex id
  };
  Graph g(n);
  std::vector<Task> stack{{n, 0}};
  while (!stack.empty()) {
    const Task t = stack.back();
    stack.pop_back();
    if (t.size == 1) continue;
    const int left = rng.between(1, t.size - 1);
    if (rng.chance(0.5))
      for (int u = t.first; u < t.first + left; ++u)
        for (int v = t.first + left; v < t.first + t.size; ++v) g.add_edge(u, v);
    stack.push_back({left, t.first});
    stack.push_back({t.size - left, t.first + left});
  }
  return relabel(g, rng);
}

Graph random_chordal(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("n must be positive");
  Rng rng(seed);
  Graph g(n);
  for (int x = 1; x < n; ++x) {
    const int v = static_cast<int>(rng.below(x));
    std::vector<int> clique{v};
    std::vector<int> candidates = g.neighbors(v);
    rng.shuffle(candidates);
    for (int w : candidates)
      if (rng.chance(0.5) &&
          std::all_of(clique.begin(), clique.end(), [&](int c) { return g.has_edge(c, w); }))
        clique.push_back(w);
    for (int c : clique) g.add_edge(x, c);
  }
  return relabel(g, rng);
}

Graph random_partial_ktree(int n, int width, double keep, std::uint64_t seed) {
  if (n < 1 || width < 1) throw InvalidArgument("n and width must be positive");
  Rng rng(seed);
  Graph full(n);
  // k-tree: start with a clique, attach each new vertex to a k-clique.
  std::vector<std::vector<int>> cliques;
  const int base = std::min(n, width + 1);
  std::vector<int> first;
  for (int v = 0; v < base; ++v) {
    for (int u = 0; u < v; ++u) full.add_edge(u, v);
    first.push_back(v);
  }
  if (base == width + 1)
    for (int drop = 0; drop < base; ++drop) {
      std::vector<int> c;
      for (int v : first)
        if (v != drop) c.push_back(v);
      cliques.push_back(c);
    }
  for (int x = base; x < n; ++x) {
    const auto c = cliques[rng.below(cliques.size())];
    for (int v : c) full.add_edge(x, v);
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::vector<int> next = c;
      next[i] = x;
      cliques.push_back(next);
    }
  }
  Graph g(n);
  for (const auto& e : full.edges())
    if (rng.chance(keep)) g.add_edge(e.u, e.v);
  return relabel(g, rng);
}

}  // namespace ecg

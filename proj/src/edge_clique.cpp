#include "ecg/edge_clique.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ecg/errors.hpp"

namespace ecg {

int EdgeCliqueGraph::vertex_of(const EdgeRef& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return -1;
  return static_cast<int>(it - edges.begin());
}

std::vector<EdgeRef> EdgeCliqueGraph::edges_of(const std::vector<int>& ke_vertices) const {
  std::vector<EdgeRef> out;
  out.reserve(ke_vertices.size());
  for (int x : ke_vertices) out.push_back(edges.at(x));
  return out;
}

bool edges_in_common_clique(const Graph& g, const EdgeRef& e, const EdgeRef& f) {
  if (e == f) return false;
  const int a[2] = {e.u, e.v};
  const int b[2] = {f.u, f.v};
  for (int x : a)
    for (int y : b)
      if (x != y && !g.has_edge(x, y)) return false;
  return true;
}

EdgeCliqueGraph edge_clique_graph(const Graph& g) {
  EdgeCliqueGraph ke;
  ke.edges = g.edges();
  const int m = static_cast<int>(ke.edges.size());
  ke.graph = Graph(m);
  for (int i = 0; i < m; ++i) {
    const auto& e = ke.edges[i];
    ke.graph.set_label(i, std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  // Every edge sharing a clique with {a,b} has both endpoints in N[a] ∩ N[b].
  for (int i = 0; i < m; ++i) {
    const auto [a, b] = ke.edges[i];
    Bitset common = g.row(a) & g.row(b);
    std::vector<int> c = common.to_vector();
    auto link = [&](EdgeRef f) {
      int j = ke.vertex_of(f);
      if (j > i) ke.graph.add_edge(i, j);
    };
    for (std::size_t x = 0; x < c.size(); ++x) {
      link(EdgeRef(a, c[x]));
      link(EdgeRef(b, c[x]));
      for (std::size_t y = x + 1; y < c.size(); ++y)
        if (g.has_edge(c[x], c[y])) link(EdgeRef(c[x], c[y]));
    }
  }
  return ke;
}

bool is_independent_edge_set(const Graph& g, std::span<const EdgeRef> edges) {
  for (const auto& e : edges)
    if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e))
      throw InvalidArgument("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is not an edge of the graph");
  std::set<EdgeRef> seen(edges.begin(), edges.end());
  if (seen.size() != edges.size()) return false;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges_in_common_clique(g, edges[i], edges[j])) return false;
  return true;
}

namespace {

// Plain colouring-bound clique search; each call is small (n <= max_vertices).
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Bitset all(g_.vertex_count());
    all.set_all();
    std::vector<int> current;
    expand(all, current);
    return best_;
  }

 private:
  void expand(Bitset candidates, std::vector<int>& current) {
    if (candidates.none()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    // Greedy colouring gives an upper bound per vertex (its colour index).
    std::vector<int> order;
    std::vector<int> bound;
    Bitset uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset available = uncolored;
      for (int v = available.first(); v >= 0; v = available.next(v)) {
        uncolored.reset(v);
        available.subtract(g_.row(v));
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (static_cast<int>(current.size()) + bound[idx] <= static_cast<int>(best_.size())) return;
      const int v = order[idx];
      current.push_back(v);
      expand(candidates & g_.row(v), current);
      current.pop_back();
      candidates.reset(v);
    }
  }

  const Graph& g_;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> maximum_clique(const Graph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw BudgetExceeded("clique search limited to " + std::to_string(max_vertices) +
                         " vertices, graph has " + std::to_string(g.vertex_count()));
  auto clique = CliqueSearch(g).run();
  std::sort(clique.begin(), clique.end());
  return clique;
}

int omega(const Graph& g, int max_vertices) {
  return static_cast<int>(maximum_clique(g, max_vertices).size());
}

}  // namespace ecg

#include "ecg/graph.hpp"

#include <algorithm>
#include <deque>

#include "ecg/errors.hpp"

namespace ecg {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  rows_.assign(n, Bitset(n));
  adj_.resize(n);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0," +
                          std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !rows_[u].test(v)) return;
  rows_[u].reset(v);
  rows_[v].reset(u);
  adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
  adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
  --m_;
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(int v) const {
  static const std::string empty;
  check_vertex(v);
  return labels_.empty() ? empty : labels_[v];
}

void Graph::set_label(int v, std::string text) {
  check_vertex(v);
  if (labels_.empty()) labels_.resize(n_);
  labels_[v] = std::move(text);
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  std::vector<int> pos(n_, -1);
  for (int i = 0; i < h.n_; ++i) {
    check_vertex(vertices[i]);
    if (pos[vertices[i]] >= 0) throw InvalidArgument("repeated vertex in induced()");
    pos[vertices[i]] = i;
  }
  for (int i = 0; i < h.n_; ++i)
    for (int w : adj_[vertices[i]])
      if (pos[w] > i) h.add_edge(i, pos[w]);
  if (has_labels())
    for (int i = 0; i < h.n_; ++i) h.set_label(i, labels_[vertices[i]]);
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) h.add_edge(u, v);
  h.labels_ = labels_;
  return h;
}

bool Graph::is_clique(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!has_edge(vertices[i], vertices[j])) return false;
  return true;
}

bool Graph::is_independent(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) return false;
  return true;
}

Graph complete(int n) {
  if (n < 1) throw InvalidArgument("complete(n) needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path(int n) {
  if (n < 1) throw InvalidArgument("path(n) needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle(n) needs n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph wheel(int n) { return join(complete(1), cycle(n)); }

Graph complete_multipartite(int part_size, int parts) {
  if (part_size < 1 || parts < 1)
    throw InvalidArgument("complete_multipartite needs positive part size and count");
  const int n = part_size * parts;
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / part_size != v / part_size) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

namespace {

Graph combine(const Graph& g1, const Graph& g2, bool cross) {
  const int n1 = g1.vertex_count();
  Graph g(n1 + g2.vertex_count());
  for (const auto& e : g1.edges()) g.add_edge(e.u, e.v);
  for (const auto& e : g2.edges()) g.add_edge(n1 + e.u, n1 + e.v);
  if (cross)
    for (int u = 0; u < n1; ++u)
      for (int v = 0; v < g2.vertex_count(); ++v) g.add_edge(u, n1 + v);
  if (g1.has_labels() || g2.has_labels()) {
    for (int v = 0; v < n1; ++v) g.set_label(v, g1.label(v));
    for (int v = 0; v < g2.vertex_count(); ++v) g.set_label(n1 + v, g2.label(v));
  }
  return g;
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) { return combine(g1, g2, false); }
Graph join(const Graph& g1, const Graph& g2) { return combine(g1, g2, true); }

Graph add_simplicial_vertex(const Graph& g, const EdgeRef& e) {
  if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e))
    throw InvalidArgument("add_simplicial_vertex: {" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + "} is not an edge");
  Graph h = disjoint_union(g, Graph(1));
  const int s = g.vertex_count();
  h.add_edge(s, e.u);
  h.add_edge(s, e.v);
  return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head)
      for (int w : g.neighbors(members[head]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace ecg

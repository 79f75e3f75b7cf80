#include "ecg/planar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"
#include "ecg/matching.hpp"
#include "ecg/random.hpp"
#include "ecg/tree_decomposition.hpp"
#include "ecg/treewidth_dp.hpp"

namespace ecg {

namespace {

bool connected_without(const Graph& g, const Bitset& removed) {
  const int n = g.vertex_count();
  int start = -1, remaining = 0;
  for (int v = 0; v < n; ++v)
    if (!removed.test(v)) {
      ++remaining;
      if (start < 0) start = v;
    }
  if (remaining <= 1) return true;
  Bitset seen = removed;
  seen.set(start);
  std::vector<int> stack{start};
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen.test(w)) {
        seen.set(w);
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == remaining;
}

}  // namespace

std::optional<std::array<int, 3>> has_triangle_separator(const Graph& g) {
  if (!is_connected(g)) throw Disconnected("triangle separator test needs a connected graph");
  const int n = g.vertex_count();
  Bitset removed(n);
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      const Bitset common = g.row(a) & g.row(b);
      for (int c = common.next(b); c >= 0; c = common.next(c)) {
        removed.set(a);
        removed.set(b);
        removed.set(c);
        const bool ok = connected_without(g, removed);
        removed.reset(a);
        removed.reset(b);
        removed.reset(c);
        if (!ok) return std::array<int, 3>{a, b, c};
      }
    }
  return std::nullopt;
}

PlanarAlphaPrime alpha_prime_planar_matching(const PlanarEmbedding& pe) {
  const Graph& g = pe.graph();
  if (!is_connected(g)) throw Disconnected("dual matching needs a connected graph");
  PlanarAlphaPrime out;
  if (g.vertex_count() == 4 && g.edge_count() == 6) {
    out.size = 1;
    out.witness = {g.edges().front()};
    return out;
  }
  if (auto t = has_triangle_separator(g)) throw TriangleSeparatorPresent(*t);

  // Faces of the stellated graph: a triangular face stays whole, a longer
  // face splits into one triangle per dart.
  std::vector<int> node_of_dart(pe.dart_count(), -1);
  int nodes = 0;
  for (int f = 0; f < pe.face_count(); ++f) {
    const auto& walk = pe.face(f);
    if (walk.size() == 3) {
      for (int d : walk) node_of_dart[d] = nodes;
      ++nodes;
    } else {
      for (int d : walk) node_of_dart[d] = nodes++;
    }
  }
  // Only edges of g give weight-1 dual edges; the spokes weigh 0 and are left
  // out, which keeps exactly the matchings that count.
  Graph dual(nodes);
  std::map<EdgeRef, EdgeRef> primal_of;
  for (int d = 0; d < pe.dart_count(); ++d) {
    const int r = pe.reverse(d);
    if (d > r) continue;
    const int a = node_of_dart[d], b = node_of_dart[r];
    if (a == b) continue;
    const auto [u, v] = pe.dart(d);
    if (primal_of.try_emplace(EdgeRef(a, b), EdgeRef(u, v)).second) dual.add_edge(a, b);
  }
  for (const auto& e : max_cardinality_matching_general(dual)) out.witness.push_back(primal_of.at(e));
  std::sort(out.witness.begin(), out.witness.end());
  out.size = static_cast<int>(out.witness.size());
  if (!is_independent_edge_set(g, out.witness))
    throw InternalError("dual matching produced a dependent edge set");
  return out;
}

BakerResult baker_alpha_prime(const PlanarEmbedding& pe, int k) {
  if (k < 3) throw InvalidArgument("Baker's scheme needs k >= 3");
  const Graph& g = pe.graph();
  const auto level = layer_index(pe);
  const int depth = level.empty() ? 0 : *std::max_element(level.begin(), level.end());

  BakerResult best;
  best.shift = -1;
  for (int i = 0; i < k; ++i) {
    std::vector<EdgeRef> union_set;
    for (int j = -1; j * k + i + 1 <= depth; ++j) {
      const int lo = std::max(0, j * k + i + 1), hi = j * k + i + k - 1;
      std::vector<int> vertices;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (level[v] >= lo && level[v] <= hi) vertices.push_back(v);
      if (vertices.empty()) continue;
      const PlanarEmbedding slice = pe.restricted(vertices);
      if (slice.graph().edge_count() == 0) continue;
      const auto ntd = tree_decomposition_outerplanar_slice(slice, k);
      const auto part = treewidth_dp(slice.graph(), ntd);
      for (const auto& e : part.witness) union_set.emplace_back(vertices[e.u], vertices[e.v]);
    }
    std::sort(union_set.begin(), union_set.end());
    if (!is_independent_edge_set(g, union_set))
      throw InternalError("union of slice solutions for shift " + std::to_string(i) +
                          " is not independent");
    const int size = static_cast<int>(union_set.size());
    best.shift_sizes.push_back(size);
    if (best.shift < 0 || size > best.size) {
      best.size = size;
      best.witness = std::move(union_set);
      best.shift = i;
    }
  }
  return best;
}

PlanarEmbedding grid_embedding(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("grid needs positive dimensions");
  Graph g(rows * cols);
  std::vector<std::pair<double, double>> xy(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      xy[v] = {static_cast<double>(c), static_cast<double>(-r)};
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  return embedding_from_coordinates(g, xy);
}

namespace {

std::pair<double, double> on_circle(double radius, double degrees) {
  const double t = degrees * std::numbers::pi / 180.0;
  return {radius * std::cos(t), radius * std::sin(t)};
}

}  // namespace

PlanarEmbedding cycle_embedding(int n) {
  Graph g = cycle(n);
  std::vector<std::pair<double, double>> xy(n);
  for (int v = 0; v < n; ++v) xy[v] = on_circle(1.0, 360.0 * v / n);
  return embedding_from_coordinates(g, xy);
}

PlanarEmbedding wheel_embedding(int n) {
  Graph g = wheel(n);
  std::vector<std::pair<double, double>> xy(n + 1);
  xy[0] = {0.0, 0.0};
  for (int v = 1; v <= n; ++v) xy[v] = on_circle(1.0, 360.0 * (v - 1) / n);
  return embedding_from_coordinates(g, xy);
}

PlanarEmbedding octahedron_embedding() {
  Graph g = complete_multipartite(2, 3);
  std::vector<std::pair<double, double>> xy(6);
  for (int i = 0; i < 3; ++i) {
    xy[2 * i] = on_circle(3.0, 90.0 + 120.0 * i);
    xy[2 * i + 1] = on_circle(1.0, 270.0 + 120.0 * i);
  }
  return embedding_from_coordinates(g, xy);
}

PlanarEmbedding k4_embedding() {
  Graph g = complete(4);
  std::vector<std::pair<double, double>> xy{
      {0.0, 0.0}, on_circle(1.0, 90.0), on_circle(1.0, 210.0), on_circle(1.0, 330.0)};
  return embedding_from_coordinates(g, xy);
}

namespace {

void insert_after(std::vector<int>& rot, int anchor, int x) {
  rot.insert(std::find(rot.begin(), rot.end(), anchor) + 1, x);
}

// Rotation system of a triangulation under construction.
class Triangulation {
 public:
  explicit Triangulation(int n) : g_(n), rot_(n) {
    // Triangle 0,1,2: faces 0->1->2 and 0->2->1.
    g_.add_edge(0, 1);
    g_.add_edge(1, 2);
    g_.add_edge(0, 2);
    rot_[0] = {1, 2};
    rot_[1] = {2, 0};
    rot_[2] = {0, 1};
    faces_ = {{0, 1, 2}, {0, 2, 1}};
  }

  // x sits inside face a->b->c: after c around a, after a around b, after b
  // around c, and around x the order is a, c, b.
  void stack(std::size_t face, int x) {
    const auto [a, b, c] = faces_[face];
    insert_after(rot_[a], c, x);
    insert_after(rot_[b], a, x);
    insert_after(rot_[c], b, x);
    rot_[x] = {a, c, b};
    g_.add_edge(x, a);
    g_.add_edge(x, b);
    g_.add_edge(x, c);
    faces_[face] = {a, b, x};
    faces_.push_back({b, c, x});
    faces_.push_back({c, a, x});
  }
  std::size_t face_count() const { return faces_.size(); }

  // Replaces ab by cd, where a->b->c and b->a->d are the faces at ab. Only
  // done when both a and b keep degree >= min_degree. Face list is not kept.
  bool flip(int a, int b, int min_degree) {
    const int c = succ(b, a);
    const int d = succ(a, b);
    if (c == d || g_.has_edge(c, d) || g_.degree(a) <= min_degree || g_.degree(b) <= min_degree)
      return false;
    std::erase(rot_[a], b);
    std::erase(rot_[b], a);
    g_.remove_edge(a, b);
    insert_after(rot_[c], b, d);
    insert_after(rot_[d], a, c);
    g_.add_edge(c, d);
    return true;
  }

  const Graph& graph() const { return g_; }
  PlanarEmbedding embedding() const { return PlanarEmbedding(g_, rot_, Dart{0, rot_[0].front()}); }

 private:
  int succ(int v, int w) const {
    const auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), w);
    return ++it == r.end() ? r.front() : *it;
  }

  Graph g_;
  std::vector<std::vector<int>> rot_;
  std::vector<std::array<int, 3>> faces_;
};

Triangulation random_flipped(int n, Rng& rng, int flips) {
  Triangulation t(n);
  for (int x = 3; x < n; ++x) t.stack(rng.below(t.face_count()), x);
  for (int i = 0; i < flips; ++i) {
    const auto edges = t.graph().edges();
    const EdgeRef e = edges[rng.below(edges.size())];
    t.flip(e.u, e.v, 3);
  }
  return t;
}

}  // namespace

PlanarEmbedding random_triangulation(int n, std::uint64_t seed, int flips) {
  if (n < 3) throw InvalidArgument("triangulation needs n >= 3");
  Rng rng(seed);
  return random_flipped(n, rng, flips).embedding();
}

PlanarEmbedding random_4connected_triangulation(int n, std::uint64_t seed) {
  if (n < 6) throw InvalidArgument("4-connected triangulations need n >= 6");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Triangulation t = random_flipped(n, rng, 4 * n);
    // Flip edges of separating triangles away; flips never drop a degree
    // below 4 once it is there.
    for (int step = 0; step < 50 * n; ++step) {
      const auto sep = has_triangle_separator(t.graph());
      if (!sep) return t.embedding();
      const auto [a, b, c] = *sep;
      const std::array<EdgeRef, 3> sides{EdgeRef(a, b), EdgeRef(b, c), EdgeRef(a, c)};
      const EdgeRef e = sides[rng.below(3)];
      if (!t.flip(e.u, e.v, 3)) {
        const auto edges = t.graph().edges();
        const EdgeRef r = edges[rng.below(edges.size())];
        t.flip(r.u, r.v, 4);
      }
    }
  }
  throw InternalError("no 4-connected triangulation found");
}

}  // namespace ecg

#include "ecg/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "ecg/errors.hpp"

namespace ecg {

PlanarEmbedding::PlanarEmbedding(Graph g, std::vector<std::vector<int>> rotation,
                                 std::optional<Dart> outer)
    : graph_(std::move(g)), rotation_(std::move(rotation)), outer_(outer) {
  build();
}

void PlanarEmbedding::build() {
  const int n = graph_.vertex_count();
  if (static_cast<int>(rotation_.size()) != n)
    throw InvalidEmbedding("rotation system has " + std::to_string(rotation_.size()) +
                           " entries for " + std::to_string(n) + " vertices");
  offset_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != graph_.neighbors(v))
      throw InvalidEmbedding("rotation at vertex " + std::to_string(v) +
                             " is not a permutation of its neighbours");
    offset_[v + 1] = offset_[v] + static_cast<int>(rotation_[v].size());
  }
  const int darts = offset_[n];
  tail_.resize(darts);
  head_.resize(darts);
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      tail_[offset_[v] + i] = v;
      head_[offset_[v] + i] = rotation_[v][i];
    }
  reverse_.resize(darts);
  next_.resize(darts);
  for (int d = 0; d < darts; ++d) {
    reverse_[d] = dart_id(head_[d], tail_[d]);
    const int v = head_[d];
    const int deg = offset_[v + 1] - offset_[v];
    next_[d] = offset_[v] + (reverse_[d] - offset_[v] + 1) % deg;
  }
  face_of_.assign(darts, -1);
  faces_.clear();
  for (int d = 0; d < darts; ++d) {
    if (face_of_[d] >= 0) continue;
    std::vector<int> walk;
    for (int x = d; face_of_[x] < 0; x = next_[x]) {
      face_of_[x] = static_cast<int>(faces_.size());
      walk.push_back(x);
    }
    faces_.push_back(std::move(walk));
  }

  // Euler's formula per component.
  const auto comps = connected_components(graph_);
  std::vector<int> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<long> nv(comps.size()), ne(comps.size()), nf(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) nv[c] = static_cast<long>(comps[c].size());
  for (int d = 0; d < darts; ++d)
    if (tail_[d] < head_[d]) ++ne[comp_of[tail_[d]]];
  for (const auto& f : faces_) ++nf[comp_of[tail_[f.front()]]];
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (ne[c] > 0 && nv[c] - ne[c] + nf[c] != 2)
      throw InvalidEmbedding("rotation system is not planar (Euler characteristic " +
                             std::to_string(nv[c] - ne[c] + nf[c]) + " on component of vertex " +
                             std::to_string(comps[c].front()) + ")");

  int outer_comp = -1;
  if (outer_) {
    const int d = dart_id(outer_->from, outer_->to);
    if (d < 0)
      throw InvalidEmbedding("outer dart " + std::to_string(outer_->from) + "->" +
                             std::to_string(outer_->to) + " is not an edge");
    outer_comp = comp_of[outer_->from];
  }
  outer_faces_.assign(comps.size(), -1);
  for (int f = 0; f < face_count(); ++f) {
    const int c = comp_of[tail_[faces_[f].front()]];
    if (c == outer_comp) continue;
    if (outer_faces_[c] < 0 || faces_[f].size() > faces_[outer_faces_[c]].size())
      outer_faces_[c] = f;
  }
  if (outer_) outer_faces_[outer_comp] = face_of_[dart_id(outer_->from, outer_->to)];
  std::erase(outer_faces_, -1);
  std::sort(outer_faces_.begin(), outer_faces_.end());
}

int PlanarEmbedding::dart_id(int u, int v) const {
  if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return -1;
  if (!graph_.has_edge(u, v)) return -1;
  const auto& rot = rotation_[u];
  auto it = std::find(rot.begin(), rot.end(), v);
  return offset_[u] + static_cast<int>(it - rot.begin());
}

std::vector<int> PlanarEmbedding::face_vertices(int f) const {
  std::vector<int> out;
  out.reserve(faces_[f].size());
  for (int d : faces_[f]) out.push_back(tail_[d]);
  return out;
}

PlanarEmbedding PlanarEmbedding::restricted(const std::vector<int>& vertices) const {
  std::vector<int> pos(vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  Graph h = graph_.induced(vertices);
  std::vector<std::vector<int>> rot(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : rotation_[vertices[i]])
      if (pos[w] >= 0) rot[i].push_back(pos[w]);
  std::optional<Dart> outer;
  if (outer_ && pos[outer_->from] >= 0 && pos[outer_->to] >= 0)
    outer = Dart{pos[outer_->from], pos[outer_->to]};
  return PlanarEmbedding(std::move(h), std::move(rot), outer);
}

PlanarEmbedding PlanarEmbedding::with_outer(Dart outer) const {
  return PlanarEmbedding(graph_, rotation_, outer);
}

std::vector<int> layer_index(const PlanarEmbedding& pe) {
  const int n = pe.vertex_count();
  std::vector<int> level(n, -1);
  std::vector<char> face_seen(pe.face_count(), 0);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v)
    if (pe.graph().degree(v) == 0) level[v] = 0;
  for (int f : pe.outer_faces()) {
    face_seen[f] = 1;
    for (int v : pe.face_vertices(f))
      if (level[v] < 0) {
        level[v] = 0;
        queue.push_back(v);
      }
  }
  // Removing layer t merges every face touching it into the outer region, so
  // layer t+1 consists of the unlabelled vertices on those faces.
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : pe.rotation(v)) {
      const int f = pe.face_of_dart(pe.dart_id(v, w));
      if (face_seen[f]) continue;
      face_seen[f] = 1;
      for (int x : pe.face_vertices(f))
        if (level[x] < 0) {
          level[x] = level[v] + 1;
          queue.push_back(x);
        }
    }
  }
  return level;
}

std::vector<std::vector<int>> peel_layers(const PlanarEmbedding& pe) {
  const auto level = layer_index(pe);
  std::vector<std::vector<int>> layers;
  for (int v = 0; v < pe.vertex_count(); ++v) {
    if (level[v] >= static_cast<int>(layers.size())) layers.resize(level[v] + 1);
    layers[level[v]].push_back(v);
  }
  return layers;
}

PlanarEmbedding embedding_from_coordinates(const Graph& g,
                                           const std::vector<std::pair<double, double>>& xy) {
  const int n = g.vertex_count();
  if (static_cast<int>(xy.size()) != n) throw InvalidArgument("one coordinate per vertex required");
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    rot[v] = g.neighbors(v);
    auto angle = [&](int w) {
      return std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first);
    };
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
  }
  PlanarEmbedding pe(g, rot);
  if (pe.dart_count() == 0) return pe;
  int best = -1;
  double best_area = 0;
  for (int f = 0; f < pe.face_count(); ++f) {
    double area = 0;
    for (int d : pe.face(f)) {
      const auto [a, b] = pe.dart(d);
      area += xy[a].first * xy[b].second - xy[b].first * xy[a].second;
    }
    if (best < 0 || area < best_area) {
      best = f;
      best_area = area;
    }
  }
  return pe.with_outer(pe.dart(pe.face(best).front()));
}

}  // namespace ecg

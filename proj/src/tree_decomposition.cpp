#include "ecg/tree_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "ecg/errors.hpp"

namespace ecg {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

const char* to_string(NiceKind kind) {
  switch (kind) {
    case NiceKind::leaf: return "leaf";
    case NiceKind::introduce: return "introduce";
    case NiceKind::forget: return "forget";
    case NiceKind::join: return "join";
  }
  return "?";
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

std::vector<int> NiceTreeDecomposition::postorder() const {
  std::vector<int> order;
  if (root < 0) return order;
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [x, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(x);
      continue;
    }
    stack.emplace_back(x, true);
    for (auto it = nodes[x].children.rbegin(); it != nodes[x].children.rend(); ++it)
      stack.emplace_back(*it, false);
  }
  return order;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidDecomposition(what); }

}  // namespace

void validate(const Graph& g, const TreeDecomposition& td) {
  const int n = g.vertex_count();
  const int b = static_cast<int>(td.bags.size());
  if (n == 0 && b == 0) return;
  if (b == 0) bad("no bags for a non-empty graph");
  if (static_cast<int>(td.tree_edges.size()) != b - 1)
    bad("tree over " + std::to_string(b) + " bags needs " + std::to_string(b - 1) + " edges");

  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.tree_edges) {
    if (x < 0 || y < 0 || x >= b || y >= b || x == y)
      bad("tree edge " + std::to_string(x) + "-" + std::to_string(y) + " is invalid");
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<int> parent(b, -2);
  std::vector<int> order{0};
  parent[0] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : adj[order[i]])
      if (parent[y] == -2) {
        parent[y] = order[i];
        order.push_back(y);
      }
  if (static_cast<int>(order.size()) != b) bad("bag tree is disconnected");

  std::vector<Bitset> member(b, Bitset(n));
  for (int i = 0; i < b; ++i) {
    const auto& bag = td.bags[i];
    for (std::size_t j = 0; j < bag.size(); ++j) {
      if (bag[j] < 0 || bag[j] >= n) bad("bag " + std::to_string(i) + " has vertex out of range");
      if (j > 0 && bag[j - 1] >= bag[j]) bad("bag " + std::to_string(i) + " is not sorted/unique");
      member[i].set(bag[j]);
    }
  }

  // Occurrences of v are connected iff exactly one bag holding v has a
  // parent not holding v.
  std::vector<int> tops(n, 0);
  for (int i = 0; i < b; ++i)
    for (int v : td.bags[i])
      if (parent[i] < 0 || !member[parent[i]].test(v)) ++tops[v];
  for (int v = 0; v < n; ++v) {
    if (tops[v] == 0) bad("vertex " + std::to_string(v) + " is in no bag");
    if (tops[v] > 1) bad("bags holding vertex " + std::to_string(v) + " are not connected");
  }
  for (const auto& e : g.edges()) {
    bool covered = false;
    for (int i = 0; i < b && !covered; ++i) covered = member[i].test(e.u) && member[i].test(e.v);
    if (!covered)
      bad("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is in no bag");
  }
}

void validate(const Graph& g, const NiceTreeDecomposition& ntd) {
  const int count = static_cast<int>(ntd.nodes.size());
  if (count == 0) {
    if (g.vertex_count() > 0) bad("no nodes for a non-empty graph");
    return;
  }
  if (ntd.root < 0 || ntd.root >= count) bad("root out of range");
  TreeDecomposition td;
  for (const auto& node : ntd.nodes) td.bags.push_back(node.bag);
  std::vector<int> parents(count, 0);
  for (int i = 0; i < count; ++i)
    for (int c : ntd.nodes[i].children) {
      if (c < 0 || c >= count) bad("child id out of range");
      td.tree_edges.emplace_back(i, c);
      ++parents[c];
    }
  for (int i = 0; i < count; ++i)
    if (parents[i] != (i == ntd.root ? 0 : 1))
      bad("node " + std::to_string(i) + " has " + std::to_string(parents[i]) + " parents");
  validate(g, td);

  for (int i = 0; i < count; ++i) {
    const auto& node = ntd.nodes[i];
    const std::string at = " at node " + std::to_string(i);
    auto with = [](std::vector<int> bag, int v) {
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      return bag;
    };
    switch (node.kind) {
      case NiceKind::leaf:
        if (!node.children.empty() || node.bag.size() != 1) bad("leaf needs one vertex, no children" + at);
        break;
      case NiceKind::introduce: {
        if (node.children.size() != 1) bad("introduce needs one child" + at);
        const auto& child = ntd.nodes[node.children[0]].bag;
        if (std::binary_search(child.begin(), child.end(), node.vertex) ||
            with(child, node.vertex) != node.bag)
          bad("introduce bag mismatch" + at);
        break;
      }
      case NiceKind::forget: {
        if (node.children.size() != 1) bad("forget needs one child" + at);
        const auto& child = ntd.nodes[node.children[0]].bag;
        if (std::binary_search(node.bag.begin(), node.bag.end(), node.vertex) ||
            with(node.bag, node.vertex) != child)
          bad("forget bag mismatch" + at);
        break;
      }
      case NiceKind::join:
        if (node.children.size() != 2) bad("join needs two children" + at);
        for (int c : node.children)
          if (ntd.nodes[c].bag != node.bag) bad("join child bag differs" + at);
        break;
    }
  }
}

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("elimination order must list every vertex");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
      throw InvalidArgument("elimination order is not a permutation");
    pos[order[i]] = i;
  }
  TreeDecomposition td;
  if (n == 0) return td;
  std::vector<Bitset> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.row(v);
  Bitset alive(n);
  alive.set_all();
  td.bags.resize(n);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    alive.reset(v);
    const Bitset later = adj[v] & alive;
    td.bags[i] = later.to_vector();
    td.bags[i].push_back(v);
    std::sort(td.bags[i].begin(), td.bags[i].end());
    int first = -1;
    for (int x = later.first(); x >= 0; x = later.next(x)) {
      if (first < 0 || pos[x] < pos[first]) first = x;
      adj[x] |= later;
      adj[x].reset(x);
    }
    if (first >= 0) parent[i] = pos[first];
  }
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      td.tree_edges.emplace_back(parent[i], i);
    } else {
      if (previous_root >= 0) td.tree_edges.emplace_back(previous_root, i);
      previous_root = i;
    }
  }
  return td;
}

std::vector<int> min_fill_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Bitset> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.row(v);
  Bitset alive(n);
  alive.set_all();
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = 0;
    int best_degree = 0;
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
      const Bitset nb = adj[v] & alive;
      long missing = 0;
      for (int x = nb.first(); x >= 0; x = nb.next(x)) missing += nb.count() - 1 - (adj[x] & nb).count();
      missing /= 2;
      const int degree = nb.count();
      if (best < 0 || missing < best_fill || (missing == best_fill && degree < best_degree)) {
        best = v;
        best_fill = missing;
        best_degree = degree;
      }
    }
    alive.reset(best);
    const Bitset nb = adj[best] & alive;
    for (int x = nb.first(); x >= 0; x = nb.next(x)) {
      adj[x] |= nb;
      adj[x].reset(x);
    }
    order.push_back(best);
  }
  return order;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
  return decomposition_from_elimination(g, min_fill_order(g));
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  validate(g, td);
  NiceTreeDecomposition ntd;
  const int b = static_cast<int>(td.bags.size());
  if (b == 0) return ntd;

  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.tree_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<int> parent(b, -2), order{0};
  parent[0] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : adj[order[i]])
      if (parent[y] == -2) {
        parent[y] = order[i];
        order.push_back(y);
      }

  auto add = [&](NiceKind kind, int vertex, std::vector<int> bag, std::vector<int> children) {
    ntd.nodes.push_back({kind, vertex, std::move(bag), std::move(children)});
    return static_cast<int>(ntd.nodes.size()) - 1;
  };
  // Walk from node x (bag `from`) to a node holding `to`: forget first, then
  // introduce, so bags never exceed max(|from|, |to|).
  auto morph = [&](int x, const std::vector<int>& to) {
    std::vector<int> bag = ntd.nodes[x].bag;
    for (int v : std::vector<int>(bag)) {
      if (std::binary_search(to.begin(), to.end(), v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      x = add(NiceKind::forget, v, bag, {x});
    }
    for (int v : to) {
      if (std::binary_search(bag.begin(), bag.end(), v)) continue;
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      x = add(NiceKind::introduce, v, bag, {x});
    }
    return x;
  };

  std::vector<int> result(b, -1);  // nice node carrying bag t, or -1 if nothing below
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    const auto& bag = td.bags[t];
    int acc = -1;
    for (int c : adj[t]) {
      if (c == parent[t] || result[c] < 0) continue;
      const int part = morph(result[c], bag);
      acc = acc < 0 ? part : add(NiceKind::join, -1, bag, {acc, part});
    }
    if (acc < 0 && !bag.empty()) {
      acc = add(NiceKind::leaf, -1, {bag.front()}, {});
      acc = morph(acc, bag);
    }
    result[t] = acc;
  }
  ntd.root = result[0];
  if (ntd.root < 0) ntd.nodes.clear();
  return ntd;
}

namespace {

// Radial BFS from `root_face` inside one component; returns levels of the
// component's vertices (others untouched) and, for every vertex at level
// t >= 1, the face through which it was reached.
struct Layering {
  int depth = 0;
  std::vector<int> level;
  std::vector<int> via_face;
};

Layering radial_layering(const PlanarEmbedding& pe, int root_face) {
  Layering out;
  out.level.assign(pe.vertex_count(), -1);
  out.via_face.assign(pe.vertex_count(), -1);
  std::vector<char> face_seen(pe.face_count(), 0);
  std::deque<int> queue;
  face_seen[root_face] = 1;
  for (int v : pe.face_vertices(root_face))
    if (out.level[v] < 0) {
      out.level[v] = 0;
      out.via_face[v] = root_face;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : pe.rotation(v)) {
      const int f = pe.face_of_dart(pe.dart_id(v, w));
      if (face_seen[f]) continue;
      face_seen[f] = 1;
      for (int x : pe.face_vertices(f))
        if (out.level[x] < 0) {
          out.level[x] = out.level[v] + 1;
          out.via_face[x] = f;
          out.depth = std::max(out.depth, out.level[x]);
          queue.push_back(x);
        }
    }
  }
  return out;
}

}  // namespace

TreeDecomposition layered_planar_decomposition(const PlanarEmbedding& pe) {
  const Graph& g = pe.graph();
  const int n = g.vertex_count();
  TreeDecomposition td;
  std::vector<int> component_roots;  // one bag per component, chained at the end

  const auto comps = connected_components(g);
  std::vector<int> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<std::vector<int>> comp_faces(comps.size());
  for (int f = 0; f < pe.face_count(); ++f)
    comp_faces[comp_of[pe.dart(pe.face(f).front()).from]].push_back(f);

  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comp_faces[c].empty()) {
      component_roots.push_back(static_cast<int>(td.bags.size()));
      td.bags.push_back({comps[c].front()});
      continue;
    }
    Layering best;
    int root_face = -1;
    for (int f : comp_faces[c]) {
      Layering l = radial_layering(pe, f);
      if (root_face < 0 || l.depth < best.depth) {
        best = std::move(l);
        root_face = f;
      }
    }
    const auto& level = best.level;

    // Spanning tree of the stellated map, as parent pointers on nodes:
    // vertex v, or n + f for the new vertex of face f. The root is n + root_face.
    const int total = n + pe.face_count();
    std::vector<int> up(total, -1);
    for (int v : comps[c]) up[v] = n + best.via_face[v];
    for (int f : comp_faces[c]) {
      if (f == root_face) continue;
      int low = -1;
      for (int v : pe.face_vertices(f))
        if (low < 0 || level[v] < level[low]) low = v;
      up[n + f] = low;
    }
    auto path_vertices = [&](int x, std::vector<int>& out) {
      for (; x >= 0; x = up[x])
        if (x < n) out.push_back(x);
    };

    // Triangles of the stellated map are the darts of the component; the
    // triangle of dart d (face f, u -> w) has corners u, w and the face vertex.
    std::vector<int> bag_of_dart(pe.dart_count(), -1);
    for (int f : comp_faces[c])
      for (int d : pe.face(f)) {
        std::vector<int> bag;
        const auto [u, w] = pe.dart(d);
        path_vertices(u, bag);
        path_vertices(w, bag);
        path_vertices(n + f, bag);
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        bag_of_dart[d] = static_cast<int>(td.bags.size());
        td.bags.push_back(std::move(bag));
      }
    component_roots.push_back(bag_of_dart[pe.face(root_face).front()]);

    // Dual of the edges outside the spanning tree. Original edges are never in
    // the tree; a spoke at corner i of face f (between darts i-1 and i) is in
    // the tree when it is the corner chosen for a parent pointer.
    for (int d = 0; d < pe.dart_count(); ++d) {
      if (bag_of_dart[d] < 0) continue;
      const int r = pe.reverse(d);
      if (d < r) td.tree_edges.emplace_back(bag_of_dart[d], bag_of_dart[r]);
    }
    for (int f : comp_faces[c]) {
      const auto& walk = pe.face(f);
      const int len = static_cast<int>(walk.size());
      // One tree spoke per (face, vertex) pointer: mark the first corner used.
      std::vector<char> tree_corner(len, 0);
      auto mark_first_corner = [&](int v) {
        for (int i = 0; i < len; ++i)
          if (pe.dart(walk[i]).from == v) {
            tree_corner[i] = 1;
            return;
          }
        throw InternalError("parent pointer through a face missing the vertex");
      };
      for (int i = 0; i < len; ++i) {
        const int v = pe.dart(walk[i]).from;
        if (up[v] == n + f && !std::any_of(walk.begin(), walk.begin() + i, [&](int d) {
              return pe.dart(d).from == v;
            }))
          tree_corner[i] = 1;
      }
      if (f != root_face) mark_first_corner(up[n + f]);
      for (int i = 0; i < len; ++i)
        if (!tree_corner[i])
          td.tree_edges.emplace_back(bag_of_dart[walk[(i + len - 1) % len]], bag_of_dart[walk[i]]);
    }
  }

  for (std::size_t i = 1; i < component_roots.size(); ++i)
    td.tree_edges.emplace_back(component_roots[i - 1], component_roots[i]);
  return td;
}

NiceTreeDecomposition tree_decomposition_outerplanar_slice(const PlanarEmbedding& slice, int k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  const Graph& g = slice.graph();
  TreeDecomposition layered = layered_planar_decomposition(slice);
  TreeDecomposition heuristic = heuristic_decomposition(g);
  try {
    validate(g, layered);
    validate(g, heuristic);
  } catch (const InvalidDecomposition& e) {
    throw InternalError(std::string("slice decomposition broken: ") + e.what());
  }
  const TreeDecomposition& chosen = heuristic.width() <= layered.width() ? heuristic : layered;
  if (chosen.width() > 3 * k - 1)
    throw InternalError("slice decomposition width " + std::to_string(chosen.width()) +
                        " exceeds 3k-1 = " + std::to_string(3 * k - 1));
  NiceTreeDecomposition ntd = make_nice(g, chosen);
  try {
    validate(g, ntd);
  } catch (const InvalidDecomposition& e) {
    throw InternalError(std::string("nice conversion broken: ") + e.what());
  }
  return ntd;
}

}  // namespace ecg

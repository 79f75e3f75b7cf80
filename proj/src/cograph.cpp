#include "ecg/cograph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <deque>

#include "ecg/errors.hpp"

namespace ecg {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Vertices grouped by a 64-bit key. Each vertex sits in at most one bucket,
// kept as an intrusive list; the key -> head table uses linear probing, so
// updates never allocate.
class HashBuckets {
 public:
  explicit HashBuckets(int n) : next_(n, -1), prev_(n, -1), key_(n, 0) {
    std::size_t cap = 16;
    while (cap < 4 * static_cast<std::size_t>(n)) cap *= 2;
    slots_.assign(cap, Slot{});
  }

  void insert(std::uint64_t key, int v) {
    key_[v] = key;
    Slot& s = slot_for_insert(key);
    prev_[v] = -1;
    next_[v] = s.head;
    if (s.head >= 0) prev_[s.head] = v;
    s.head = v;
  }

  void erase(int v) {
    if (prev_[v] >= 0) {
      next_[prev_[v]] = next_[v];
    } else {
      Slot& s = slots_[find_slot(key_[v])];
      s.head = next_[v];
      if (s.head < 0) {
        s.head = kTombstone;
        if (++tombstones_ > slots_.size() / 4) rehash();
      }
    }
    if (next_[v] >= 0) prev_[next_[v]] = prev_[v];
    next_[v] = prev_[v] = -1;
  }

  /// First vertex with this key, or -1; continue with next().
  int first(std::uint64_t key) const {
    const std::size_t i = find_slot(key);
    return i == kMissing ? -1 : slots_[i].head;
  }
  int next(int v) const { return next_[v]; }

 private:
  static constexpr int kEmpty = -1;
  static constexpr int kTombstone = -2;
  static constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
  struct Slot {
    std::uint64_t key = 0;
    int head = kEmpty;
  };

  std::size_t find_slot(std::uint64_t key) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = key & mask;; i = (i + 1) & mask) {
      if (slots_[i].head == kEmpty) return kMissing;
      if (slots_[i].head >= 0 && slots_[i].key == key) return i;
    }
  }

  Slot& slot_for_insert(std::uint64_t key) {
    if (const std::size_t i = find_slot(key); i != kMissing) return slots_[i];
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = key & mask;
    while (slots_[i].head >= 0) i = (i + 1) & mask;
    if (slots_[i].head == kTombstone) --tombstones_;
    slots_[i] = Slot{key, kEmpty};
    return slots_[i];
  }

  void rehash() {
    std::vector<Slot> old(slots_.size());
    old.swap(slots_);
    tombstones_ = 0;
    const std::size_t mask = slots_.size() - 1;
    for (const Slot& s : old) {
      if (s.head < 0) continue;
      std::size_t i = s.key & mask;
      while (slots_[i].head != kEmpty) i = (i + 1) & mask;
      slots_[i] = s;
    }
  }

  std::vector<int> next_, prev_;
  std::vector<std::uint64_t> key_;
  std::vector<Slot> slots_;
  std::size_t tombstones_ = 0;
};

std::array<int, 4> find_p4(const Graph& g, const std::vector<int>& alive) {
  Bitset in(g.vertex_count());
  for (int v : alive) in.set(v);
  for (int b : alive)
    for (int c : g.neighbors(b)) {
      if (!in.test(c) || c < b) continue;
      for (auto [x, y] : {std::pair{b, c}, std::pair{c, b}}) {
        Bitset a_side = g.row(x) & in;
        a_side.subtract(g.row(y));
        a_side.reset(y);
        Bitset d_side = g.row(y) & in;
        d_side.subtract(g.row(x));
        d_side.reset(x);
        for (int a = a_side.first(); a >= 0; a = a_side.next(a)) {
          Bitset free = d_side;
          free.subtract(g.row(a));
          if (int d = free.first(); d >= 0) return {a, x, y, d};
        }
      }
    }
  throw InternalError("twin-free graph without an induced P4");
}

}  // namespace

Cotree build_cotree(const Graph& g) {
  const int n = g.vertex_count();
  Cotree t;
  t.leaf_of.resize(n);
  if (n == 0) return t;
  for (int v = 0; v < n; ++v) {
    CotreeNode leaf;
    leaf.vertex = v;
    leaf.min_vertex = v;
    t.leaf_of[v] = static_cast<int>(t.nodes.size());
    t.nodes.push_back(leaf);
  }

  std::vector<Bitset> rows(n);
  std::vector<std::uint64_t> z(n), open(n, 0);
  std::uint64_t seed = 0x5eedULL;
  for (int v = 0; v < n; ++v) z[v] = splitmix64(seed);
  for (int v = 0; v < n; ++v) {
    rows[v] = g.row(v);
    for (int w : g.neighbors(v)) open[v] ^= z[w];
  }
  auto closed = [&](int v) { return open[v] ^ z[v]; };
  HashBuckets open_buckets(n), closed_buckets(n);
  for (int v = 0; v < n; ++v) {
    open_buckets.insert(open[v], v);
    closed_buckets.insert(closed(v), v);
  }

  std::vector<int> module(n);  // representative -> its cotree node
  for (int v = 0; v < n; ++v) module[v] = t.leaf_of[v];
  std::vector<char> alive(n, 1);
  int alive_count = n;
  // FIFO worklist without duplicates; a vertex is queued again whenever its
  // neighbourhood shrinks.
  std::deque<int> work;
  std::vector<char> queued(n, 1);
  for (int v = 0; v < n; ++v) work.push_back(v);
  auto enqueue = [&](int v) {
    if (!queued[v]) {
      queued[v] = 1;
      work.push_back(v);
    }
  };

  auto same_closed = [&](int u, int v) {
    Bitset a = rows[u], b = rows[v];
    a.set(u);
    b.set(v);
    return a == b;
  };

  while (!work.empty() && alive_count > 1) {
    const int v = work.front();
    work.pop_front();
    queued[v] = 0;
    if (!alive[v]) continue;
    int twin = -1;
    bool adjacent = false;
    for (int u = open_buckets.first(open[v]); u >= 0; u = open_buckets.next(u))
      if (u != v && (twin < 0 || u < twin) && rows[u] == rows[v]) twin = u;
    if (twin < 0)
      for (int u = closed_buckets.first(closed(v)); u >= 0; u = closed_buckets.next(u))
        if (u != v && (twin < 0 || u < twin) && same_closed(u, v)) {
          twin = u;
          adjacent = true;
        }
    if (twin < 0) continue;

    const int keep = std::min(v, twin);
    const int drop = std::max(v, twin);
    CotreeNode node;
    node.kind = adjacent ? CotreeKind::join : CotreeKind::disjoint_union;
    int a = module[keep], b = module[drop];
    if (t.nodes[a].min_vertex > t.nodes[b].min_vertex) std::swap(a, b);
    node.left = a;
    node.right = b;
    node.min_vertex = t.nodes[a].min_vertex;
    node.size = t.nodes[a].size + t.nodes[b].size;
    node.alpha = adjacent ? std::max(t.nodes[a].alpha, t.nodes[b].alpha)
                          : t.nodes[a].alpha + t.nodes[b].alpha;
    const int id = static_cast<int>(t.nodes.size());
    t.nodes[a].parent = id;
    t.nodes[b].parent = id;
    t.nodes.push_back(node);
    module[keep] = id;

    alive[drop] = 0;
    --alive_count;
    open_buckets.erase(drop);
    closed_buckets.erase(drop);
    for (int w = rows[drop].first(); w >= 0; w = rows[drop].next(w)) {
      open_buckets.erase(w);
      closed_buckets.erase(w);
      rows[w].reset(drop);
      open[w] ^= z[drop];
      open_buckets.insert(open[w], w);
      closed_buckets.insert(closed(w), w);
      enqueue(w);
    }
    enqueue(keep);
  }

  if (alive_count > 1) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (alive[v]) rest.push_back(v);
    throw NotCograph(find_p4(g, rest));
  }
  for (int v = 0; v < n; ++v)
    if (alive[v]) t.root = module[v];
  return t;
}

std::vector<int> Cotree::vertices_below(int p) const {
  std::vector<int> out;
  std::vector<int> stack{p};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    const auto& node = nodes[x];
    if (node.kind == CotreeKind::leaf) {
      out.push_back(node.vertex);
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Cotree::evaluate() const {
  Graph g(vertex_count());
  for (const auto& node : nodes) {
    if (node.kind != CotreeKind::join) continue;
    const auto a = vertices_below(node.left);
    const auto b = vertices_below(node.right);
    for (int u : a)
      for (int v : b) g.add_edge(u, v);
  }
  return g;
}

std::vector<int> d_prime_all(const Cotree& t) {
  std::vector<int> d(t.vertex_count(), 0);
  if (t.root < 0) return d;
  std::vector<std::pair<int, int>> stack{{t.root, 0}};
  while (!stack.empty()) {
    const auto [p, run] = stack.back();
    stack.pop_back();
    const auto& node = t.nodes[p];
    switch (node.kind) {
      case CotreeKind::leaf:
        d[node.vertex] = run;
        break;
      case CotreeKind::disjoint_union:
        stack.emplace_back(node.left, run);
        stack.emplace_back(node.right, run);
        break;
      case CotreeKind::join:
        stack.emplace_back(node.left, std::max(run, t.nodes[node.right].alpha));
        stack.emplace_back(node.right, std::max(run, t.nodes[node.left].alpha));
        break;
    }
  }
  return d;
}

namespace {

// Weighted independence number of G_p where each leaf weighs the largest
// opposite-side alpha over the joins between it and p, floored at `run`.
long local_weighted_alpha(const Cotree& t, int p, int run) {
  const auto& node = t.nodes[p];
  switch (node.kind) {
    case CotreeKind::leaf:
      return run;
    case CotreeKind::disjoint_union:
      return local_weighted_alpha(t, node.left, run) + local_weighted_alpha(t, node.right, run);
    case CotreeKind::join:
      return std::max(local_weighted_alpha(t, node.left, std::max(run, t.nodes[node.right].alpha)),
                      local_weighted_alpha(t, node.right, std::max(run, t.nodes[node.left].alpha)));
  }
  return 0;
}

// A maximum independent set of G_p.
void collect_mis(const Cotree& t, int p, std::vector<int>& out) {
  const auto& node = t.nodes[p];
  switch (node.kind) {
    case CotreeKind::leaf:
      out.push_back(node.vertex);
      break;
    case CotreeKind::disjoint_union:
      collect_mis(t, node.left, out);
      collect_mis(t, node.right, out);
      break;
    case CotreeKind::join:
      collect_mis(t, t.nodes[node.left].alpha >= t.nodes[node.right].alpha ? node.left : node.right,
                  out);
      break;
  }
}

}  // namespace

CographAlphaPrime alpha_prime_cograph(Cotree& t) {
  CographAlphaPrime result;
  result.d_prime = d_prime_all(t);
  if (t.root < 0) return result;
  const auto& d = result.d_prime;

  // Children precede parents in node order.
  for (auto& node : t.nodes) {
    switch (node.kind) {
      case CotreeKind::leaf:
        node.weighted_alpha = d[node.vertex];
        node.alpha_prime = 0;
        break;
      case CotreeKind::disjoint_union:
        node.weighted_alpha = t.nodes[node.left].weighted_alpha + t.nodes[node.right].weighted_alpha;
        node.alpha_prime = t.nodes[node.left].alpha_prime + t.nodes[node.right].alpha_prime;
        break;
      case CotreeKind::join: {
        node.weighted_alpha =
            std::max(t.nodes[node.left].weighted_alpha, t.nodes[node.right].weighted_alpha);
        // d' inside G_p: the join itself contributes the opposite side's alpha.
        node.alpha_prime =
            std::max(local_weighted_alpha(t, node.left, t.nodes[node.right].alpha),
                     local_weighted_alpha(t, node.right, t.nodes[node.left].alpha));
        break;
      }
    }
  }
  const auto& root = t.nodes[t.root];
  result.value = root.alpha_prime;
  if (root.alpha_prime != root.weighted_alpha)
    throw InternalError("cotree recursion disagrees with the weighted independent set");

  // Maximiser of the d'-weighted sum: both sides of a union, the better side
  // of a join.
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    const int p = stack.back();
    stack.pop_back();
    const auto& node = t.nodes[p];
    if (node.kind == CotreeKind::leaf) {
      result.weight_set.push_back(node.vertex);
    } else if (node.kind == CotreeKind::disjoint_union) {
      stack.push_back(node.right);
      stack.push_back(node.left);
    } else {
      stack.push_back(t.nodes[node.left].weighted_alpha >= t.nodes[node.right].weighted_alpha
                          ? node.left
                          : node.right);
    }
  }
  std::sort(result.weight_set.begin(), result.weight_set.end());

  // N(x) is the join of the opposite sides above x, so a maximum independent
  // set of N(x) is one of the best opposite side.
  for (int x : result.weight_set) {
    if (d[x] == 0) continue;
    int best_side = -1;
    for (int c = t.leaf_of[x], p = t.nodes[c].parent; p >= 0; c = p, p = t.nodes[p].parent) {
      const auto& node = t.nodes[p];
      if (node.kind != CotreeKind::join) continue;
      const int side = node.left == c ? node.right : node.left;
      if (best_side < 0 || t.nodes[side].alpha > t.nodes[best_side].alpha) best_side = side;
    }
    std::vector<int> omega_x;
    collect_mis(t, best_side, omega_x);
    for (int z : omega_x) result.witness.emplace_back(x, z);
  }
  std::sort(result.witness.begin(), result.witness.end());
  if (static_cast<long>(result.witness.size()) != result.value)
    throw InternalError("cograph witness size differs from alpha'");
  return result;
}

EquationZero rhs_equation0(const Graph& g, const SolverBudget& budget) {
  EquationZero out;
  const int n = g.vertex_count();
  out.d_prime.resize(n);
  std::vector<long> weights(n);
  for (int v = 0; v < n; ++v) {
    out.d_prime[v] = max_independent_set(g.induced(g.neighbors(v)), budget).size;
    weights[v] = out.d_prime[v];
  }
  auto best = max_weight_independent_set(g, weights, budget);
  out.value = best.weight;
  out.weight_set = std::move(best.vertices);
  return out;
}

}  // namespace ecg

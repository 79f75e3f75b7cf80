#include "ecg/matching.hpp"

#include <algorithm>
#include <deque>

namespace ecg {

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.vertex_count()), mate_(n_, -1), parent_(n_), base_(n_), in_queue_(n_),
        in_blossom_(n_) {}

  std::vector<int> run() {
    // Greedy start halves the number of augmentations on typical inputs.
    for (int v = 0; v < n_; ++v)
      if (mate_[v] < 0)
        for (int w : g_.neighbors(v))
          if (mate_[w] < 0) {
            mate_[v] = w;
            mate_[w] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (mate_[v] < 0) {
        const int end = find_path(v);
        for (int x = end; x >= 0;) {
          const int px = parent_[x];
          const int next = mate_[px];
          mate_[x] = px;
          mate_[px] = x;
          x = next;
        }
      }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Alternating BFS from root; returns the free vertex ending an augmenting
  // path, or -1.
  int find_path(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    std::deque<int> queue{root};
    in_queue_[root] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const int b = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!in_queue_[i]) {
                in_queue_[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          in_queue_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> in_queue_, in_blossom_;
};

}  // namespace

std::vector<EdgeRef> max_cardinality_matching_general(const Graph& g) {
  const auto mate = Blossom(g).run();
  std::vector<EdgeRef> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  return out;
}

}  // namespace ecg

#include "ecg/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "ecg/bitset.hpp"
#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"

namespace ecg {

void SolverBudget::validate() const {
  if (max_vertices <= 0 || max_nodes <= 0 || !(time_limit > 0))
    throw InvalidArgument("solver budget fields must be positive");
}

namespace {

class BudgetGuard {
 public:
  explicit BudgetGuard(const SolverBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {
    budget.validate();
  }

  void check_size(int vertices, const char* what) const {
    if (vertices > budget_.max_vertices)
      throw BudgetExceeded(std::string(what) + ": " + std::to_string(vertices) +
                           " vertices exceed the budget of " + std::to_string(budget_.max_vertices));
  }

  void tick() {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("search node budget of " + std::to_string(budget_.max_nodes) +
                           " exhausted");
    if ((nodes_ & 1023) == 0) {
      const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
      if (spent.count() > budget_.time_limit)
        throw BudgetExceeded("time limit of " + std::to_string(budget_.time_limit) + " s exceeded");
    }
  }

  long nodes() const { return nodes_; }

 private:
  SolverBudget budget_;
  std::chrono::steady_clock::time_point start_;
  long nodes_ = 0;
};

// Branch and bound for maximum (weighted) independent set. With unit
// weights the dominance rule is the classic N[u] ⊆ N[v] => drop v.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, std::vector<long> weights, BudgetGuard& guard)
      : g_(g), w_(std::move(weights)), guard_(guard) {}

  std::vector<int> run() {
    Bitset all(g_.vertex_count());
    all.set_all();
    std::vector<int> current;
    search(all, current, 0);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void search(Bitset p, std::vector<int>& current, long weight) {
    guard_.tick();
    const std::size_t mark = current.size();
    const long mark_weight = weight;
    reduce(p, current, weight);
    if (p.none()) {
      if (weight > best_weight_ || best_weight_ < 0) {
        best_weight_ = weight;
        best_ = current;
      }
    } else if (weight + clique_cover_bound(p) > best_weight_) {
      int pivot = -1, pivot_degree = -1;
      for (int v = p.first(); v >= 0; v = p.next(v)) {
        const int d = g_.row(v).intersection_count(p);
        if (d > pivot_degree) {
          pivot = v;
          pivot_degree = d;
        }
      }
      Bitset with = p;
      with.subtract(g_.row(pivot));
      with.reset(pivot);
      current.push_back(pivot);
      search(with, current, weight + w_[pivot]);
      current.pop_back();
      p.reset(pivot);
      search(p, current, weight);
    }
    current.resize(mark);
    (void)mark_weight;
  }

  // Takes isolated vertices and removes dominated ones until stable.
  void reduce(Bitset& p, std::vector<int>& current, long& weight) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = p.first(); v >= 0; v = p.next(v)) {
        Bitset nv = g_.row(v) & p;
        if (nv.none()) {
          current.push_back(v);
          weight += w_[v];
          p.reset(v);
          changed = true;
          continue;
        }
        nv.set(v);
        // v is dominated by a neighbour u with N[u] ⊆ N[v] and w(u) >= w(v).
        for (int u = nv.first(); u >= 0; u = nv.next(u)) {
          if (u == v || w_[u] < w_[v]) continue;
          Bitset nu = g_.row(u) & p;
          nu.set(u);
          if (nu.is_subset_of(nv)) {
            p.reset(v);
            changed = true;
            break;
          }
        }
      }
    }
  }

  // Greedy partition of p into cliques; any independent set takes at most
  // one vertex per clique.
  long clique_cover_bound(const Bitset& p) {
    cover_common_.clear();
    cover_max_.clear();
    for (int v = p.first(); v >= 0; v = p.next(v)) {
      std::size_t j = 0;
      while (j < cover_common_.size() && !cover_common_[j].test(v)) ++j;
      if (j == cover_common_.size()) {
        cover_common_.push_back(g_.row(v) & p);
        cover_max_.push_back(w_[v]);
      } else {
        cover_common_[j] &= g_.row(v);
        cover_max_[j] = std::max(cover_max_[j], w_[v]);
      }
    }
    long bound = 0;
    for (long x : cover_max_) bound += x;
    return bound;
  }

  const Graph& g_;
  std::vector<long> w_;
  BudgetGuard& guard_;
  std::vector<int> best_;
  long best_weight_ = -1;
  std::vector<Bitset> cover_common_;
  std::vector<long> cover_max_;
};

}  // namespace

VertexSet max_independent_set(const Graph& g, const SolverBudget& budget) {
  BudgetGuard guard(budget);
  guard.check_size(g.vertex_count(), "independent set");
  auto vertices =
      IndependentSetSearch(g, std::vector<long>(g.vertex_count(), 1), guard).run();
  return {static_cast<int>(vertices.size()), std::move(vertices)};
}

WeightedVertexSet max_weight_independent_set(const Graph& g, std::span<const long> weights,
                                             const SolverBudget& budget) {
  if (static_cast<int>(weights.size()) != g.vertex_count())
    throw InvalidArgument("one weight per vertex required");
  for (long w : weights)
    if (w < 0) throw InvalidArgument("weights must be non-negative");
  BudgetGuard guard(budget);
  guard.check_size(g.vertex_count(), "weighted independent set");
  auto vertices =
      IndependentSetSearch(g, std::vector<long>(weights.begin(), weights.end()), guard).run();
  long total = 0;
  for (int v : vertices) total += weights[v];
  return {total, std::move(vertices)};
}

VertexSet min_vertex_cover(const Graph& g, const SolverBudget& budget) {
  const auto mis = max_independent_set(g, budget);
  VertexSet cover;
  std::size_t k = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (k < mis.vertices.size() && mis.vertices[k] == v) {
      ++k;
      continue;
    }
    cover.vertices.push_back(v);
  }
  cover.size = static_cast<int>(cover.vertices.size());
  return cover;
}

EdgeSet alpha_prime_oracle(const Graph& g, const SolverBudget& budget) {
  budget.validate();
  if (g.edge_count() > budget.max_vertices)
    throw BudgetExceeded("edge-clique graph has " + std::to_string(g.edge_count()) +
                         " vertices, budget is " + std::to_string(budget.max_vertices));
  const auto ke = edge_clique_graph(g);
  const auto mis = max_independent_set(ke.graph, budget);
  EdgeSet out{mis.size, ke.edges_of(mis.vertices)};
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

namespace {

class CliqueEnumerator {
 public:
  CliqueEnumerator(const Graph& g, BudgetGuard& guard) : g_(g), guard_(guard) {}

  std::vector<std::vector<int>> run() {
    Bitset p(g_.vertex_count()), x(g_.vertex_count());
    p.set_all();
    std::vector<int> r;
    expand(r, p, x);
    for (auto& c : out_) std::sort(c.begin(), c.end());
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  void expand(std::vector<int>& r, Bitset p, Bitset x) {
    guard_.tick();
    if (p.none()) {
      if (x.none()) out_.push_back(r);
      return;
    }
    // Pivot with the most neighbours in p.
    int pivot = -1, best = -1;
    for (const Bitset* s : {&p, &x})
      for (int u = s->first(); u >= 0; u = s->next(u)) {
        const int c = g_.row(u).intersection_count(p);
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
    Bitset candidates = p;
    candidates.subtract(g_.row(pivot));
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
      r.push_back(v);
      expand(r, p & g_.row(v), x & g_.row(v));
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  const Graph& g_;
  BudgetGuard& guard_;
  std::vector<std::vector<int>> out_;
};

class CoverSearch {
 public:
  CoverSearch(const Graph& g, const std::vector<std::vector<int>>& cliques, BudgetGuard& guard)
      : g_(g), guard_(guard), edges_(g.edges()) {
    const int m = static_cast<int>(edges_.size());
    for (const auto& c : cliques) {
      if (c.size() < 2) continue;
      Bitset covered(m);
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) covered.set(edge_index(c[i], c[j]));
      clique_edges_.push_back(std::move(covered));
    }
    containing_.resize(m);
    for (std::size_t c = 0; c < clique_edges_.size(); ++c)
      for (int e = clique_edges_[c].first(); e >= 0; e = clique_edges_[c].next(e))
        containing_[e].push_back(static_cast<int>(c));
  }

  int run() {
    const int m = static_cast<int>(edges_.size());
    Bitset uncovered(m);
    uncovered.set_all();
    best_ = m;  // one clique per edge always works
    search(uncovered, 0);
    return best_;
  }

 private:
  int edge_index(int u, int v) const {
    return static_cast<int>(std::lower_bound(edges_.begin(), edges_.end(), EdgeRef(u, v)) -
                            edges_.begin());
  }

  // Uncovered edges pairwise outside a common clique need distinct cliques.
  int lower_bound(const Bitset& uncovered) const {
    std::vector<int> chosen;
    for (int e = uncovered.first(); e >= 0; e = uncovered.next(e)) {
      bool ok = true;
      for (int f : chosen)
        if (edges_in_common_clique(g_, edges_[e], edges_[f])) {
          ok = false;
          break;
        }
      if (ok) chosen.push_back(e);
    }
    return static_cast<int>(chosen.size());
  }

  void search(const Bitset& uncovered, int used) {
    guard_.tick();
    if (uncovered.none()) {
      best_ = std::min(best_, used);
      return;
    }
    if (used + lower_bound(uncovered) >= best_) return;
    int pick = -1;
    std::size_t fewest = 0;
    for (int e = uncovered.first(); e >= 0; e = uncovered.next(e))
      if (pick < 0 || containing_[e].size() < fewest) {
        pick = e;
        fewest = containing_[e].size();
      }
    std::vector<int> options = containing_[pick];
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return clique_edges_[a].intersection_count(uncovered) >
             clique_edges_[b].intersection_count(uncovered);
    });
    for (int c : options) {
      Bitset next = uncovered;
      next.subtract(clique_edges_[c]);
      search(next, used + 1);
    }
  }

  const Graph& g_;
  BudgetGuard& guard_;
  std::vector<EdgeRef> edges_;
  std::vector<Bitset> clique_edges_;
  std::vector<std::vector<int>> containing_;
  int best_ = 0;
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, const SolverBudget& budget) {
  BudgetGuard guard(budget);
  guard.check_size(g.vertex_count(), "maximal cliques");
  return CliqueEnumerator(g, guard).run();
}

int theta_e_exact(const Graph& g, const SolverBudget& budget) {
  BudgetGuard guard(budget);
  guard.check_size(g.vertex_count(), "edge clique cover");
  if (g.edge_count() == 0) return 0;
  const auto cliques = CliqueEnumerator(g, guard).run();
  return CoverSearch(g, cliques, guard).run();
}

}  // namespace ecg

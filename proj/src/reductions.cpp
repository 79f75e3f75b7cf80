#include "ecg/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"

namespace ecg {

void CnfFormula::validate() const {
  if (num_vars < 0) throw InvalidArgument("negative variable count");
  for (std::size_t c = 0; c < clauses.size(); ++c)
    for (const auto& lit : clauses[c])
      if (lit.var < 0 || lit.var >= num_vars)
        throw InvalidArgument("clause " + std::to_string(c) + " uses variable " +
                              std::to_string(lit.var + 1) + " of " + std::to_string(num_vars));
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  return std::all_of(clauses.begin(), clauses.end(), [&](const auto& clause) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](const Literal& l) { return assignment.at(l.var) == l.positive; });
  });
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header = false;
  long declared = 0;
  std::vector<Literal> pending;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string kind;
      if (header || !(ls >> kind >> f.num_vars >> declared) || kind != "cnf" || f.num_vars < 0 ||
          declared < 0)
        throw ParseError(ParseErrorKind::malformed_header, "expected 'p cnf <vars> <clauses>'",
                         number);
      header = true;
      continue;
    }
    if (!header) throw ParseError(ParseErrorKind::malformed_header, "clause before header", number);
    do {
      long x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(ParseErrorKind::malformed_body, "bad literal '" + tok + "'", number);
      if (x == 0) {
        if (pending.size() != 3)
          throw ParseError(ParseErrorKind::malformed_body,
                           "clause with " + std::to_string(pending.size()) + " literals, need 3",
                           number);
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (std::abs(x) > f.num_vars)
        throw ParseError(ParseErrorKind::vertex_out_of_range,
                         "variable " + std::to_string(std::abs(x)) + " not declared", number);
      pending.push_back({static_cast<int>(std::abs(x)) - 1, x > 0});
    } while (ls >> tok);
  }
  if (!header) throw ParseError(ParseErrorKind::malformed_header, "missing 'p cnf' line");
  if (!pending.empty()) throw ParseError(ParseErrorKind::malformed_body, "unterminated clause");
  if (static_cast<long>(f.clauses.size()) != declared)
    throw ParseError(ParseErrorKind::malformed_header,
                     "header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(f.clauses.size()));
  return f;
}

Graph lemma1_reduction(const Graph& g) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Graph h(n + 2 * m + 1);
  for (int v = 0; v < n; ++v) h.set_label(v, "g:" + std::to_string(v));
  for (int i = 0; i < m; ++i) {
    const auto& e = edges[i];
    h.add_edge(e.u, e.v);
    for (int s = 0; s < 2; ++s) {
      const int x = n + 2 * i + s;
      h.add_edge(x, e.u);
      h.add_edge(x, e.v);
      h.set_label(x, "simplicial:" + std::to_string(e.u) + "-" + std::to_string(e.v) + ":" +
                         std::to_string(s));
    }
  }
  const int x = n + 2 * m;
  h.set_label(x, "apex");
  for (int v = 0; v < n; ++v) h.add_edge(x, v);
  return h;
}

ClauseGadget clause_gadget() {
  ClauseGadget cg;
  cg.graph = Graph(6);
  cg.inner = {0, 1, 2};
  cg.outer = {3, 4, 5};
  for (int i = 0; i < 3; ++i) {
    cg.graph.set_label(cg.inner[i], "a" + std::to_string(i));
    cg.graph.set_label(cg.outer[i], "b" + std::to_string(i));
    for (int j = i + 1; j < 3; ++j) {
      cg.graph.add_edge(cg.inner[i], cg.inner[j]);
      cg.graph.add_edge(cg.outer[i], cg.outer[j]);
    }
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        cg.graph.add_edge(cg.inner[i], cg.outer[j]);
        cg.cross_edges.emplace_back(cg.inner[i], cg.outer[j]);
      }
  }
  std::sort(cg.cross_edges.begin(), cg.cross_edges.end());
  // Set s is the induced 4-cycle on the two partner pairs other than pair s.
  for (int s = 0; s < 3; ++s) {
    const int i = (s + 1) % 3, j = (s + 2) % 3;
    auto& set = cg.max_sets[s];
    set = {EdgeRef(cg.inner[i], cg.inner[j]), EdgeRef(cg.outer[i], cg.outer[j]),
           EdgeRef(cg.inner[i], cg.outer[j]), EdgeRef(cg.inner[j], cg.outer[i])};
    std::sort(set.begin(), set.end());
  }
  return cg;
}

namespace {

class Builder {
 public:
  int vertex(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<int>(labels_.size()) - 1;
  }
  void edge(int u, int v) { edges_.emplace_back(u, v); }
  int simplicial(int u, int v) {
    const int s = vertex("simplicial:" + labels_[u] + "|" + labels_[v]);
    edge(s, u);
    edge(s, v);
    simplicial_.push_back({u, v, s});
    return s;
  }
  Graph build() const {
    Graph g(static_cast<int>(labels_.size()));
    for (const auto& e : edges_) g.add_edge(e.u, e.v);
    for (std::size_t v = 0; v < labels_.size(); ++v) g.set_label(static_cast<int>(v), labels_[v]);
    return g;
  }
  const std::vector<std::array<int, 3>>& simplicial_triangles() const { return simplicial_; }

 private:
  std::vector<std::string> labels_;
  std::vector<EdgeRef> edges_;
  std::vector<std::array<int, 3>> simplicial_;
};

}  // namespace

ReductionOutput sat_reduction(const CnfFormula& f) {
  f.validate();
  ReductionOutput out;
  out.formula = f;
  Builder b;
  auto& trace = out.trace;

  // Variable x: triangle t0 t1 t2; t0t1 is the literal x, t0t2 is not-x and
  // t1t2 carries a simplicial vertex.
  std::vector<std::array<int, 3>> var(f.num_vars);
  for (int i = 0; i < f.num_vars; ++i) {
    const std::string name = "var:" + std::to_string(i);
    for (int t = 0; t < 3; ++t) var[i][t] = b.vertex(name + ":t" + std::to_string(t));
    b.edge(var[i][0], var[i][1]);
    b.edge(var[i][0], var[i][2]);
    b.edge(var[i][1], var[i][2]);
    trace[name + ":pos"] = {var[i][0], var[i][1]};
    trace[name + ":neg"] = {var[i][0], var[i][2]};
    trace[name + ":simplicial"] = {b.simplicial(var[i][1], var[i][2])};
  }

  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const std::string name = "clause:" + std::to_string(c);
    std::array<int, 3> a{}, o{};
    for (int i = 0; i < 3; ++i) a[i] = b.vertex(name + ":a" + std::to_string(i));
    for (int i = 0; i < 3; ++i) o[i] = b.vertex(name + ":b" + std::to_string(i));
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        b.edge(a[i], a[j]);
        b.edge(o[i], o[j]);
      }
      for (int j = 0; j < 3; ++j)
        if (i != j) b.edge(a[i], o[j]);
    }
    for (int s = 0; s < 3; ++s) {
      // Slot s of the clause is the gadget edge a_s b_{s+1}; the three slots
      // lie in different maximum independent sets of the octahedron.
      const std::string slot = name + ":link:" + std::to_string(s);
      const Literal lit = f.clauses[c][s];
      const auto& t = var[lit.var];
      const int p = t[0], p2 = lit.positive ? t[1] : t[2];
      const int q = a[s], q2 = o[(s + 1) % 3];
      trace[slot + ":literal"] = {p, p2};
      trace[slot + ":gadget"] = {q, q2};
      const int v1 = b.vertex(slot + ":v1");
      const int v2 = b.vertex(slot + ":v2");
      const int v3 = b.vertex(slot + ":v3");
      trace[slot + ":v1"] = {v1};
      trace[slot + ":v2"] = {v2};
      trace[slot + ":v3"] = {v3};
      // 2-chain p v1 q, 3-chain p' v2 v3 q', and the four cross edges.
      for (auto [x, y] : {std::pair{p, v1}, std::pair{v1, q}, std::pair{p2, v2}, std::pair{v2, v3},
                          std::pair{v3, q2}}) {
        b.edge(x, y);
        b.simplicial(x, y);
      }
      b.edge(p, v2);
      b.edge(v2, v1);
      b.edge(v1, v3);
      b.edge(v3, q);
    }
  }

  out.g = b.build();
  out.simplicial_count = static_cast<int>(b.simplicial_triangles().size());
  out.threshold = f.num_vars + 14 * static_cast<int>(f.clauses.size());

  // K: K_e(g) without the edges of the triangles around simplicial vertices,
  // then without isolated vertices.
  const EdgeCliqueGraph ke = edge_clique_graph(out.g);
  std::vector<char> drop(ke.edges.size(), 0);
  for (const auto& [u, v, s] : b.simplicial_triangles())
    for (const EdgeRef e : {EdgeRef(u, v), EdgeRef(u, s), EdgeRef(v, s)}) drop[ke.vertex_of(e)] = 1;
  std::vector<int> keep;
  for (int x = 0; x < ke.graph.vertex_count(); ++x) {
    if (drop[x]) continue;
    const bool has_neighbor = std::any_of(ke.graph.neighbors(x).begin(), ke.graph.neighbors(x).end(),
                                          [&](int y) { return !drop[y]; });
    if (has_neighbor) keep.push_back(x);
  }
  out.k_graph = ke.graph.induced(keep);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const auto& e = ke.edges[keep[i]];
    out.k_edges.push_back(e);
    out.k_graph.set_label(static_cast<int>(i), std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  return out;
}

std::optional<OddWheel> check_no_odd_wheel(const Graph& g) {
  for (int hub = 0; hub < g.vertex_count(); ++hub) {
    const auto& nb = g.neighbors(hub);
    const Graph h = g.induced(nb);
    const int k = h.vertex_count();
    std::vector<int> colour(k, -1), parent(k, -1), depth(k, 0);
    for (int s = 0; s < k; ++s) {
      if (colour[s] >= 0) continue;
      colour[s] = 0;
      std::deque<int> queue{s};
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : h.neighbors(x)) {
          if (colour[y] < 0) {
            colour[y] = 1 - colour[x];
            parent[y] = x;
            depth[y] = depth[x] + 1;
            queue.push_back(y);
          } else if (colour[y] == colour[x]) {
            // Tree paths from x and y up to their meeting point close an odd cycle.
            std::vector<int> left{x}, right{y};
            int a = x, c = y;
            while (a != c) {
              if (depth[a] >= depth[c]) {
                a = parent[a];
                left.push_back(a);
              } else {
                c = parent[c];
                right.push_back(c);
              }
            }
            right.pop_back();
            OddWheel w;
            w.hub = hub;
            for (int v : left) w.cycle.push_back(nb[v]);
            for (auto it = right.rbegin(); it != right.rend(); ++it) w.cycle.push_back(nb[*it]);
            return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<bool> decode_assignment(const ReductionOutput& r, const std::vector<int>& cover) {
  const int n = r.k_graph.vertex_count();
  Bitset in(n);
  for (int x : cover) {
    if (x < 0 || x >= n) throw InvalidArgument("cover vertex " + std::to_string(x) + " out of range");
    in.set(x);
  }
  if (in.count() > r.threshold)
    throw InvalidArgument("cover has " + std::to_string(in.count()) + " vertices, threshold is " +
                          std::to_string(r.threshold));
  for (const auto& e : r.k_graph.edges())
    if (!in.test(e.u) && !in.test(e.v))
      throw InvalidArgument("cover misses edge " + std::to_string(e.u) + "-" + std::to_string(e.v));

  std::vector<bool> assignment(r.formula.num_vars, false);
  for (int i = 0; i < r.formula.num_vars; ++i) {
    const auto& ids = r.trace.at("var:" + std::to_string(i) + ":pos");
    const EdgeRef e(ids[0], ids[1]);
    auto it = std::lower_bound(r.k_edges.begin(), r.k_edges.end(), e);
    assignment[i] = it != r.k_edges.end() && *it == e && in.test(static_cast<int>(it - r.k_edges.begin()));
  }
  if (!r.formula.satisfied_by(assignment))
    throw InternalError("decoded assignment does not satisfy the formula");
  return assignment;
}

}  // namespace ecg

#include "ecg/treewidth_dp.hpp"

#include <algorithm>
#include <string>

#include "ecg/edge_clique.hpp"
#include "ecg/errors.hpp"

namespace ecg {

namespace {

using Key = std::vector<EdgeRef>;

struct Entry {
  int value = 0;
  const Key* child = nullptr;  // introduce/forget: the child key realising value
};

using Table = std::map<Key, Entry>;

}  // namespace

TreewidthDpResult treewidth_dp(const Graph& g, const NiceTreeDecomposition& ntd, int max_width) {
  validate(g, ntd);
  if (ntd.width() > max_width)
    throw BudgetExceeded("decomposition width " + std::to_string(ntd.width()) + " exceeds " +
                         std::to_string(max_width));
  TreewidthDpResult result;
  if (ntd.nodes.empty()) return result;

  std::vector<Table> tables(ntd.nodes.size());
  for (int i : ntd.postorder()) {
    const auto& node = ntd.nodes[i];
    Table& table = tables[i];
    switch (node.kind) {
      case NiceKind::leaf:
        table[{}] = {0, nullptr};
        break;

      case NiceKind::introduce: {
        const int v = node.vertex;
        std::vector<int> nbrs;
        for (int x : node.bag)
          if (g.has_edge(v, x)) nbrs.push_back(x);
        for (const auto& [f, entry] : tables[node.children[0]]) {
          // Bag neighbours x whose edge vx is independent of every edge of f.
          std::vector<int> ok;
          for (int x : nbrs) {
            const EdgeRef e(v, x);
            if (std::none_of(f.begin(), f.end(),
                             [&](const EdgeRef& h) { return edges_in_common_clique(g, e, h); }))
              ok.push_back(x);
          }
          // Subsets of ok that are independent in g give independent stars at v.
          std::vector<int> chosen;
          auto extend = [&](auto&& self, std::size_t from) -> void {
            Key key = f;
            for (int x : chosen) key.emplace_back(v, x);
            std::sort(key.begin(), key.end());
            const int value = entry.value + static_cast<int>(chosen.size());
            auto [it, fresh] = table.try_emplace(std::move(key), Entry{value, &f});
            if (!fresh && it->second.value < value) it->second = {value, &f};
            for (std::size_t j = from; j < ok.size(); ++j) {
              if (std::any_of(chosen.begin(), chosen.end(),
                              [&](int y) { return g.has_edge(y, ok[j]); }))
                continue;
              chosen.push_back(ok[j]);
              self(self, j + 1);
              chosen.pop_back();
            }
          };
          extend(extend, 0);
        }
        break;
      }

      case NiceKind::forget: {
        const int v = node.vertex;
        for (const auto& [f, entry] : tables[node.children[0]]) {
          Key key;
          for (const auto& e : f)
            if (e.u != v && e.v != v) key.push_back(e);
          auto [it, fresh] = table.try_emplace(std::move(key), Entry{entry.value, &f});
          if (!fresh && it->second.value < entry.value) it->second = {entry.value, &f};
        }
        break;
      }

      case NiceKind::join: {
        const Table& a = tables[node.children[0]];
        const Table& b = tables[node.children[1]];
        for (const auto& [f, entry] : a) {
          auto it = b.find(f);
          if (it == b.end()) continue;
          table[f] = {entry.value + it->second.value - static_cast<int>(f.size()), nullptr};
        }
        break;
      }
    }
  }

  const Table& top = tables[ntd.root];
  const Key* best = nullptr;
  for (const auto& [f, entry] : top)
    if (!best || entry.value > top.at(*best).value) best = &f;
  result.size = top.at(*best).value;

  std::vector<std::pair<int, const Key*>> stack{{ntd.root, best}};
  while (!stack.empty()) {
    auto [i, key] = stack.back();
    stack.pop_back();
    result.witness.insert(result.witness.end(), key->begin(), key->end());
    const auto& node = ntd.nodes[i];
    if (node.kind == NiceKind::join) {
      for (int c : node.children) stack.emplace_back(c, &tables[c].find(*key)->first);
    } else if (node.kind != NiceKind::leaf) {
      stack.emplace_back(node.children[0], tables[i].at(*key).child);
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.witness.erase(std::unique(result.witness.begin(), result.witness.end()),
                       result.witness.end());
  if (static_cast<int>(result.witness.size()) != result.size ||
      !is_independent_edge_set(g, result.witness))
    throw InternalError("treewidth DP witness does not match its value");

  result.tables.reserve(tables.size());
  for (const auto& t : tables) {
    DpTable plain;
    for (const auto& [f, entry] : t) plain.emplace(f, entry.value);
    result.tables.push_back(std::move(plain));
  }
  return result;
}

}  // namespace ecg

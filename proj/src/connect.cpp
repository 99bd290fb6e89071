#include "ccq/connect.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ccq/error.hpp"

namespace ccq {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // The smaller root wins, so every root is the minimum of its set.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

TopologyGraph node_resolution(const TopologyGraph& G) {
  if (G.v_app.empty()) return G;
  std::vector<bool> removed(G.vertices.size(), false);
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> drop_edge(G.edges.size(), false);
  for (int v : G.v_app) {
    const int f = G.vertex(v).fiber;
    std::vector<int> left, right;
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
      const auto [a, b] = G.edges[e];
      if (a != v && b != v) continue;
      const int u = a == v ? b : a;
      const int fu = G.vertex(u).fiber;
      if (fu == f - 1) {
        left.push_back(u);
      } else if (fu == f + 1) {
        right.push_back(u);
      } else {
        throw Error(ErrorCode::GenericityViolation, "apparent node joined to a non-adjacent fiber");
      }
      drop_edge[e] = true;
    }
    removed[static_cast<std::size_t>(v)] = true;
    if (left.empty() && right.empty()) continue;
    if (left.size() != 2 || right.size() != 2) {
      throw Error(ErrorCode::GenericityViolation,
                  "apparent node with " + std::to_string(left.size()) + " left and " + std::to_string(right.size()) +
                      " right neighbours");
    }
    // Fibers list vertices by increasing ordinate, so ids order them too.
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    edges.emplace_back(left[0], right[1]);
    edges.emplace_back(left[1], right[0]);
  }
  for (std::size_t e = 0; e < G.edges.size(); ++e) {
    if (!drop_edge[e]) edges.push_back(G.edges[e]);
  }

  std::vector<int> new_id(G.vertices.size(), -1);
  TopologyGraph R;
  R.fibers = G.fibers;
  for (auto& fib : R.fibers) fib.vertices.clear();
  for (const auto& v : G.vertices) {
    if (removed[static_cast<std::size_t>(v.id)]) continue;
    Vertex w = v;
    w.id = static_cast<int>(R.vertices.size());
    new_id[static_cast<std::size_t>(v.id)] = w.id;
    R.fibers[static_cast<std::size_t>(w.fiber)].vertices.push_back(w.id);
    R.vertices.push_back(std::move(w));
  }
  for (auto [a, b] : edges) {
    a = new_id[static_cast<std::size_t>(a)];
    b = new_id[static_cast<std::size_t>(b)];
    R.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(R.edges.begin(), R.edges.end());
  for (int c : G.v_ctrl) R.v_ctrl.push_back(new_id[static_cast<std::size_t>(c)]);
  return R;
}

std::vector<int> connected_components(const TopologyGraph& G) {
  UnionFind uf(G.vertices.size());
  for (const auto& [a, b] : G.edges) uf.unite(a, b);
  std::vector<int> comp(G.vertices.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = uf.find(static_cast<int>(i));
  return comp;
}

Partition answer_queries(const TopologyGraph& G_resolved) {
  const auto comp = connected_components(G_resolved);
  Partition P;
  for (std::size_t i = 0; i < comp.size(); ++i) P.component_count += comp[i] == static_cast<int>(i) ? 1 : 0;
  std::map<int, std::size_t> block_of;
  for (std::size_t q = 0; q < G_resolved.v_ctrl.size(); ++q) {
    const int c = comp[static_cast<std::size_t>(G_resolved.v_ctrl[q])];
    auto [it, fresh] = block_of.try_emplace(c, P.blocks.size());
    if (fresh) P.blocks.emplace_back();
    P.blocks[it->second].push_back(static_cast<int>(q) + 1);
  }
  return P;
}

}  // namespace ccq

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATRED_GRAPH_HPP_
#define MATRED_GRAPH_HPP_

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matred/element_set.hpp"
#include "matred/error.hpp"

namespace matred {

// Undirected multigraph; edge i is matroid element i.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

inline void ValidateGraph(const Graph& g) {
  if (g.vertices < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoopPresent,
                  "self-loop at vertex " + std::to_string(u));
    }
  }
}

// Bipartite graph with parts {0..left-1} and {0..right-1}.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left, int right, std::vector<std::pair<int, int>> edges)
      : left_(left), right_(right), edges_(std::move(edges)),
        left_adj_(left), right_adj_(right) {
    for (const auto& [a, b] : edges_) {
      if (a < 0 || a >= left || b < 0 || b >= right) {
        throw Error(ErrorCode::kInvalidArgument, "bipartite edge out of range");
      }
      left_adj_[a].push_back(b);
      right_adj_[b].push_back(a);
    }
    for (auto& adj : left_adj_) Normalize(adj);
    for (auto& adj : right_adj_) Normalize(adj);
  }

  int left() const { return left_; }
  int right() const { return right_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& LeftNeighbors(int a) const { return left_adj_[a]; }
  const std::vector<int>& RightNeighbors(int b) const { return right_adj_[b]; }

 private:
  static void Normalize(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  int left_ = 0;
  int right_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> left_adj_;
  std::vector<std::vector<int>> right_adj_;
};

struct Digraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> arcs;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False if already joined.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

struct BipartiteMatching {
  std::vector<int> match_left;   // -1 if unmatched
  std::vector<int> match_right;  // -1 if unmatched
  int size = 0;
};

// Kuhn's augmenting paths. Only left vertices in `left_allowed` and right
// vertices in `right_allowed` participate; left vertices are processed in
// ascending order, neighbours in ascending order.
inline BipartiteMatching MaximumMatching(const BipartiteGraph& g,
                                         const ElementSet& left_allowed,
                                         const ElementSet& right_allowed) {
  BipartiteMatching m;
  m.match_left.assign(g.left(), -1);
  m.match_right.assign(g.right(), -1);
  std::vector<int> seen(g.right(), -1);
  auto augment = [&](auto&& self, int a, int stamp) -> bool {
    for (int b : g.LeftNeighbors(a)) {
      if (!right_allowed.Contains(b) || seen[b] == stamp) continue;
      seen[b] = stamp;
      if (m.match_right[b] == -1 || self(self, m.match_right[b], stamp)) {
        m.match_left[a] = b;
        m.match_right[b] = a;
        return true;
      }
    }
    return false;
  };
  int stamp = 0;
  left_allowed.ForEach([&](int a) {
    if (a < g.left() && augment(augment, a, stamp++)) ++m.size;
  });
  return m;
}

inline BipartiteMatching MaximumMatching(const BipartiteGraph& g) {
  return MaximumMatching(g, ElementSet::Range(g.left()), ElementSet::Range(g.right()));
}

// True iff every left vertex of `x` can be matched into `right_allowed`.
inline bool LeftSetMatchable(const BipartiteGraph& g, const ElementSet& x,
                             const ElementSet& right_allowed) {
  std::vector<int> match_right(g.right(), -1);
  std::vector<int> seen(g.right(), -1);
  auto augment = [&](auto&& self, int a, int stamp) -> bool {
    for (int b : g.LeftNeighbors(a)) {
      if (!right_allowed.Contains(b) || seen[b] == stamp) continue;
      seen[b] = stamp;
      if (match_right[b] == -1 || self(self, match_right[b], stamp)) {
        match_right[b] = a;
        return true;
      }
    }
    return false;
  };
  bool ok = true;
  int stamp = 0;
  x.ForEach([&](int a) {
    if (ok) ok = augment(augment, a, stamp++);
  });
  return ok;
}

// Unit-capacity flow network with augmenting BFS paths; sized for desk-scale
// Menger queries.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(int nodes) : adj_(nodes) {}

  void AddArc(int from, int to, int capacity = 1) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  // Pushes flow until `limit` units or no augmenting path remains.
  int MaxFlow(int source, int sink, int limit) {
    int flow = 0;
    const int n = static_cast<int>(adj_.size());
    while (flow < limit) {
      std::vector<int> via(n, -1);
      std::vector<char> seen(n, 0);
      std::deque<int> queue{source};
      seen[source] = 1;
      while (!queue.empty() && !seen[sink]) {
        int v = queue.front();
        queue.pop_front();
        for (int id : adj_[v]) {
          const Arc& arc = arcs_[id];
          if (arc.capacity > 0 && !seen[arc.to]) {
            seen[arc.to] = 1;
            via[arc.to] = id;
            queue.push_back(arc.to);
          }
        }
      }
      if (!seen[sink]) break;
      for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].capacity -= 1;
        arcs_[via[v] ^ 1].capacity += 1;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int capacity;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

// Number of vertex-disjoint directed paths from `sources` to `targets`
// (paths of length zero allowed), via vertex splitting.
inline int VertexDisjointPaths(const Digraph& d, const ElementSet& sources,
                               const ElementSet& targets) {
  const int n = d.vertices;
  const int super_source = 2 * n;
  const int super_sink = 2 * n + 1;
  UnitFlowNetwork net(2 * n + 2);
  for (int v = 0; v < n; ++v) net.AddArc(2 * v, 2 * v + 1);
  for (const auto& [u, v] : d.arcs) {
    if (u != v) net.AddArc(2 * u + 1, 2 * v);
  }
  sources.ForEach([&](int s) { net.AddArc(super_source, 2 * s); });
  targets.ForEach([&](int t) { net.AddArc(2 * t + 1, super_sink); });
  return net.MaxFlow(super_source, super_sink, targets.Count());
}

// Connected components of the subgraph (all vertices, edges in `edge_subset`).
// Returns component label per vertex; labels are ordered by smallest vertex.
inline std::vector<int> ComponentLabels(const Graph& g, const ElementSet& edge_subset) {
  UnionFind uf(g.vertices);
  edge_subset.ForEach([&](int e) { uf.Union(g.edges[e].first, g.edges[e].second); });
  std::vector<int> label(g.vertices, -1);
  std::vector<int> root_label(g.vertices, -1);
  int next = 0;
  for (int v = 0; v < g.vertices; ++v) {
    int r = uf.Find(v);
    if (root_label[r] == -1) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

// Global minimum cut of the multigraph induced on `vertices` by the edges in
// `edge_subset` (Stoer-Wagner). Returns the vertex side of the cut; ties in
// the maximum-adjacency order go to the smallest vertex id, and the first
// minimum found is kept.
inline std::vector<int> StoerWagnerMinCutSide(const Graph& g,
                                              const std::vector<int>& vertices,
                                              const ElementSet& edge_subset) {
  const int n = static_cast<int>(vertices.size());
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "min cut needs two vertices");
  std::vector<int> local(g.vertices, -1);
  for (int i = 0; i < n; ++i) local[vertices[i]] = i;
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  edge_subset.ForEach([&](int e) {
    int u = local[g.edges[e].first];
    int v = local[g.edges[e].second];
    if (u >= 0 && v >= 0) {
      ++w[u][v];
      ++w[v][u];
    }
  });
  std::vector<std::vector<int>> members(n);
  for (int i = 0; i < n; ++i) members[i] = {vertices[i]};
  std::vector<int> alive(n);
  std::iota(alive.begin(), alive.end(), 0);

  long long best = std::numeric_limits<long long>::max();
  std::vector<int> best_side;
  while (alive.size() > 1) {
    const int m = static_cast<int>(alive.size());
    std::vector<long long> key(m, 0);
    std::vector<char> added(m, 0);
    int prev = -1;
    int last = -1;
    for (int step = 0; step < m; ++step) {
      int pick = -1;
      for (int i = 0; i < m; ++i) {
        if (!added[i] && (pick == -1 || key[i] > key[pick])) pick = i;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (int i = 0; i < m; ++i) {
        if (!added[i]) key[i] += w[alive[pick]][alive[i]];
      }
    }
    if (key[last] < best) {
      best = key[last];
      best_side = members[alive[last]];
    }
    // Merge `last` into `prev`.
    const int s = alive[prev];
    const int t = alive[last];
    for (int i = 0; i < n; ++i) {
      w[s][i] += w[t][i];
      w[i][s] = w[s][i];
    }
    w[s][s] = 0;
    members[s].insert(members[s].end(), members[t].begin(), members[t].end());
    alive.erase(alive.begin() + last);
  }
  std::sort(best_side.begin(), best_side.end());
  return best_side;
}

}  // namespace matred

#endif  // MATRED_GRAPH_HPP_

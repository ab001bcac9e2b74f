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

// Reduction of a gammoid with coloring number k to a (2k-2)-colorable
// partition matroid.
//
// Pipeline: present the gammoid as the restriction to S of the dual of a
// transversal matroid on (A, B; E), shrink the presentation until every
// nonempty U of B has |N(U)| > |U| and no forest leaf lies outside S, take a
// forest in which every B-vertex has degree exactly two (a B2-forest), and
// rewire it until no component carries 2k-1 or more elements of S. The
// S-vertices of each component form one class.

#ifndef MATRED_GAMMOID_REDUCER_HPP_
#define MATRED_GAMMOID_REDUCER_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matred/algorithms.hpp"
#include "matred/element_set.hpp"
#include "matred/error.hpp"
#include "matred/graph.hpp"
#include "matred/matroid.hpp"
#include "matred/reducers.hpp"
#include "matred/zoo.hpp"

namespace matred {

// Bipartite graph (A, B; E) with marked A-vertices S. Element e of the
// presented matroid is A-vertex s_vertices[e].
struct BipartitePresentation {
  int a_count = 0;
  int b_count = 0;
  std::vector<std::pair<int, int>> edges;  // (a, b), no duplicates
  std::vector<int> s_vertices;

  BipartiteGraph Graph() const { return BipartiteGraph(a_count, b_count, edges); }

  ElementSet SMask() const { return ElementSet::FromSpan(s_vertices); }

  int ElementOfA(int a) const {
    auto it = std::find(s_vertices.begin(), s_vertices.end(), a);
    return it == s_vertices.end() ? -1 : static_cast<int>(it - s_vertices.begin());
  }
};

// restrict(dual(transversal(A, B; E)), S): X is independent iff A - X still
// has a maximum matching of the full size.
inline Matroid PresentedMatroid(const BipartitePresentation& p) {
  const BipartiteGraph g = p.Graph();
  const ElementSet all_a = ElementSet::Range(p.a_count);
  const ElementSet all_b = ElementSet::Range(p.b_count);
  const int full = MaximumMatching(g).size;
  const std::vector<int> s = p.s_vertices;
  return Matroid::Unchecked(static_cast<int>(s.size()), [=](const ElementSet& x) {
    ElementSet removed;
    x.ForEach([&](int e) { removed.Insert(s[e]); });
    return MaximumMatching(g, all_a - removed, all_b).size == full;
  });
}

namespace internal {

// Exhaustive for up to 12 elements, 500 seeded random subsets otherwise.
inline bool AuditEquivalent(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  if (a.size() <= 12) return OracleEqual(a, b);
  std::mt19937_64 rng(0x9a33);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 500; ++trial) {
    ElementSet x;
    for (int e = 0; e < a.size(); ++e) {
      if (coin(rng)) x.Insert(e);
    }
    if (a.IsIndependent(x) != b.IsIndependent(x)) return false;
  }
  return true;
}

inline void RequireEquivalent(const Matroid& expected, const BipartitePresentation& p,
                              const std::string& step) {
  if (!AuditEquivalent(expected, PresentedMatroid(p))) {
    throw Error(ErrorCode::kPresentationMismatch, step + " changed the presented matroid");
  }
}

struct Relabeling {
  BipartitePresentation presentation;
  std::vector<int> new_a;  // -1 if dropped
  std::vector<int> new_b;
};

inline Relabeling Subpresentation(const BipartitePresentation& p, const ElementSet& keep_a,
                                  const ElementSet& keep_b) {
  Relabeling out;
  out.new_a.assign(p.a_count, -1);
  out.new_b.assign(p.b_count, -1);
  int next = 0;
  keep_a.ForEach([&](int a) { out.new_a[a] = next++; });
  out.presentation.a_count = next;
  next = 0;
  keep_b.ForEach([&](int b) { out.new_b[b] = next++; });
  out.presentation.b_count = next;
  for (const auto& [a, b] : p.edges) {
    if (out.new_a[a] >= 0 && out.new_b[b] >= 0) {
      out.presentation.edges.emplace_back(out.new_a[a], out.new_b[b]);
    }
  }
  for (int a : p.s_vertices) {
    if (out.new_a[a] < 0) {
      throw Error(ErrorCode::kInvariantBreach, "sub-presentation drops an S-vertex");
    }
    out.presentation.s_vertices.push_back(out.new_a[a]);
  }
  return out;
}

}  // namespace internal

// Presentation with A = all vertices of D, B = the non-source vertices, an
// edge a_v b_v for every non-source v and an edge a_u b_v for every arc u->v
// into a non-source. S is the sink set in ascending order. The result is
// audited against the linkage oracle before it is returned.
inline BipartitePresentation DualizeGammoid(const Digraph& d, const ElementSet& sources,
                                            const ElementSet& sinks) {
  const Gammoid gammoid(d, sources, sinks);
  BipartitePresentation p;
  p.a_count = d.vertices;
  std::vector<int> b_of(d.vertices, -1);
  for (int v = 0; v < d.vertices; ++v) {
    if (!sources.Contains(v)) b_of[v] = p.b_count++;
  }
  for (int v = 0; v < d.vertices; ++v) {
    if (b_of[v] >= 0) p.edges.emplace_back(v, b_of[v]);
  }
  for (const auto& [u, v] : d.arcs) {
    if (u != v && b_of[v] >= 0) p.edges.emplace_back(u, b_of[v]);
  }
  std::sort(p.edges.begin(), p.edges.end());
  p.edges.erase(std::unique(p.edges.begin(), p.edges.end()), p.edges.end());
  p.s_vertices = sinks.ToVector();

  const Matroid linkage = Matroid::Unchecked(
      gammoid.size(), [gammoid](const ElementSet& x) { return gammoid.Linkage(x) == x.Count(); });
  internal::RequireEquivalent(linkage, p, "dualization");
  return p;
}

// Unique maximal U of B with |N(U)| = |U|, given that B is fully matchable:
// the B-vertices not reachable by alternating paths from exposed A-vertices.
inline ElementSet MaximalTightSet(const BipartitePresentation& p) {
  const BipartiteGraph g = p.Graph();
  const BipartiteMatching matching = MaximumMatching(g);
  if (matching.size != p.b_count) {
    throw Error(ErrorCode::kInvalidArgument, "presentation does not match all of B");
  }
  std::vector<char> seen_b(p.b_count, 0);
  std::deque<int> queue;
  for (int a = 0; a < p.a_count; ++a) {
    if (matching.match_left[a] == -1) queue.push_back(a);
  }
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : g.LeftNeighbors(a)) {
      if (seen_b[b]) continue;
      seen_b[b] = 1;
      queue.push_back(matching.match_right[b]);
    }
  }
  ElementSet tight;
  for (int b = 0; b < p.b_count; ++b) {
    if (!seen_b[b]) tight.Insert(b);
  }
  return tight;
}

struct ForestComponent {
  std::vector<int> a_vertices;
  std::vector<int> b_vertices;
  int s_count = 0;
  int dist = -1;  // -1: unreachable from every large component
  int parent = -1;
  int via_a = -1;  // edge (via_a, via_b) with via_b in the parent
  int via_b = -1;
};

// Forest with every B-vertex of degree two. Components are indexed by their
// smallest A-vertex; distances are BFS distances from the large components.
struct B2Forest {
  std::vector<std::pair<int, int>> edges;
  std::vector<ForestComponent> components;
  std::vector<int> component_of_a;
  std::vector<int> component_of_b;

  int LargeCount(int k) const {
    return static_cast<int>(std::count_if(components.begin(), components.end(),
                                          [k](const auto& c) { return c.s_count >= 2 * k - 1; }));
  }
};

// Recomputes components and distance labels of `edges`; throws
// kInvariantBreach unless they form a B2-forest of `p`.
inline B2Forest AnalyzeForest(const BipartitePresentation& p,
                              std::vector<std::pair<int, int>> edges, int k) {
  B2Forest f;
  std::sort(edges.begin(), edges.end());
  f.edges = std::move(edges);
  UnionFind uf(p.a_count + p.b_count);
  std::vector<int> degree(p.b_count, 0);
  for (const auto& [a, b] : f.edges) {
    if (!uf.Union(a, p.a_count + b)) {
      throw Error(ErrorCode::kInvariantBreach, "forest has a cycle");
    }
    ++degree[b];
  }
  for (int b = 0; b < p.b_count; ++b) {
    if (degree[b] != 2) {
      throw Error(ErrorCode::kInvariantBreach,
                  "B-vertex " + std::to_string(b) + " has forest degree " +
                      std::to_string(degree[b]));
    }
  }
  std::vector<int> component_of_root(p.a_count + p.b_count, -1);
  f.component_of_a.assign(p.a_count, -1);
  f.component_of_b.assign(p.b_count, -1);
  const ElementSet s_mask = p.SMask();
  for (int a = 0; a < p.a_count; ++a) {
    int& id = component_of_root[uf.Find(a)];
    if (id == -1) {
      id = static_cast<int>(f.components.size());
      f.components.emplace_back();
    }
    f.component_of_a[a] = id;
    f.components[id].a_vertices.push_back(a);
    if (s_mask.Contains(a)) ++f.components[id].s_count;
  }
  for (int b = 0; b < p.b_count; ++b) {
    const int id = component_of_root[uf.Find(p.a_count + b)];
    f.component_of_b[b] = id;
    f.components[id].b_vertices.push_back(b);
  }

  const BipartiteGraph g = p.Graph();
  std::deque<int> queue;
  for (int c = 0; c < static_cast<int>(f.components.size()); ++c) {
    if (f.components[c].s_count >= 2 * k - 1) {
      f.components[c].dist = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int b : f.components[c].b_vertices) {
      for (int a : g.RightNeighbors(b)) {
        ForestComponent& next = f.components[f.component_of_a[a]];
        if (next.dist != -1) continue;
        next.dist = f.components[c].dist + 1;
        next.parent = c;
        next.via_a = a;
        next.via_b = b;
        queue.push_back(f.component_of_a[a]);
      }
    }
  }
  return f;
}

// Maximum common independent edge set of the graphic matroid on A + B and
// the matroid allowing two edges at each B-vertex; a B2-forest iff it has
// 2|B| edges.
inline B2Forest FindB2Forest(const BipartitePresentation& p, int k) {
  Graph graph;
  graph.vertices = p.a_count + p.b_count;
  for (const auto& [a, b] : p.edges) graph.edges.emplace_back(a, p.a_count + b);
  const int m = graph.edge_count();
  const Matroid forest = GraphicMatroid(graph);
  std::vector<int> b_of_edge(m);
  for (int e = 0; e < m; ++e) b_of_edge[e] = p.edges[e].second;
  const int b_count = p.b_count;
  const Matroid degree_cap = Matroid::Unchecked(m, [b_of_edge, b_count](const ElementSet& x) {
    std::vector<int> degree(b_count, 0);
    bool ok = true;
    x.ForEach([&](int e) { ok = ok && ++degree[b_of_edge[e]] <= 2; });
    return ok;
  });
  const IntersectionResult common = MatroidIntersectionMax(forest, degree_cap);
  if (common.size != 2 * p.b_count) {
    throw Error(ErrorCode::kNoB2Forest, "some nonempty U of B has |N(U)| <= |U|");
  }
  std::vector<std::pair<int, int>> edges;
  common.set.ForEach([&](int e) { edges.push_back(p.edges[e]); });
  return AnalyzeForest(p, std::move(edges), k);
}

namespace internal {

// Smallest A-vertex outside S with forest degree <= 1, or -1.
inline int FirstLeafOutsideS(const BipartitePresentation& p, const B2Forest& f) {
  std::vector<int> degree(p.a_count, 0);
  for (const auto& [a, b] : f.edges) ++degree[a];
  const ElementSet s_mask = p.SMask();
  for (int a = 0; a < p.a_count; ++a) {
    if (!s_mask.Contains(a) && degree[a] <= 1) return a;
  }
  return -1;
}

// Deletes leaf `a` with its forest neighbor, or an isolated `a` with its
// smallest G-neighbor (or alone if it has none). The surviving forest edges
// still form a B2-forest with the same number of components. The presented
// matroid may change; callers audit.
inline std::pair<BipartitePresentation, std::vector<std::pair<int, int>>> DeleteLeaf(
    const BipartitePresentation& p, const B2Forest& f, int a) {
  int b = -1;
  for (const auto& [fa, fb] : f.edges) {
    if (fa == a) b = fb;
  }
  if (b == -1) {
    const BipartiteGraph g = p.Graph();
    if (!g.LeftNeighbors(a).empty()) b = g.LeftNeighbors(a).front();
  }
  ElementSet keep_b = ElementSet::Range(p.b_count);
  if (b >= 0) keep_b.Erase(b);
  const Relabeling r = Subpresentation(p, ElementSet::Range(p.a_count).Without(a), keep_b);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [fa, fb] : f.edges) {
    if (r.new_a[fa] >= 0 && r.new_b[fb] >= 0) edges.emplace_back(r.new_a[fa], r.new_b[fb]);
  }
  return {r.presentation, std::move(edges)};
}

// Contracts A-vertex `a` outside S with at most two G-neighbors. Degree 0:
// drop a. Degree 1: drop a and its neighbor. Degree 2: merge the two
// neighbors into one B-vertex adjacent to the union of their neighborhoods.
inline BipartitePresentation ContractOutsideVertex(const BipartitePresentation& p, int a) {
  const BipartiteGraph g = p.Graph();
  const std::vector<int>& around = g.LeftNeighbors(a);
  const ElementSet keep_a = ElementSet::Range(p.a_count).Without(a);
  ElementSet keep_b = ElementSet::Range(p.b_count);
  if (around.size() == 1) keep_b.Erase(around[0]);
  if (around.size() <= 1) return Subpresentation(p, keep_a, keep_b).presentation;
  if (around.size() > 2) {
    throw Error(ErrorCode::kInvalidArgument, "vertex has more than two neighbors");
  }
  BipartitePresentation merged = p;
  merged.edges.clear();
  for (auto [x, y] : p.edges) merged.edges.emplace_back(x, y == around[1] ? around[0] : y);
  std::sort(merged.edges.begin(), merged.edges.end());
  merged.edges.erase(std::unique(merged.edges.begin(), merged.edges.end()), merged.edges.end());
  keep_b.Erase(around[1]);
  return Subpresentation(merged, keep_a, keep_b).presentation;
}

struct ForestSearchLimits {
  std::vector<int> b_list;            // B-vertices to span, in order
  std::vector<char> a_allowed;        // A-vertices that may be used
  int max_s = 1 << 30;                // cap on S-vertices per component
  bool require_outside_degree = true;  // A-S vertices in a_allowed need degree >= 2
  bool require_s_everywhere = false;   // every allowed A-vertex's component meets S
  long long budget = 200000;          // search nodes
};

// Depth-first search over B2-forests: each listed B-vertex picks two
// neighbors (ascending pairs). Returns the first forest meeting `limits`.
inline std::optional<std::vector<std::pair<int, int>>> SearchB2Edges(
    const BipartitePresentation& p, const ForestSearchLimits& limits, bool* exhausted) {
  const BipartiteGraph g = p.Graph();
  const int a_count = p.a_count;
  const ElementSet s_mask = p.SMask();
  std::vector<std::vector<int>> options(p.b_count);
  std::vector<int> pending(a_count, 0);
  for (int b : limits.b_list) {
    for (int a : g.RightNeighbors(b)) {
      if (limits.a_allowed[a]) {
        options[b].push_back(a);
        ++pending[a];
      }
    }
  }
  struct State {
    std::vector<int> parent;
    std::vector<int> s_count;
    int Find(int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    }
  };
  State start;
  start.parent.resize(a_count + p.b_count);
  std::iota(start.parent.begin(), start.parent.end(), 0);
  start.s_count.assign(a_count + p.b_count, 0);
  for (int a = 0; a < a_count; ++a) start.s_count[a] = s_mask.Contains(a) ? 1 : 0;

  std::vector<int> degree(a_count, 0);
  std::vector<std::pair<int, int>> chosen;
  long long nodes = 0;
  auto outside_ok = [&](int a) {
    return !limits.require_outside_degree || s_mask.Contains(a) || degree[a] + pending[a] >= 2;
  };
  auto finish = [&](State& st) {
    if (!limits.require_s_everywhere) return true;
    for (int a = 0; a < a_count; ++a) {
      if (limits.a_allowed[a] && st.s_count[st.Find(a)] == 0) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t index, State st) -> bool {
    if (++nodes > limits.budget) {
      *exhausted = true;
      return false;
    }
    if (index == limits.b_list.size()) return finish(st);
    const int b = limits.b_list[index];
    const std::vector<int>& around = options[b];
    for (int a : around) --pending[a];
    bool found = false;
    for (std::size_t i = 0; i < around.size() && !found && !*exhausted; ++i) {
      for (std::size_t j = i + 1; j < around.size() && !found && !*exhausted; ++j) {
        const int x = around[i];
        const int y = around[j];
        State next = st;
        const int rx = next.Find(x);
        const int ry = next.Find(y);
        if (rx == ry) continue;
        const int rb = next.Find(a_count + b);
        if (next.s_count[rx] + next.s_count[ry] > limits.max_s) continue;
        next.parent[rx] = rb;
        next.parent[ry] = rb;
        next.s_count[rb] = next.s_count[rx] + next.s_count[ry];
        ++degree[x];
        ++degree[y];
        bool feasible = true;
        for (int a : around) feasible = feasible && outside_ok(a);
        if (feasible) {
          chosen.emplace_back(x, b);
          chosen.emplace_back(y, b);
          found = self(self, index + 1, next);
          if (!found) {
            chosen.pop_back();
            chosen.pop_back();
          }
        }
        --degree[x];
        --degree[y];
      }
    }
    for (int a : around) ++pending[a];
    return found;
  };
  for (int a = 0; a < a_count; ++a) {
    if (limits.a_allowed[a] && !outside_ok(a)) return std::nullopt;
  }
  if (recurse(recurse, 0, start)) return chosen;
  return std::nullopt;
}

// Re-spans every component that has a leaf outside S by a B2-tree on the
// same vertices without such leaves, when one exists. Component vertex sets
// (and so the potential) are unchanged. Returns true if any edge changed.
inline bool RespanComponents(const BipartitePresentation& p, B2Forest& f, int k) {
  const ElementSet s_mask = p.SMask();
  std::vector<int> degree(p.a_count, 0);
  for (const auto& [a, b] : f.edges) ++degree[a];
  std::vector<std::pair<int, int>> edges;
  bool changed = false;
  for (const ForestComponent& c : f.components) {
    bool bad = false;
    for (int a : c.a_vertices) bad = bad || (!s_mask.Contains(a) && degree[a] <= 1);
    std::optional<std::vector<std::pair<int, int>>> replacement;
    if (bad && !c.b_vertices.empty()) {
      ForestSearchLimits limits;
      limits.b_list = c.b_vertices;
      limits.a_allowed.assign(p.a_count, 0);
      for (int a : c.a_vertices) limits.a_allowed[a] = 1;
      bool exhausted = false;
      replacement = SearchB2Edges(p, limits, &exhausted);
    }
    if (replacement) {
      changed = true;
      edges.insert(edges.end(), replacement->begin(), replacement->end());
    } else {
      for (const auto& e : f.edges) {
        if (f.component_of_a[e.first] == f.component_of_a[c.a_vertices[0]]) edges.push_back(e);
      }
    }
  }
  if (changed) f = AnalyzeForest(p, std::move(edges), k);
  return changed;
}

}  // namespace internal

// Counts of the minimization steps applied.
struct MinimizeStats {
  int tight_splits = 0;
  int contractions = 0;
  int edge_drops = 0;
  int leaf_deletions = 0;
  int rejected_leaf_deletions = 0;
};

// Shrinks a presentation without changing the presented matroid. Repeats
// until nothing applies:
//   1. split off the maximal tight set (its neighbors avoid S);
//   2. contract an A-S vertex with at most two neighbors;
//   3. drop an edge, or a forest leaf outside S with its neighbor, when an
//      exhaustive audit shows the presented matroid is unchanged.
// Steps 1 and 2 are always sound and are audited anyway; step 3 runs only
// when |S| <= 12. Deleting a leaf outside S is not sound in general, so it is
// attempted and kept only when the audit passes.
inline BipartitePresentation MinimizePresentation(const BipartitePresentation& input,
                                                  MinimizeStats* stats = nullptr) {
  MinimizeStats local;
  MinimizeStats& count = stats ? *stats : local;
  const Matroid expected = PresentedMatroid(input);
  const bool exhaustive = input.s_vertices.size() <= 12;
  BipartitePresentation p = input;
  auto keeps_matroid = [&](const BipartitePresentation& candidate) {
    return MaximumMatching(candidate.Graph()).size == candidate.b_count &&
           OracleEqual(expected, PresentedMatroid(candidate));
  };
  while (true) {
    const ElementSet tight = MaximalTightSet(p);
    if (!tight.Empty()) {
      const BipartiteGraph g = p.Graph();
      ElementSet neighbors;
      tight.ForEach([&](int b) {
        for (int a : g.RightNeighbors(b)) neighbors.Insert(a);
      });
      if (neighbors.Intersects(p.SMask())) {
        throw Error(ErrorCode::kTightSetMeetsS, "maximal tight set has a neighbor in S");
      }
      p = internal::Subpresentation(p, ElementSet::Range(p.a_count) - neighbors,
                                    ElementSet::Range(p.b_count) - tight)
              .presentation;
      internal::RequireEquivalent(expected, p, "tight-set split");
      ++count.tight_splits;
      continue;
    }
    const BipartiteGraph g = p.Graph();
    const ElementSet s_mask = p.SMask();
    int contractible = -1;
    for (int a = 0; a < p.a_count && contractible == -1; ++a) {
      if (!s_mask.Contains(a) && g.LeftNeighbors(a).size() <= 2) contractible = a;
    }
    if (contractible != -1) {
      p = internal::ContractOutsideVertex(p, contractible);
      internal::RequireEquivalent(expected, p, "contraction");
      ++count.contractions;
      continue;
    }
    if (!exhaustive) return p;
    bool dropped = false;
    for (std::size_t e = 0; e < p.edges.size();) {
      BipartitePresentation candidate = p;
      candidate.edges.erase(candidate.edges.begin() + static_cast<std::ptrdiff_t>(e));
      if (keeps_matroid(candidate)) {
        p = std::move(candidate);
        dropped = true;
        ++count.edge_drops;
      } else {
        ++e;
      }
    }
    if (dropped) continue;
    const B2Forest f = FindB2Forest(p, 1);
    const int leaf = internal::FirstLeafOutsideS(p, f);
    if (leaf == -1) return p;
    BipartitePresentation candidate = internal::DeleteLeaf(p, f, leaf).first;
    if (!keeps_matroid(candidate)) {
      ++count.rejected_leaf_deletions;
      return p;
    }
    p = std::move(candidate);
    ++count.leaf_deletions;
  }
}

// Lexicographic potential: total violation, then for each distance
// i = 1, 2, ... the component count (more is better) and the S-count (less
// is better).
struct PotentialVector {
  int violation = 0;
  std::vector<std::pair<int, int>> levels;  // levels[i-1] = (count_i, s_count_i)

  friend std::strong_ordering operator<=>(const PotentialVector& x, const PotentialVector& y) {
    if (auto c = x.violation <=> y.violation; c != 0) return c;
    const std::size_t depth = std::max(x.levels.size(), y.levels.size());
    for (std::size_t i = 0; i < depth; ++i) {
      const auto [xc, xs] = i < x.levels.size() ? x.levels[i] : std::pair{0, 0};
      const auto [yc, ys] = i < y.levels.size() ? y.levels[i] : std::pair{0, 0};
      if (auto c = yc <=> xc; c != 0) return c;
      if (auto c = xs <=> ys; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const PotentialVector& x, const PotentialVector& y) {
    return (x <=> y) == 0;
  }

  std::string ToString() const {
    std::string out = "[" + std::to_string(violation);
    for (const auto& [c, s] : levels) {
      out += ",(" + std::to_string(c) + "," + std::to_string(s) + ")";
    }
    return out + "]";
  }
};

inline PotentialVector ComputePotential(const B2Forest& f, int k) {
  PotentialVector v;
  const int q = static_cast<int>(f.components.size());
  v.levels.assign(std::max(q - 1, 0), {0, 0});
  for (const auto& c : f.components) {
    v.violation += std::max(c.s_count - (2 * k - 2), 0);
    if (c.dist >= 1 && c.dist <= q - 1) {
      ++v.levels[c.dist - 1].first;
      v.levels[c.dist - 1].second += c.s_count;
    }
  }
  return v;
}

struct ImproveOutcome {
  B2Forest forest;
  std::string label;  // "large", "case1" or "case2"
  int small_component = -1;
  int parent_component = -1;
  PotentialVector before;
  PotentialVector after;
};

namespace internal {

// The rewiring of ImproveStep without the final potential check.
inline ImproveOutcome ProposeStep(const BipartitePresentation& p, const B2Forest& f, int k) {
  if (f.LargeCount(k) == 0) {
    throw Error(ErrorCode::kNoLargeComponent, "forest has no large component");
  }
  int c0 = -1;
  for (int c = 0; c < static_cast<int>(f.components.size()); ++c) {
    const ForestComponent& comp = f.components[c];
    if (comp.s_count > k - 1 || comp.dist == -1) continue;
    if (c0 == -1 || comp.dist < f.components[c0].dist) c0 = c;
  }
  if (c0 == -1) {
    throw Error(ErrorCode::kNoReachableSmall,
                "no small component is reachable from a large one");
  }
  const ForestComponent& small = f.components[c0];
  const int c1 = small.parent;
  const ForestComponent& mid = f.components[c1];
  const int a = small.via_a;
  const int b = small.via_b;

  std::vector<int> around_b;
  for (const auto& [fa, fb] : f.edges) {
    if (fb == b) around_b.push_back(fa);
  }
  int x = around_b.at(0);
  int y = around_b.at(1);

  // A-vertices on x's side once b is removed from C1.
  auto side_of = [&](int start) {
    std::vector<char> in_a(p.a_count, 0);
    std::vector<char> in_b(p.b_count, 0);
    std::deque<int> queue{start};
    in_a[start] = 1;
    in_b[b] = 1;  // blocked
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const auto& [fa, fb] : f.edges) {
        if (fa != v || in_b[fb]) continue;
        in_b[fb] = 1;
        for (const auto& [ga, gb] : f.edges) {
          if (gb == fb && !in_a[ga]) {
            in_a[ga] = 1;
            queue.push_back(ga);
          }
        }
      }
    }
    return in_a;
  };
  const ElementSet s_mask = p.SMask();
  auto s_count = [&](const std::vector<char>& in_a) {
    int count = 0;
    for (int v = 0; v < p.a_count; ++v) count += in_a[v] && s_mask.Contains(v);
    return count;
  };

  std::vector<char> x_side = side_of(x);
  int removed_neighbor;
  ImproveOutcome out;
  if (mid.dist == 0) {
    out.label = "large";
    // Join C0 to whichever side keeps the merged S-count below |S(C1)|.
    removed_neighbor = small.s_count + s_count(x_side) < mid.s_count ? y : x;
  } else {
    if (!x_side[mid.via_a]) {
      std::swap(x, y);
      x_side = side_of(x);
    }
    if (s_count(x_side) >= mid.s_count - small.s_count) {
      out.label = "case1";
      removed_neighbor = x;
    } else {
      out.label = "case2";
      removed_neighbor = y;
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : f.edges) {
    if (e != std::pair{removed_neighbor, b}) edges.push_back(e);
  }
  edges.emplace_back(a, b);
  out.forest = AnalyzeForest(p, std::move(edges), k);
  out.small_component = c0;
  out.parent_component = c1;
  out.before = ComputePotential(f, k);
  out.after = ComputePotential(out.forest, k);
  if (out.forest.components.size() != f.components.size()) {
    throw Error(ErrorCode::kInvariantBreach, "component count changed");
  }
  return out;
}

}  // namespace internal

// One rewiring step. C0 is the small component of least distance (smallest
// index on ties), C1 its BFS parent, ab the connecting edge and x, y the
// forest neighbors of b. The step replaces C0, C1 by C0+ab+b?+C1^? and the
// remaining side, as dictated by the S-counts. Throws kInvariantBreach
// unless the potential strictly decreases.
inline ImproveOutcome ImproveStep(const BipartitePresentation& p, const B2Forest& f, int k) {
  ImproveOutcome out = internal::ProposeStep(p, f, k);
  if (!(out.after < out.before)) {
    throw Error(ErrorCode::kInvariantBreach,
                "potential did not decrease: " + out.before.ToString() + " -> " +
                    out.after.ToString());
  }
  return out;
}

struct TraceRecord {
  int step = 0;
  // "large", "case1", "case2" for rewiring steps; "leaf" for an audited leaf
  // deletion; "respan" when a component is re-spanned; "search" when the
  // final forest comes from exhaustive search.
  std::string label;
  int small_component = -1;
  int parent_component = -1;
  PotentialVector potential;
};

struct LocalSearchOptions {
  std::optional<long long> cap;       // improve steps; default 10 |A|^2
  long long search_budget = 2000000;  // nodes for the exhaustive fallback
  std::function<void(const TraceRecord&)> trace;
};

struct LocalSearchResult {
  BipartitePresentation presentation;
  B2Forest forest;
  int steps = 0;
  int leaf_deletions = 0;
  bool used_search = false;
};

namespace internal {

inline bool HasLeafOutsideS(const BipartitePresentation& p, const B2Forest& f) {
  return FirstLeafOutsideS(p, f) != -1;
}

// Limits for a forest spanning all of B whose components each meet S in
// between one and 2k-2 vertices.
inline ForestSearchLimits BalancedLimits(const BipartitePresentation& p, int k,
                                         long long budget) {
  ForestSearchLimits limits;
  for (int b = 0; b < p.b_count; ++b) limits.b_list.push_back(b);
  limits.a_allowed.assign(p.a_count, 1);
  limits.max_s = 2 * k - 2;
  limits.require_s_everywhere = true;
  limits.budget = budget;
  return limits;
}

// Exhaustive search for a final forest: every component meets S in at most
// 2k-2 and at least one vertex, preferring forests with no leaf outside S.
inline B2Forest SearchFinalForest(const BipartitePresentation& p, int k, long long budget) {
  ForestSearchLimits limits = BalancedLimits(p, k, budget);
  bool exhausted = false;
  for (bool strict : {true, false}) {
    limits.require_outside_degree = strict;
    exhausted = false;
    if (auto edges = SearchB2Edges(p, limits, &exhausted)) {
      return AnalyzeForest(p, std::move(*edges), k);
    }
  }
  if (exhausted) {
    throw Error(ErrorCode::kIterationCapExceeded, "forest search exceeded its budget");
  }
  throw Error(ErrorCode::kInvariantBreach, "no B2-forest with balanced components exists");
}

}  // namespace internal

// Starting from a minimized presentation, repeats: delete a forest leaf
// outside S if an exhaustive audit allows it, re-span components with such
// leaves, and apply one rewiring step, until no component is large.
//
// The rewiring strictly lowers the potential whenever every forest leaf lies
// in S. Leaf deletion does not always preserve the matroid, so leaves
// outside S can survive; if a step then fails to lower the potential, the
// final forest is found by exhaustive search instead.
inline LocalSearchResult RunLocalSearch(const BipartitePresentation& start, int k,
                                        const LocalSearchOptions& options = {}) {
  const Matroid expected = PresentedMatroid(start);
  const bool exhaustive = start.s_vertices.size() <= 12;
  LocalSearchResult result;
  result.presentation = start;
  result.forest = FindB2Forest(start, k);
  const long long cap =
      options.cap.value_or(10LL * start.a_count * static_cast<long long>(start.a_count));
  auto emit = [&](const std::string& label, int c0, int c1) {
    if (options.trace) {
      options.trace({result.steps, label, c0, c1, ComputePotential(result.forest, k)});
    }
  };

  if (internal::HasLeafOutsideS(result.presentation, result.forest)) {
    internal::ForestSearchLimits limits;
    for (int b = 0; b < start.b_count; ++b) limits.b_list.push_back(b);
    limits.a_allowed.assign(start.a_count, 1);
    bool exhausted = false;
    if (auto edges = internal::SearchB2Edges(start, limits, &exhausted)) {
      result.forest = AnalyzeForest(start, std::move(*edges), k);
      emit("respan", -1, -1);
    }
  }

  while (true) {
    const int leaf = internal::FirstLeafOutsideS(result.presentation, result.forest);
    if (leaf != -1 && exhaustive) {
      auto [p, edges] = internal::DeleteLeaf(result.presentation, result.forest, leaf);
      if (MaximumMatching(p.Graph()).size == p.b_count &&
          OracleEqual(expected, PresentedMatroid(p))) {
        result.presentation = std::move(p);
        result.forest = AnalyzeForest(result.presentation, std::move(edges), k);
        ++result.leaf_deletions;
        emit("leaf", -1, -1);
        continue;
      }
    }
    if (leaf != -1 && internal::RespanComponents(result.presentation, result.forest, k)) {
      emit("respan", -1, -1);
    }
    if (result.forest.LargeCount(k) == 0) {
      if (internal::HasLeafOutsideS(result.presentation, result.forest)) {
        // Balanced already; look for a balanced forest with leaves in S.
        internal::ForestSearchLimits limits =
            internal::BalancedLimits(result.presentation, k, options.search_budget);
        bool exhausted = false;
        if (auto edges = internal::SearchB2Edges(result.presentation, limits, &exhausted)) {
          result.forest = AnalyzeForest(result.presentation, std::move(*edges), k);
          result.used_search = true;
          emit("search", -1, -1);
        }
      }
      return result;
    }
    if (result.steps >= cap) {
      throw Error(ErrorCode::kIterationCapExceeded,
                  "local search exceeded " + std::to_string(cap) + " steps");
    }
    ImproveOutcome step = internal::ProposeStep(result.presentation, result.forest, k);
    if (!(step.after < step.before)) {
      result.forest = internal::SearchFinalForest(result.presentation, k, options.search_budget);
      result.used_search = true;
      emit("search", -1, -1);
      return result;
    }
    ++result.steps;
    result.forest = std::move(step.forest);
    emit(step.label, step.small_component, step.parent_component);
  }
}

// Full pipeline on the gammoid of (d, sources, sinks); element i is the
// i-th smallest sink.
inline ReductionResult ReduceGammoid(const Digraph& d, const ElementSet& sources,
                                     const ElementSet& sinks,
                                     const LocalSearchOptions& options = {}) {
  const Matroid m = GammoidMatroid(d, sources, sinks);
  const int n = m.size();
  const int k = ColoringNumber(m).k;
  ReductionResult result;
  result.provenance = "gammoid";
  result.rank_preserving_claimed = true;
  if (k <= 1) {
    std::vector<ElementSet> singletons;
    for (int e = 0; e < n; ++e) singletons.push_back(ElementSet::Of({e}));
    result.partition = PartitionIntoClasses::FromSets(n, std::move(singletons));
    result.claimed_chi_bound = k;
    return result;
  }
  const BipartitePresentation minimized = MinimizePresentation(DualizeGammoid(d, sources, sinks));
  const LocalSearchResult search = RunLocalSearch(minimized, k, options);
  std::vector<ElementSet> classes;
  for (const auto& c : search.forest.components) {
    ElementSet cls;
    for (int a : c.a_vertices) {
      const int e = search.presentation.ElementOfA(a);
      if (e >= 0) cls.Insert(e);
    }
    if (cls.Empty()) {
      throw Error(ErrorCode::kInvariantBreach, "forest component without S-vertices");
    }
    classes.push_back(cls);
  }
  result.partition = PartitionIntoClasses::FromSets(n, std::move(classes));
  result.claimed_chi_bound = 2 * k - 2;
  return result;
}

// Whether G has k matchings of size |B| covering each S-vertex at most k-1
// times: k disjoint bases in the transversal matroid where each A-S vertex
// appears k times and each S-vertex k-1 times (parallel copies).
inline bool CheckKMatchings(const BipartitePresentation& p, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const ElementSet s_mask = p.SMask();
  std::vector<int> copies_from(p.a_count, 0);
  std::vector<std::vector<int>> copies(p.a_count);
  int left = 0;
  for (int a = 0; a < p.a_count; ++a) {
    const int count = s_mask.Contains(a) ? k - 1 : k;
    for (int c = 0; c < count; ++c) copies[a].push_back(left++);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : p.edges) {
    for (int copy : copies[a]) edges.emplace_back(copy, b);
  }
  const Matroid blown = TransversalMatroidUnchecked(BipartiteGraph(left, p.b_count, edges));
  if (blown.Rank() != p.b_count) return false;
  return HasKDisjointBases(blown, k).found;
}

}  // namespace matred

#endif  // MATRED_GAMMOID_REDUCER_HPP_

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

// Reductions of transversal, graphic and paving matroids to partition
// matroids, the cocircuit-peeling reduction, and truncation transfer.
//
// Every reducer returns a partition S_1, ..., S_q of the ground set such that
// picking one element from each class always gives an independent set of the
// source matroid (a weak map), together with the coloring bound it promises.

#ifndef MATRED_REDUCERS_HPP_
#define MATRED_REDUCERS_HPP_

#include <algorithm>
#include <cstdint>
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
#include "matred/zoo.hpp"

namespace matred {

struct ReductionResult {
  PartitionIntoClasses partition;
  int claimed_chi_bound = 0;
  bool rank_preserving_claimed = false;
  std::string provenance;
};

namespace internal {

// Exhaustive up to 16 elements, otherwise 4096 seeded random subsets.
inline bool OraclesAgree(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  if (a.size() <= 16) return OracleEqual(a, b);
  std::mt19937_64 rng(0x5eed);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 4096; ++trial) {
    ElementSet x;
    for (int e = 0; e < a.size(); ++e) {
      if (coin(rng)) x.Insert(e);
    }
    if (a.IsIndependent(x) != b.IsIndependent(x)) return false;
  }
  return true;
}

inline BipartiteGraph KeepRight(const BipartiteGraph& g, const ElementSet& keep) {
  std::vector<int> relabel(g.right(), -1);
  int next = 0;
  keep.ForEach([&](int b) { relabel[b] = next++; });
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) {
    if (relabel[b] >= 0) edges.emplace_back(a, relabel[b]);
  }
  return BipartiteGraph(g.left(), next, std::move(edges));
}

// Shrinks the right side to rank-many vertices without changing the
// transversal matroid, checking each candidate by oracle comparison.
inline BipartiteGraph ShrinkPresentation(const BipartiteGraph& g, const Matroid& m) {
  const int r = m.Rank();
  if (g.right() == r) return g;
  BipartiteMatching matching = MaximumMatching(g);
  ElementSet matched;
  for (int b = 0; b < g.right(); ++b) {
    if (matching.match_right[b] != -1) matched.Insert(b);
  }
  BipartiteGraph shrunk = KeepRight(g, matched);
  if (OraclesAgree(m, TransversalMatroidUnchecked(shrunk))) return shrunk;
  // Fallback: drop right vertices one at a time while the matroid survives.
  BipartiteGraph current = g;
  for (int b = current.right() - 1; b >= 0 && current.right() > r; --b) {
    BipartiteGraph candidate =
        KeepRight(current, ElementSet::Range(current.right()).Without(b));
    if (OraclesAgree(m, TransversalMatroidUnchecked(candidate))) current = candidate;
  }
  if (current.right() > r) {
    throw Error(ErrorCode::kPresentationNotReduced,
                "could not shrink the presentation to " + std::to_string(r) +
                    " right vertices");
  }
  return current;
}

inline std::vector<std::vector<int>> SplitRoundRobin(const std::vector<int>& elements,
                                                     int parts) {
  std::vector<std::vector<int>> out(parts);
  for (std::size_t i = 0; i < elements.size(); ++i) out[i % parts].push_back(elements[i]);
  std::erase_if(out, [](const auto& c) { return c.empty(); });
  return out;
}

inline ElementSet ToSet(const std::vector<int>& v) { return ElementSet::FromSpan(v); }

}  // namespace internal

// Transversal matroid of `g` (left part = ground set): one color class per
// optimal coloring, one matching per class, and class i of the output
// collects every element matched to right vertex t_i. Classes have at most
// chi(M) elements and the reduction preserves rank.
inline ReductionResult ReduceTransversal(const BipartiteGraph& input) {
  const Matroid m = TransversalMatroid(input);
  const BipartiteGraph g = internal::ShrinkPresentation(input, m);
  const int n = g.left();
  const ColoringResult coloring = ColoringNumber(m);

  // Make the first color class a basis so every right vertex gets used.
  std::vector<ElementSet> colors = coloring.certificate.classes();
  if (!colors.empty()) {
    ElementSet basis = colors[0];
    for (int e = 0; e < n; ++e) {
      if (!basis.Contains(e) && m.IsIndependent(basis.With(e))) basis.Insert(e);
    }
    for (auto& c : colors) c -= basis;
    colors[0] = basis;
    std::erase_if(colors, [](const ElementSet& c) { return c.Empty(); });
  }

  const ElementSet right = ElementSet::Range(g.right());
  std::vector<ElementSet> by_right(g.right());
  for (const auto& color : colors) {
    BipartiteMatching f = MaximumMatching(g, color, right);
    if (f.size != color.Count()) {
      throw Error(ErrorCode::kInvariantBreach, "color class is not matchable");
    }
    color.ForEach([&](int a) { by_right[f.match_left[a]].Insert(a); });
  }
  std::erase_if(by_right, [](const ElementSet& c) { return c.Empty(); });

  ReductionResult result;
  result.partition = PartitionIntoClasses::FromSets(n, std::move(by_right));
  result.claimed_chi_bound = coloring.k;
  result.rank_preserving_claimed = true;
  result.provenance = "transversal";
  return result;
}

// Graphic matroid: repeatedly delete a minimum cut of the first remaining
// component (by smallest vertex) that still has an edge. Each deletion splits
// one component in two, so the reduction preserves rank; a k-colorable graph
// always has a cut of size <= 2k-1.
inline ReductionResult ReduceGraphic(const Graph& g) {
  const Matroid m = GraphicMatroid(g);
  const int k = ColoringNumber(m).k;
  ElementSet remaining = ElementSet::Range(g.edge_count());
  std::vector<ElementSet> classes;
  while (!remaining.Empty()) {
    const std::vector<int> label = ComponentLabels(g, remaining);
    std::vector<int> counts(g.vertices, 0);
    for (int v = 0; v < g.vertices; ++v) ++counts[label[v]];
    int target = -1;
    for (int c = 0; c < g.vertices && target == -1; ++c) {
      if (counts[c] >= 2) target = c;
    }
    std::vector<int> component;
    for (int v = 0; v < g.vertices; ++v) {
      if (label[v] == target) component.push_back(v);
    }
    const std::vector<int> side = StoerWagnerMinCutSide(g, component, remaining);
    std::vector<char> in_side(g.vertices, 0);
    for (int v : side) in_side[v] = 1;
    ElementSet cut;
    remaining.ForEach([&](int e) {
      const auto& [u, v] = g.edges[e];
      if (label[u] == target && in_side[u] != in_side[v]) cut.Insert(e);
    });
    classes.push_back(cut);
    remaining -= cut;
  }
  ReductionResult result;
  result.partition = PartitionIntoClasses::FromSets(g.edge_count(), std::move(classes));
  result.claimed_chi_bound = std::max(0, 2 * k - 1);
  result.rank_preserving_claimed = true;
  result.provenance = "graphic";
  return result;
}

// Paving matroid of rank r: r-1 near-equal classes (element e goes to class
// e mod (r-1)). Any transversal has r-1 elements and is independent. Not
// rank preserving in general.
inline ReductionResult ReducePaving(const HyperplaneFamily& h) {
  h.Validate();
  const int k = PavingColoringNumber(h);
  std::vector<int> elements(h.ground_size);
  for (int e = 0; e < h.ground_size; ++e) elements[e] = e;
  ReductionResult result;
  result.partition = PartitionIntoClasses::FromClasses(
      h.ground_size, internal::SplitRoundRobin(elements, h.rank - 1));
  result.claimed_chi_bound = (h.rank * k + h.rank - 2) / (h.rank - 1);
  result.rank_preserving_claimed = false;
  result.provenance = "paving";
  return result;
}

// Rank-2 matroid: parallel classes T_1 >= ... >= T_q (size descending, then
// smallest id), S_1 = shortest prefix with |S_1| >= |S|/3, S_2 = the rest.
// Both classes have at most floor(4k/3) elements.
inline ReductionResult ReducePavingRank2(const Matroid& m) {
  m.RequireLoopless();
  const int n = m.size();
  if (m.Rank() != 2) {
    throw Error(ErrorCode::kRankNotTwo, "rank is " + std::to_string(m.Rank()));
  }
  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!m.IsIndependent(ElementSet::Of({a, b}))) uf.Union(a, b);
    }
  }
  std::vector<ElementSet> parallel(n);
  for (int e = 0; e < n; ++e) parallel[uf.Find(e)].Insert(e);
  std::erase_if(parallel, [](const ElementSet& c) { return c.Empty(); });
  if (parallel.size() < 2) {
    throw Error(ErrorCode::kSinglePartitionClass, "only one parallel class");
  }
  std::stable_sort(parallel.begin(), parallel.end(),
                   [](const ElementSet& a, const ElementSet& b) {
                     if (a.Count() != b.Count()) return a.Count() > b.Count();
                     return a.First() < b.First();
                   });
  ElementSet first;
  std::size_t i = 0;
  while (3 * first.Count() < n) first |= parallel[i++];
  const ElementSet second = ElementSet::Range(n) - first;
  const int k = ColoringNumber(m).k;
  ReductionResult result;
  result.partition = PartitionIntoClasses::FromSets(n, {first, second});
  result.claimed_chi_bound = 4 * k / 3;
  result.rank_preserving_claimed = true;
  result.provenance = "paving2";
  return result;
}

inline ReductionResult ReducePavingRank2(const HyperplaneFamily& h) {
  if (h.rank != 2) throw Error(ErrorCode::kRankNotTwo, "family rank is not 2");
  return ReducePavingRank2(PavingMatroid(h));
}

// Rank-3 paving matroid, rank preserving with at most 2k-1 per class.
//
// Case 1 (|S|/3 <= |H_1|/2 for the largest hyperplane): split H_1 into two
// near-equal classes and add S - H_1. Case 2: take the pivot s lying on the
// most hyperplanes (smallest id on ties), let H'_j = H_j - s over the
// hyperplanes through s (pairwise disjoint), size descending, and output
// {s}, T, S - T - s where T is the shortest prefix union reaching |S|/3, or,
// if all of them together stay below |S|/3, their union padded with the
// smallest remaining ids to floor(|S|/2) elements.
inline ReductionResult ReducePavingRank3(const HyperplaneFamily& h) {
  h.Validate();
  if (h.rank != 3) throw Error(ErrorCode::kRankNotThree, "family rank is not 3");
  const int n = h.ground_size;
  const ElementSet ground = ElementSet::Range(n);
  const int k = PavingColoringNumber(h);
  std::vector<ElementSet> sorted = h.hyperplanes;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.Count() > b.Count(); });

  ReductionResult result;
  result.claimed_chi_bound = 2 * k - 1;
  result.rank_preserving_claimed = true;
  if (!sorted.empty() && 2 * n <= 3 * sorted[0].Count()) {
    auto halves = internal::SplitRoundRobin(sorted[0].ToVector(), 2);
    std::vector<ElementSet> classes;
    for (const auto& half : halves) classes.push_back(internal::ToSet(half));
    classes.push_back(ground - sorted[0]);
    result.partition = PartitionIntoClasses::FromSets(n, std::move(classes));
    result.provenance = "paving3/case1";
    return result;
  }

  std::vector<int> through(n, 0);
  for (const auto& hp : sorted) hp.ForEach([&](int e) { ++through[e]; });
  const int pivot = static_cast<int>(
      std::max_element(through.begin(), through.end()) - through.begin());
  std::vector<ElementSet> reduced;
  for (const auto& hp : sorted) {
    if (hp.Contains(pivot)) reduced.push_back(hp.Without(pivot));
  }
  std::stable_sort(reduced.begin(), reduced.end(),
                   [](const ElementSet& a, const ElementSet& b) {
                     if (a.Count() != b.Count()) return a.Count() > b.Count();
                     return a.First() < b.First();
                   });
  int total = 0;
  ElementSet all_reduced;
  for (const auto& r : reduced) {
    total += r.Count();
    all_reduced |= r;
  }
  ElementSet t;
  if (3 * total < n) {
    t = all_reduced;
    for (int e = 0; e < n && t.Count() < n / 2; ++e) {
      if (e != pivot) t.Insert(e);
    }
  } else {
    // Smallest j with |H'_1| + ... + |H'_j| >= |S|/3.
    for (std::size_t j = 0; 3 * t.Count() < n; ++j) t |= reduced[j];
  }
  std::vector<ElementSet> classes{ElementSet::Of({pivot}), t, ground - t.With(pivot)};
  std::erase_if(classes, [](const ElementSet& c) { return c.Empty(); });
  result.partition = PartitionIntoClasses::FromSets(n, std::move(classes));
  result.provenance = "paving3/case2";
  return result;
}

// Minimum cocircuit (complement of a hyperplane) of `m`, smallest-first
// lexicographic among ties. |S| <= 14.
inline ElementSet MinimumCocircuit(const Matroid& m) {
  RequireGroundAtMost(m, 14, "cocircuit enumeration");
  const int n = m.size();
  const std::vector<char> indep = IndependenceTable(m);
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<std::int8_t> rank(limit);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (indep[mask]) {
      rank[mask] = static_cast<std::int8_t>(std::popcount(mask));
      continue;
    }
    std::int8_t best = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      best = std::max(best, rank[mask & ~(rest & -rest)]);
    }
    rank[mask] = best;
  }
  const std::uint64_t full = limit - 1;
  const int r = rank[full];
  std::optional<ElementSet> best;
  std::vector<int> best_vec;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (rank[mask] != r - 1) continue;
    bool flat = true;
    for (int e = 0; e < n && flat; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (!(mask & bit) && rank[mask | bit] == rank[mask]) flat = false;
    }
    if (!flat) continue;
    const ElementSet cocircuit = ElementSet::FromMask(full & ~mask);
    std::vector<int> v = cocircuit.ToVector();
    if (!best || v.size() < best_vec.size() ||
        (v.size() == best_vec.size() && v < best_vec)) {
      best = cocircuit;
      best_vec = std::move(v);
    }
  }
  if (!best) throw Error(ErrorCode::kInvalidArgument, "matroid of rank 0 has no cocircuit");
  return *best;
}

// Peels a minimum cocircuit of the remaining restriction until nothing is
// left. A circuit never meets a cocircuit in exactly one element, so the
// result is a weak map; each peel lowers the rank by one, so it is rank
// preserving. If `cut_bound` is given, every peeled cocircuit must respect it.
inline ReductionResult ReduceByCocircuits(const Matroid& m,
                                          std::optional<int> cut_bound = std::nullopt) {
  RequireGroundAtMost(m, 14, "reduce_by_cocircuits");
  m.RequireLoopless();
  ElementSet remaining = m.ground();
  std::vector<ElementSet> classes;
  int largest = 0;
  while (!remaining.Empty()) {
    const std::vector<int> ids = remaining.ToVector();
    const ElementSet local = MinimumCocircuit(Restrict(m, remaining));
    ElementSet cocircuit;
    local.ForEach([&](int e) { cocircuit.Insert(ids[e]); });
    if (cut_bound && cocircuit.Count() > *cut_bound) {
      throw Error(ErrorCode::kCutBoundExceeded,
                  "restriction has no cut of size <= " + std::to_string(*cut_bound));
    }
    largest = std::max(largest, cocircuit.Count());
    classes.push_back(cocircuit);
    remaining -= cocircuit;
  }
  ReductionResult result;
  result.partition = PartitionIntoClasses::FromSets(m.size(), std::move(classes));
  result.claimed_chi_bound = cut_bound ? *cut_bound : largest;
  result.rank_preserving_claimed = true;
  result.provenance = "cocircuit";
  return result;
}

// One truncation step: given a reduction N of M with chi(N) <= 2 chi(M),
// produce a reduction N' of the (r-1)-truncation M' with chi(N') <= 2 chi(M').
// N is returned unchanged if it has at most r-1 classes; otherwise its two
// smallest classes are merged.
inline ReductionResult ReduceTruncation(const Matroid& m, const ReductionResult& n,
                                        int target_rank) {
  const int r = m.Rank();
  if (target_rank != r - 1 || target_rank < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "single truncation step must target rank " + std::to_string(r - 1));
  }
  const int chi_m = ColoringNumber(m).k;
  if (n.partition.MaxClassSize() > 2 * chi_m) {
    throw Error(ErrorCode::kBoundViolated,
                "input reduction has chi " + std::to_string(n.partition.MaxClassSize()) +
                    " > 2 * " + std::to_string(chi_m));
  }
  const int chi_truncated = ColoringNumber(Truncate(m, target_rank)).k;
  ReductionResult out;
  out.claimed_chi_bound = 2 * chi_truncated;
  out.provenance = n.provenance + "+truncate";
  if (n.partition.class_count() <= target_rank) {
    out.partition = n.partition;
    out.rank_preserving_claimed = n.partition.class_count() == target_rank;
    return out;
  }
  std::vector<ElementSet> classes = n.partition.classes();
  std::stable_sort(classes.begin(), classes.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.Count() > b.Count(); });
  ElementSet merged = classes[classes.size() - 2] | classes.back();
  classes.pop_back();
  classes.back() = merged;
  out.partition = PartitionIntoClasses::FromSets(m.size(), std::move(classes));
  out.rank_preserving_claimed = out.partition.class_count() == target_rank;
  return out;
}

struct TruncationStep {
  int rank = 0;
  Matroid truncated;
  ReductionResult reduction;
};

// Applies ReduceTruncation for ranks r-1, r-2, ..., target_rank.
inline std::vector<TruncationStep> ReduceTruncationChain(const Matroid& m,
                                                         const ReductionResult& n,
                                                         int target_rank) {
  std::vector<TruncationStep> steps;
  Matroid current = m;
  ReductionResult reduction = n;
  for (int rank = m.Rank() - 1; rank >= target_rank; --rank) {
    reduction = ReduceTruncation(current, reduction, rank);
    current = Truncate(current, rank);
    steps.push_back({rank, current, reduction});
  }
  return steps;
}

}  // namespace matred

#endif  // MATRED_REDUCERS_HPP_

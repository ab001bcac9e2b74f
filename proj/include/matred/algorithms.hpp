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

// Exact algorithms on independence oracles: axiom audit, matroid union
// (partitioning), matroid intersection and small-scale enumeration.

#ifndef MATRED_ALGORITHMS_HPP_
#define MATRED_ALGORITHMS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "matred/element_set.hpp"
#include "matred/error.hpp"
#include "matred/matroid.hpp"

namespace matred {

inline void RequireGroundAtMost(const Matroid& m, int limit, const char* what) {
  if (m.size() > limit) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                std::string(what) + " needs |S| <= " + std::to_string(limit) +
                    ", got " + std::to_string(m.size()));
  }
}

// Independence of every subset, indexed by mask. |S| <= 24.
inline std::vector<char> IndependenceTable(const Matroid& m) {
  RequireGroundAtMost(m, 24, "independence table");
  const std::uint64_t limit = std::uint64_t{1} << m.size();
  std::vector<char> table(limit);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    table[mask] = m.IsIndependent(ElementSet::FromMask(mask)) ? 1 : 0;
  }
  return table;
}

// Exhaustive check of (I1), (I2), (I3) and looplessness. |S| <= 14.
//
// (I3) is checked in its closure form: for every independent X, the set
// Z(X) = X + {e : X+e dependent} must have rank |X|. This is equivalent to
// the pairwise exchange axiom and costs O(2^n * n) instead of O(4^n).
inline bool AuditAxioms(const Matroid& m) {
  RequireGroundAtMost(m, 14, "audit_axioms");
  const int n = m.size();
  const std::vector<char> indep = IndependenceTable(m);
  if (!indep[0]) return false;
  for (int e = 0; e < n; ++e) {
    if (!indep[std::uint64_t{1} << e]) return false;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (!indep[mask]) continue;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      if (!indep[mask & ~(rest & -rest)]) return false;
    }
  }
  // Largest independent subset size of every set, by DP over masks.
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
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!indep[mask]) continue;
    std::uint64_t span = mask;
    for (int e = 0; e < n; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (!(mask & bit) && !indep[mask | bit]) span |= bit;
    }
    if (rank[span] != std::popcount(mask)) return false;
  }
  return true;
}

// Maximal independent sets. |S| <= 14.
inline std::vector<ElementSet> Bases(const Matroid& m) {
  RequireGroundAtMost(m, 14, "bases");
  const std::vector<char> indep = IndependenceTable(m);
  const int r = m.Rank();
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < indep.size(); ++mask) {
    if (indep[mask] && std::popcount(mask) == r) {
      out.push_back(ElementSet::FromMask(mask));
    }
  }
  return out;
}

// Minimal dependent sets. |S| <= 14.
inline std::vector<ElementSet> Circuits(const Matroid& m) {
  RequireGroundAtMost(m, 14, "circuits");
  const std::vector<char> indep = IndependenceTable(m);
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < indep.size(); ++mask) {
    if (indep[mask]) continue;
    bool minimal = true;
    for (std::uint64_t rest = mask; rest != 0 && minimal; rest &= rest - 1) {
      minimal = indep[mask & ~(rest & -rest)] != 0;
    }
    if (minimal) out.push_back(ElementSet::FromMask(mask));
  }
  return out;
}

// Matroid union of `copies` copies of one matroid, grown by augmenting paths
// in the exchange digraph. Element e lives in class color_[e] or nowhere.
// Search order is ascending class index and ascending element id.
class MatroidPartitioner {
 public:
  MatroidPartitioner(const Matroid& m, int copies)
      : m_(m), classes_(copies), color_(m.size(), -1) {}

  void AddCopy() { classes_.emplace_back(); }

  int copies() const { return static_cast<int>(classes_.size()); }
  const std::vector<ElementSet>& classes() const { return classes_; }

  int CoveredCount() const {
    int total = 0;
    for (const auto& c : classes_) total += c.Count();
    return total;
  }

  // Tries to add `x` to the union; on success some classes are rearranged.
  bool Insert(int x) {
    if (color_[x] != -1) return true;
    const int n = m_.size();
    std::vector<int> parent(n, -2);
    std::deque<int> queue{x};
    parent[x] = -1;
    const int k = copies();
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      for (int j = 0; j < k; ++j) {
        if (j == color_[y]) continue;
        if (m_.IsIndependent(classes_[j].With(y))) {
          Augment(parent, y, j);
          return true;
        }
      }
      for (int j = 0; j < k; ++j) {
        if (j == color_[y]) continue;
        const ElementSet with_y = classes_[j].With(y);
        classes_[j].ForEach([&](int z) {
          if (parent[z] != -2) return;
          if (m_.IsIndependent(with_y.Without(z))) {
            parent[z] = y;
            queue.push_back(z);
          }
        });
      }
    }
    return false;
  }

 private:
  void Augment(const std::vector<int>& parent, int last, int target) {
    std::vector<int> path;
    for (int v = last; v != -1; v = parent[v]) path.push_back(v);
    // path = [y_m, ..., y_0]; y_m moves to `target`, y_{i-1} takes y_i's slot.
    std::vector<int> new_color(path.size());
    new_color[0] = target;
    for (std::size_t i = 1; i < path.size(); ++i) new_color[i] = color_[path[i - 1]];
    for (std::size_t i = 0; i < path.size(); ++i) {
      const int e = path[i];
      if (color_[e] != -1) classes_[color_[e]].Erase(e);
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      color_[path[i]] = new_color[i];
      classes_[new_color[i]].Insert(path[i]);
    }
  }

  Matroid m_;
  std::vector<ElementSet> classes_;
  std::vector<int> color_;
};

struct ColoringResult {
  int k = 0;
  PartitionIntoClasses certificate;
};

// Minimum number of independent sets covering S, with a certificate.
// Starts from the lower bound ceil(|S| / r(S)) and adds a copy to the union
// whenever an element cannot be absorbed; each such failure proves the
// prefix of elements seen so far needs one more class.
inline ColoringResult ColoringNumber(const Matroid& m) {
  if (m.size() == 0) return {0, PartitionIntoClasses::FromSets(0, {})};
  m.RequireLoopless();
  const int n = m.size();
  const int r = m.Rank();
  MatroidPartitioner partitioner(m, (n + r - 1) / r);
  for (int e = 0; e < n; ++e) {
    while (!partitioner.Insert(e)) partitioner.AddCopy();
  }
  std::vector<ElementSet> classes = partitioner.classes();
  std::erase_if(classes, [](const ElementSet& c) { return c.Empty(); });
  ColoringResult result;
  result.k = static_cast<int>(classes.size());
  result.certificate = PartitionIntoClasses::FromSets(n, std::move(classes));
  return result;
}

// Minimum k by exhaustive backtracking over class assignments. |S| <= 12.
inline int ColoringNumberBruteforce(const Matroid& m) {
  RequireGroundAtMost(m, 12, "coloring_number_bruteforce");
  const int n = m.size();
  if (n == 0) return 0;
  m.RequireLoopless();
  const std::vector<char> indep = IndependenceTable(m);
  std::vector<std::uint64_t> classes;
  auto assign = [&](auto&& self, int e, int k) -> bool {
    if (e == n) return true;
    const std::uint64_t bit = std::uint64_t{1} << e;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!indep[classes[c] | bit]) continue;
      classes[c] |= bit;
      if (self(self, e + 1, k)) return true;
      classes[c] &= ~bit;
    }
    if (static_cast<int>(classes.size()) < k) {
      classes.push_back(bit);
      if (self(self, e + 1, k)) return true;
      classes.pop_back();
    }
    return false;
  };
  for (int k = 1;; ++k) {
    classes.clear();
    if (assign(assign, 0, k)) return k;
  }
}

struct DisjointBasesResult {
  bool found = false;
  std::vector<ElementSet> bases;
};

// k pairwise disjoint bases exist iff the union of k copies reaches k*r(S).
inline DisjointBasesResult HasKDisjointBases(const Matroid& m, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const int r = m.Rank();
  MatroidPartitioner partitioner(m, k);
  for (int e = 0; e < m.size(); ++e) partitioner.Insert(e);
  DisjointBasesResult result;
  result.found = partitioner.CoveredCount() == k * r;
  if (result.found) {
    result.bases = partitioner.classes();
  }
  return result;
}

struct IntersectionResult {
  ElementSet set;
  int size = 0;
};

// Maximum common independent set by shortest augmenting paths in the
// exchange graph. For y in I and x outside I: arc y->x if I-y+x is
// independent in M1, arc x->y if I-y+x is independent in M2. Paths run from
// {x : I+x in M1} to {x : I+x in M2}.
inline IntersectionResult MatroidIntersectionMax(const Matroid& m1,
                                                 const Matroid& m2) {
  if (m1.size() != m2.size()) {
    throw Error(ErrorCode::kInvalidArgument, "ground sets differ");
  }
  const int n = m1.size();
  ElementSet current;
  while (true) {
    std::vector<int> parent(n, -2);
    std::deque<int> queue;
    for (int x = 0; x < n; ++x) {
      if (!current.Contains(x) && m1.IsIndependent(current.With(x))) {
        parent[x] = -1;
        queue.push_back(x);
      }
    }
    int sink = -1;
    while (!queue.empty() && sink == -1) {
      const int v = queue.front();
      queue.pop_front();
      if (!current.Contains(v)) {
        if (m2.IsIndependent(current.With(v))) {
          sink = v;
          break;
        }
        // x -> y arcs: I - y + x independent in M2.
        current.ForEach([&](int y) {
          if (parent[y] != -2) return;
          if (m2.IsIndependent(current.Without(y).With(v))) {
            parent[y] = v;
            queue.push_back(y);
          }
        });
      } else {
        // y -> x arcs: I - y + x independent in M1.
        const ElementSet without = current.Without(v);
        for (int x = 0; x < n; ++x) {
          if (current.Contains(x) || parent[x] != -2) continue;
          if (m1.IsIndependent(without.With(x))) {
            parent[x] = v;
            queue.push_back(x);
          }
        }
      }
    }
    if (sink == -1) break;
    for (int v = sink; v != -1; v = parent[v]) {
      if (current.Contains(v)) {
        current.Erase(v);
      } else {
        current.Insert(v);
      }
    }
  }
  return {current, current.Count()};
}

}  // namespace matred

#endif  // MATRED_ALGORITHMS_HPP_

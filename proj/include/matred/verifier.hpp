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

#ifndef MATRED_VERIFIER_HPP_
#define MATRED_VERIFIER_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "matred/algorithms.hpp"
#include "matred/element_set.hpp"
#include "matred/error.hpp"
#include "matred/graph.hpp"
#include "matred/matroid.hpp"
#include "matred/zoo.hpp"

namespace matred {

enum class VerificationMethod { kExhaustive, kSampled };

struct VerificationReport {
  bool weak_map = false;
  std::optional<ElementSet> witness;  // a dependent transversal
  bool rank_preserving = false;
  int chi_source = 0;
  int chi_reduction = 0;
  bool bound_satisfied = true;
  VerificationMethod method = VerificationMethod::kExhaustive;
  long long trials = 0;  // transversals examined

  // A found violation is always certain; a clean sweep only when exhaustive.
  bool certified() const { return !weak_map || method == VerificationMethod::kExhaustive; }

  std::string MethodString() const {
    return method == VerificationMethod::kExhaustive
               ? "exhaustive"
               : "sampled(" + std::to_string(trials) + ")";
  }
};

struct WeakMapOptions {
  long long exhaustive_limit = 1000000;
  long long trials = 100000;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::optional<int> chi_bound;  // checked against the largest class
};

namespace internal {

inline long long TransversalCount(const PartitionIntoClasses& n, long long cap) {
  long long total = 1;
  for (const auto& c : n.classes()) {
    total *= c.Count();
    if (total > cap) return cap + 1;
  }
  return total;
}

// Depth-first over one element per class with prefix pruning: a dependent
// prefix extends to a dependent full transversal.
class TransversalSearch {
 public:
  TransversalSearch(const Matroid& m, const std::vector<std::vector<int>>& classes)
      : m_(m), classes_(classes) {}

  // Searches transversals whose first choice is classes[0][first].
  std::optional<ElementSet> FromFirst(int first, const std::atomic<bool>& stop,
                                      long long* visited) const {
    ElementSet x = ElementSet::Of({classes_[0][first]});
    if (!m_.IsIndependent(x)) return Complete(x, 1);
    return Descend(x, 1, stop, visited);
  }

 private:
  std::optional<ElementSet> Descend(const ElementSet& x, std::size_t depth,
                                    const std::atomic<bool>& stop, long long* visited) const {
    if (depth == classes_.size()) {
      ++*visited;
      return std::nullopt;
    }
    if (stop.load(std::memory_order_relaxed)) return std::nullopt;
    for (int e : classes_[depth]) {
      const ElementSet next = x.With(e);
      if (!m_.IsIndependent(next)) return Complete(next, depth + 1);
      if (auto w = Descend(next, depth + 1, stop, visited)) return w;
    }
    return std::nullopt;
  }

  ElementSet Complete(ElementSet x, std::size_t depth) const {
    for (; depth < classes_.size(); ++depth) x.Insert(classes_[depth][0]);
    return x;
  }

  const Matroid& m_;
  const std::vector<std::vector<int>>& classes_;
};

}  // namespace internal

// Checks that every transversal of `n` is independent in `m`, plus rank
// preservation and both coloring numbers.
inline VerificationReport IsWeakMap(const PartitionIntoClasses& n, const Matroid& m,
                                    const WeakMapOptions& options = {}) {
  if (n.ground_size() != m.size()) {
    throw Error(ErrorCode::kGroundSetMismatch, "partition and matroid ground sets differ");
  }
  VerificationReport report;
  report.chi_source = ColoringNumber(m).k;
  report.chi_reduction = n.MaxClassSize();
  report.bound_satisfied = !options.chi_bound || report.chi_reduction <= *options.chi_bound;
  const int q = n.class_count();
  report.rank_preserving =
      q == m.Rank() && MatroidIntersectionMax(m, PartitionMatroid(n)).size == q;

  const std::vector<std::vector<int>> classes = n.ToVectors();
  if (classes.empty()) {
    report.weak_map = true;
    return report;
  }
  const long long total = internal::TransversalCount(n, options.exhaustive_limit);
  if (total <= options.exhaustive_limit) {
    report.method = VerificationMethod::kExhaustive;
    const internal::TransversalSearch search(m, classes);
    const int firsts = static_cast<int>(classes[0].size());
    const int jobs = std::clamp(options.jobs, 1, firsts);
    std::atomic<bool> stop{false};
    std::atomic<int> next{0};
    std::atomic<long long> visited{0};
    std::mutex mu;
    std::optional<ElementSet> witness;
    auto worker = [&] {
      long long local = 0;
      for (int i = next++; i < firsts && !stop; i = next++) {
        if (auto w = search.FromFirst(i, stop, &local)) {
          std::lock_guard<std::mutex> lock(mu);
          if (!witness) witness = w;
          stop = true;
        }
      }
      visited += local;
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }
    report.trials = visited;
    report.witness = witness;
    report.weak_map = !witness;
    return report;
  }

  report.method = VerificationMethod::kSampled;
  std::mt19937_64 rng(options.seed);
  for (long long t = 0; t < options.trials; ++t) {
    ElementSet x;
    for (const auto& c : classes) {
      x.Insert(c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)]);
    }
    ++report.trials;
    if (!m.IsIndependent(x)) {
      report.witness = x;
      break;
    }
  }
  report.weak_map = !report.witness;
  return report;
}

// Minimum, over all set partitions of S whose partition matroid is a weak
// map of M, of the largest class. With `rank_preserving`, only partitions
// into exactly r(S) classes count. Restricted growth strings, iterative
// deepening on the class-size bound. |S| <= 12.
inline int MinPartitionReductionChi(const Matroid& m, bool rank_preserving = false) {
  RequireGroundAtMost(m, 12, "min_partition_reduction_chi");
  m.RequireLoopless();
  const int n = m.size();
  if (n == 0) return 0;
  const std::vector<char> indep = IndependenceTable(m);
  const int r = m.Rank();
  std::vector<std::uint64_t> classes;

  // All transversals through `e` in class j, over the classes so far.
  auto transversals_ok = [&](int e, std::size_t j) {
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t x) -> bool {
      if (!indep[x]) return false;
      if (i == classes.size()) return true;
      if (i == j) return self(self, i + 1, x);
      for (std::uint64_t rest = classes[i]; rest; rest &= rest - 1) {
        if (!self(self, i + 1, x | (rest & -rest))) return false;
      }
      return true;
    };
    return rec(rec, 0, std::uint64_t{1} << e);
  };

  auto search = [&](auto&& self, int e, int bound) -> bool {
    if (e == n) return !rank_preserving || static_cast<int>(classes.size()) == r;
    const std::uint64_t bit = std::uint64_t{1} << e;
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (std::popcount(classes[j]) >= bound || !transversals_ok(e, j)) continue;
      classes[j] |= bit;
      if (self(self, e + 1, bound)) return true;
      classes[j] &= ~bit;
    }
    if (static_cast<int>(classes.size()) < r) {
      classes.push_back(0);
      if (transversals_ok(e, classes.size() - 1)) {
        classes.back() = bit;
        if (self(self, e + 1, bound)) return true;
      }
      classes.pop_back();
    }
    return false;
  };

  for (int bound = (n + r - 1) / r; bound <= n; ++bound) {
    classes.clear();
    if (search(search, 0, bound)) return bound;
  }
  // Unreachable without the rank-preserving restriction: one class works.
  throw Error(ErrorCode::kInvariantBreach, "no rank-preserving partition reduction");
}

// Coloring of the edges of K_n, given as a partition of CompleteGraph(n)'s
// edge ids. True iff some color class spans a connected subgraph on all
// vertices. Throws kNotGallai on a rainbow triangle.
inline bool GallaiCheck(int vertices, const PartitionIntoClasses& coloring) {
  const Graph g = CompleteGraph(vertices);
  if (coloring.ground_size() != g.edge_count()) {
    throw Error(ErrorCode::kGroundSetMismatch, "coloring does not cover the edges of K_n");
  }
  std::vector<std::vector<int>> color(vertices, std::vector<int>(vertices, -1));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    color[u][v] = color[v][u] = coloring.ClassOf(e);
  }
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) {
      for (int c = b + 1; c < vertices; ++c) {
        const int x = color[a][b], y = color[b][c], z = color[a][c];
        if (x != y && y != z && x != z) {
          throw Error(ErrorCode::kNotGallai, "rainbow triangle " + std::to_string(a) + "," +
                                                 std::to_string(b) + "," + std::to_string(c));
        }
      }
    }
  }
  for (const ElementSet& cls : coloring.classes()) {
    const std::vector<int> label = ComponentLabels(g, cls);
    if (std::all_of(label.begin(), label.end(), [](int l) { return l == 0; })) return true;
  }
  return vertices <= 1;
}

enum class TrichotomyCase { kEmptyClass, kSingletonClass, kLineComplement, kViolation };

inline const char* TrichotomyCaseName(TrichotomyCase c) {
  switch (c) {
    case TrichotomyCase::kEmptyClass: return "empty-class";
    case TrichotomyCase::kSingletonClass: return "singleton-class";
    case TrichotomyCase::kLineComplement: return "line-complement";
    case TrichotomyCase::kViolation: return "violation";
  }
  return "unknown";
}

struct TrichotomyResult {
  TrichotomyCase which = TrichotomyCase::kViolation;
  int color = -1;  // the class witnessing the case
  int line = -1;   // for kLineComplement
};

// `colors[p]` in {0,1,2} for each point. Throws kLineWithThreeColors if
// some line meets all three colors.
inline TrichotomyResult CheckProjectiveTrichotomy(const ProjectivePlane& plane,
                                                  const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != plane.point_count) {
    throw Error(ErrorCode::kGroundSetMismatch, "one color per point expected");
  }
  std::vector<ElementSet> cls(3);
  for (int p = 0; p < plane.point_count; ++p) {
    if (colors[p] < 0 || colors[p] > 2) {
      throw Error(ErrorCode::kInvalidArgument, "colors must be 0, 1 or 2");
    }
    cls[colors[p]].Insert(p);
  }
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    int seen = 0;
    for (int c = 0; c < 3; ++c) seen += plane.lines[l].Intersects(cls[c]) ? 1 : 0;
    if (seen == 3) {
      throw Error(ErrorCode::kLineWithThreeColors, "line " + std::to_string(l));
    }
  }
  for (int c = 0; c < 3; ++c) {
    if (cls[c].Empty()) return {TrichotomyCase::kEmptyClass, c, -1};
  }
  for (int c = 0; c < 3; ++c) {
    if (cls[c].Count() == 1) return {TrichotomyCase::kSingletonClass, c, -1};
  }
  const ElementSet points = ElementSet::Range(plane.point_count);
  for (int c = 0; c < 3; ++c) {
    for (std::size_t l = 0; l < plane.lines.size(); ++l) {
      if (cls[c] == (points - plane.lines[l])) {
        return {TrichotomyCase::kLineComplement, c, static_cast<int>(l)};
      }
    }
  }
  return {};
}

// For every ordered pair of bases, tries all bijections B1 -> B2 against
// all 2^r swaps. |S| <= 10, r <= 5.
inline bool IsStronglyBaseOrderable(const Matroid& m) {
  if (m.size() > 10 || m.Rank() > 5) {
    throw Error(ErrorCode::kTooLarge, "strong base orderability needs |S| <= 10 and r <= 5");
  }
  const std::vector<char> indep = IndependenceTable(m);
  const int r = m.Rank();
  std::vector<std::uint64_t> bases;
  for (std::uint64_t mask = 0; mask < indep.size(); ++mask) {
    if (indep[mask] && std::popcount(mask) == r) bases.push_back(mask);
  }
  auto bits = [](std::uint64_t mask) {
    std::vector<int> out;
    for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
  };
  for (std::uint64_t b1 : bases) {
    const std::vector<int> x = bits(b1);
    for (std::uint64_t b2 : bases) {
      std::vector<int> y = bits(b2);
      bool found = false;
      do {
        bool ok = true;
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << r) && ok; ++sub) {
          std::uint64_t swapped = b1;
          for (int i = 0; i < r; ++i) {
            if (sub >> i & 1) swapped &= ~(std::uint64_t{1} << x[i]);
          }
          for (int i = 0; i < r; ++i) {
            if (sub >> i & 1) swapped |= std::uint64_t{1} << y[i];
          }
          ok = std::popcount(swapped) == r && indep[swapped];
        }
        found = ok;
      } while (!found && std::next_permutation(y.begin(), y.end()));
      if (!found) return false;
    }
  }
  return true;
}

struct ListColoringResult {
  bool found = false;
  std::vector<int> coloring;  // color per element
};

// Searches colorings with coloring[s] in lists[s] in which every color class
// is independent in every matroid. Requires prod |L_s| <= 1e7.
inline ListColoringResult ListColorable(const std::vector<Matroid>& matroids,
                                        const std::vector<std::vector<int>>& lists) {
  const int n = static_cast<int>(lists.size());
  for (const Matroid& m : matroids) {
    if (m.size() != n) throw Error(ErrorCode::kGroundSetMismatch, "one list per element expected");
  }
  double space = 1;
  for (const auto& l : lists) space *= static_cast<double>(l.size());
  if (space > 1e7) {
    throw Error(ErrorCode::kSearchSpaceTooLarge, "list coloring space exceeds 1e7");
  }
  ListColoringResult result;
  result.coloring.assign(n, -1);
  auto fits = [&](int e, int color) {
    ElementSet cls = ElementSet::Of({e});
    for (int f = 0; f < e; ++f) {
      if (result.coloring[f] == color) cls.Insert(f);
    }
    return std::all_of(matroids.begin(), matroids.end(),
                       [&](const Matroid& m) { return m.IsIndependent(cls); });
  };
  auto search = [&](auto&& self, int e) -> bool {
    if (e == n) return true;
    for (int color : lists[e]) {
      if (!fits(e, color)) continue;
      result.coloring[e] = color;
      if (self(self, e + 1)) return true;
    }
    result.coloring[e] = -1;
    return false;
  };
  result.found = search(search, 0);
  if (!result.found) result.coloring.clear();
  return result;
}

struct CommonPartitionResult {
  bool found = false;
  std::optional<PartitionIntoClasses> partition;
};

// Exhaustive search for a partition into at most k sets independent in all
// the given matroids. |S| <= 10.
inline CommonPartitionResult CommonIndependentPartition(const std::vector<Matroid>& matroids,
                                                        int k) {
  if (matroids.empty()) throw Error(ErrorCode::kInvalidArgument, "no matroids given");
  const int n = matroids[0].size();
  for (const Matroid& m : matroids) {
    if (m.size() != n) throw Error(ErrorCode::kGroundSetMismatch, "ground sets differ");
    RequireGroundAtMost(m, 10, "common_independent_partition");
  }
  std::vector<char> common(std::size_t{1} << n, 1);
  for (const Matroid& m : matroids) {
    const std::vector<char> t = IndependenceTable(m);
    for (std::size_t i = 0; i < t.size(); ++i) common[i] = common[i] && t[i];
  }
  std::vector<std::uint64_t> classes;
  auto search = [&](auto&& self, int e) -> bool {
    if (e == n) return true;
    const std::uint64_t bit = std::uint64_t{1} << e;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (!common[classes[i] | bit]) continue;
      classes[i] |= bit;
      if (self(self, e + 1)) return true;
      classes[i] &= ~bit;
    }
    if (static_cast<int>(classes.size()) < k && common[bit]) {
      classes.push_back(bit);
      if (self(self, e + 1)) return true;
      classes.pop_back();
    }
    return false;
  };
  CommonPartitionResult result;
  result.found = search(search, 0);
  if (result.found) {
    std::vector<ElementSet> sets;
    for (std::uint64_t c : classes) sets.push_back(ElementSet::FromMask(c));
    result.partition = PartitionIntoClasses::FromSets(n, std::move(sets));
  }
  return result;
}

inline CommonPartitionResult CommonIndependentPartition(const Matroid& m1, const Matroid& m2,
                                                        int k) {
  return CommonIndependentPartition(std::vector<Matroid>{m1, m2}, k);
}

}  // namespace matred

#endif  // MATRED_VERIFIER_HPP_

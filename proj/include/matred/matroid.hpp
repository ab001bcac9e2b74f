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

#ifndef MATRED_MATROID_HPP_
#define MATRED_MATROID_HPP_

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matred/element_set.hpp"
#include "matred/error.hpp"

namespace matred {

using IndependencePredicate = std::function<bool(const ElementSet&)>;
using RankFunction = std::function<int(const ElementSet&)>;

// An independence oracle over the ground set {0..size-1}.
//
// Matroid is a cheap-to-copy value: the oracle itself is shared and
// immutable, so concurrent readers may query one instance freely. The
// predicate must be a pure function of the queried set.
class Matroid {
 public:
  // The empty matroid.
  Matroid() : Matroid(0, [](const ElementSet& x) { return x.Empty(); }, nullptr) {}

  // Builds an oracle without checking for loops. Derived constructions
  // (dual, restriction of a dual, ...) legitimately pass through matroids
  // with loops; concrete classes go through FromPredicate instead.
  static Matroid Unchecked(int size, IndependencePredicate independent,
                           RankFunction rank = nullptr) {
    return Matroid(size, std::move(independent), std::move(rank));
  }

  // Builds an oracle and rejects loops.
  static Matroid FromPredicate(int size, IndependencePredicate independent,
                               RankFunction rank = nullptr) {
    Matroid m(size, std::move(independent), std::move(rank));
    m.RequireLoopless();
    return m;
  }

  int size() const { return size_; }
  ElementSet ground() const { return ElementSet::Range(size_); }

  bool IsIndependent(const ElementSet& x) const { return (*independent_)(x); }

  // Greedy by ascending element id unless the class supplied a rank formula.
  int Rank(const ElementSet& x) const {
    if (rank_) return (*rank_)(x);
    return GreedyRank(x);
  }

  int Rank() const { return Rank(ground()); }

  // Independent subset of `x` chosen greedily in ascending id order.
  ElementSet GreedyBasis(const ElementSet& x) const {
    ElementSet basis;
    x.ForEach([&](int e) {
      ElementSet candidate = basis.With(e);
      if (IsIndependent(candidate)) basis = candidate;
    });
    return basis;
  }

  int GreedyRank(const ElementSet& x) const { return GreedyBasis(x).Count(); }

  std::optional<int> FindLoop() const {
    for (int e = 0; e < size_; ++e) {
      if (!IsIndependent(ElementSet::Of({e}))) return e;
    }
    return std::nullopt;
  }

  void RequireLoopless() const {
    if (auto loop = FindLoop()) {
      throw Error(ErrorCode::kLoopPresent,
                  "element " + std::to_string(*loop) + " is a loop");
    }
  }

 private:
  Matroid(int size, IndependencePredicate independent, RankFunction rank)
      : size_(size),
        independent_(std::make_shared<const IndependencePredicate>(
            std::move(independent))),
        rank_(rank ? std::make_shared<const RankFunction>(std::move(rank))
                   : nullptr) {
    if (size_ < 0 || size_ > ElementSet::kCapacity) {
      throw Error(ErrorCode::kGroundSetTooLarge,
                  "ground set of size " + std::to_string(size_));
    }
  }

  int size_;
  std::shared_ptr<const IndependencePredicate> independent_;
  std::shared_ptr<const RankFunction> rank_;
};

// Ordered list of disjoint nonempty classes covering {0..n-1}. Doubles as
// a partition matroid (one element per class) and as a coloring.
class PartitionIntoClasses {
 public:
  PartitionIntoClasses() = default;

  static PartitionIntoClasses FromSets(int ground_size,
                                       std::vector<ElementSet> classes) {
    PartitionIntoClasses p;
    p.ground_size_ = ground_size;
    p.classes_ = std::move(classes);
    p.Validate();
    return p;
  }

  static PartitionIntoClasses FromClasses(
      int ground_size, const std::vector<std::vector<int>>& classes) {
    std::vector<ElementSet> sets;
    sets.reserve(classes.size());
    for (const auto& c : classes) {
      ElementSet s;
      for (int e : c) {
        if (e < 0 || e >= ground_size || s.Contains(e)) {
          throw Error(ErrorCode::kInvalidPartition,
                      "bad element " + std::to_string(e) + " in class");
        }
        s.Insert(e);
      }
      sets.push_back(s);
    }
    return FromSets(ground_size, std::move(sets));
  }

  // One class per distinct label, ordered by label value.
  static PartitionIntoClasses FromLabels(const std::vector<int>& labels) {
    int max_label = -1;
    for (int l : labels) max_label = std::max(max_label, l);
    std::vector<ElementSet> sets(max_label + 1);
    for (int e = 0; e < static_cast<int>(labels.size()); ++e) {
      if (labels[e] < 0) {
        throw Error(ErrorCode::kInvalidPartition, "negative label");
      }
      sets[labels[e]].Insert(e);
    }
    std::erase_if(sets, [](const ElementSet& s) { return s.Empty(); });
    return FromSets(static_cast<int>(labels.size()), std::move(sets));
  }

  int ground_size() const { return ground_size_; }
  const std::vector<ElementSet>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }

  // Coloring number of the partition matroid.
  int MaxClassSize() const {
    int best = 0;
    for (const auto& c : classes_) best = std::max(best, c.Count());
    return best;
  }

  std::vector<int> ClassSizes() const {
    std::vector<int> sizes;
    for (const auto& c : classes_) sizes.push_back(c.Count());
    return sizes;
  }

  int ClassOf(int e) const {
    for (int i = 0; i < class_count(); ++i) {
      if (classes_[i].Contains(e)) return i;
    }
    return -1;
  }

  std::vector<std::vector<int>> ToVectors() const {
    std::vector<std::vector<int>> out;
    for (const auto& c : classes_) out.push_back(c.ToVector());
    return out;
  }

  friend bool operator==(const PartitionIntoClasses&,
                         const PartitionIntoClasses&) = default;

 private:
  void Validate() const {
    if (ground_size_ < 0 || ground_size_ > ElementSet::kCapacity) {
      throw Error(ErrorCode::kInvalidPartition, "bad ground size");
    }
    const ElementSet ground = ElementSet::Range(ground_size_);
    ElementSet seen;
    for (const auto& c : classes_) {
      if (c.Empty()) throw Error(ErrorCode::kInvalidPartition, "empty class");
      if (!c.IsSubsetOf(ground)) {
        throw Error(ErrorCode::kInvalidPartition, "class outside ground set");
      }
      if (c.Intersects(seen)) {
        throw Error(ErrorCode::kInvalidPartition, "classes overlap");
      }
      seen |= c;
    }
    if (seen != ground) {
      throw Error(ErrorCode::kInvalidPartition,
                  "classes do not cover the ground set");
    }
  }

  int ground_size_ = 0;
  std::vector<ElementSet> classes_;
};

// ---------------------------------------------------------------------------
// Derived constructions.

// X independent iff S - X still spans.
inline Matroid Dual(const Matroid& m) {
  const int full_rank = m.Rank();
  const ElementSet ground = m.ground();
  return Matroid::Unchecked(m.size(), [m, full_rank, ground](const ElementSet& x) {
    return m.Rank(ground - x) == full_rank;
  });
}

// Restriction to `subset`, relabelled so the i-th smallest member of
// `subset` becomes element i.
inline Matroid Restrict(const Matroid& m, const ElementSet& subset) {
  if (!subset.IsSubsetOf(m.ground())) {
    throw Error(ErrorCode::kInvalidArgument, "restriction outside ground set");
  }
  std::vector<int> to_parent = subset.ToVector();
  auto lift = [to_parent](const ElementSet& x) {
    ElementSet y;
    x.ForEach([&](int e) { y.Insert(to_parent[e]); });
    return y;
  };
  return Matroid::Unchecked(
      static_cast<int>(to_parent.size()),
      [m, lift](const ElementSet& x) { return m.IsIndependent(lift(x)); },
      [m, lift](const ElementSet& x) { return m.Rank(lift(x)); });
}

// k-truncation; k >= r(S) gives back `m` itself.
inline Matroid Truncate(const Matroid& m, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative truncation");
  if (k == 0 && m.size() > 0) {
    throw Error(ErrorCode::kEmptyTruncation,
                "0-truncation of a nonempty matroid makes every element a loop");
  }
  if (k >= m.Rank()) return m;
  return Matroid::Unchecked(
      m.size(),
      [m, k](const ElementSet& x) { return x.Count() <= k && m.IsIndependent(x); },
      [m, k](const ElementSet& x) { return std::min(k, m.Rank(x)); });
}

// Elements of `second` are shifted up by first.size().
inline Matroid DirectSum(const Matroid& first, const Matroid& second) {
  const int n1 = first.size();
  const int n = n1 + second.size();
  auto split = [n1, n](const ElementSet& x) {
    ElementSet lo, hi;
    x.ForEach([&](int e) {
      if (e < n1) {
        lo.Insert(e);
      } else if (e < n) {
        hi.Insert(e - n1);
      }
    });
    return std::pair{lo, hi};
  };
  return Matroid::Unchecked(
      n,
      [first, second, split](const ElementSet& x) {
        auto [lo, hi] = split(x);
        return first.IsIndependent(lo) && second.IsIndependent(hi);
      },
      [first, second, split](const ElementSet& x) {
        auto [lo, hi] = split(x);
        return first.Rank(lo) + second.Rank(hi);
      });
}

// Appends element m.size() as a parallel copy of `s`.
inline Matroid AddParallel(const Matroid& m, int s) {
  if (s < 0 || s >= m.size()) {
    throw Error(ErrorCode::kInvalidArgument, "parallel source out of range");
  }
  if (!m.IsIndependent(ElementSet::Of({s}))) {
    throw Error(ErrorCode::kLoopPresent, "cannot add a parallel copy of a loop");
  }
  const int copy = m.size();
  return Matroid::Unchecked(copy + 1, [m, s, copy](const ElementSet& x) {
    if (!x.Contains(copy)) return m.IsIndependent(x);
    if (x.Contains(s)) return false;
    return m.IsIndependent(x.Without(copy).With(s));
  });
}

// True iff the two oracles agree on every subset (exhaustive, size <= 24).
inline bool OracleEqual(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 24) {
    throw Error(ErrorCode::kGroundSetTooLarge, "exhaustive comparison");
  }
  bool equal = true;
  const std::uint64_t limit = std::uint64_t{1} << a.size();
  for (std::uint64_t mask = 0; mask < limit && equal; ++mask) {
    ElementSet x = ElementSet::FromMask(mask);
    equal = a.IsIndependent(x) == b.IsIndependent(x);
  }
  return equal;
}

}  // namespace matred

#endif  // MATRED_MATROID_HPP_

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

// Concrete matroid classes and the extremal families used to show that the
// reduction bounds are tight.

#ifndef MATRED_ZOO_HPP_
#define MATRED_ZOO_HPP_

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matred/element_set.hpp"
#include "matred/error.hpp"
#include "matred/graph.hpp"
#include "matred/matroid.hpp"

namespace matred {

inline Matroid PartitionMatroid(const PartitionIntoClasses& p) {
  return Matroid::FromPredicate(
      p.ground_size(),
      [classes = p.classes()](const ElementSet& x) {
        for (const auto& c : classes) {
          if ((x & c).Count() > 1) return false;
        }
        return true;
      },
      [classes = p.classes()](const ElementSet& x) {
        int r = 0;
        for (const auto& c : classes) r += x.Intersects(c) ? 1 : 0;
        return r;
      });
}

inline Matroid UniformMatroid(int rank, int n) {
  if (rank < 0 || rank > n) {
    throw Error(ErrorCode::kInvalidArgument, "uniform matroid needs 0 <= r <= n");
  }
  return Matroid::FromPredicate(
      n, [rank](const ElementSet& x) { return x.Count() <= rank; },
      [rank](const ElementSet& x) { return std::min(rank, x.Count()); });
}

inline Matroid FreeMatroid(int n) { return UniformMatroid(n, n); }

// Edge subsets that are forests. Parallel edges are distinct elements.
inline Matroid GraphicMatroid(const Graph& g) {
  ValidateGraph(g);
  return Matroid::FromPredicate(
      g.edge_count(),
      [g](const ElementSet& x) {
        UnionFind uf(g.vertices);
        bool forest = true;
        x.ForEach([&](int e) {
          if (forest) forest = uf.Union(g.edges[e].first, g.edges[e].second);
        });
        return forest;
      },
      [g](const ElementSet& x) {
        UnionFind uf(g.vertices);
        int r = 0;
        x.ForEach([&](int e) {
          if (uf.Union(g.edges[e].first, g.edges[e].second)) ++r;
        });
        return r;
      });
}

// Matchable subsets of the left part. Unchecked variant allows left vertices
// without neighbours (loops), which appear inside gammoid presentations.
inline Matroid TransversalMatroidUnchecked(const BipartiteGraph& g) {
  const ElementSet right = ElementSet::Range(g.right());
  return Matroid::Unchecked(
      g.left(),
      [g, right](const ElementSet& x) { return LeftSetMatchable(g, x, right); },
      [g, right](const ElementSet& x) { return MaximumMatching(g, x, right).size; });
}

inline Matroid TransversalMatroid(const BipartiteGraph& g) {
  Matroid m = TransversalMatroidUnchecked(g);
  m.RequireLoopless();
  return m;
}

// r(X) = min over Y subset of X of |X| - |Y| + |N(Y)|. Exponential in |X|;
// used as an independent route to the matching rank.
inline int TransversalRankByDeficiency(const BipartiteGraph& g, const ElementSet& x) {
  int best = x.Count();
  ForEachSubsetOf(x, [&](const ElementSet& y) {
    ElementSet neighbours;
    y.ForEach([&](int a) {
      for (int b : g.LeftNeighbors(a)) neighbours.Insert(b);
    });
    best = std::min(best, x.Count() - y.Count() + neighbours.Count());
  });
  return best;
}

// Gammoid on the sink set T (element i is the i-th smallest vertex of T):
// X independent iff |X| vertex-disjoint paths run from `sources` into X.
class Gammoid {
 public:
  Gammoid(Digraph d, ElementSet sources, ElementSet sinks)
      : digraph_(std::move(d)), sources_(sources), sinks_(sinks),
        sink_vertices_(sinks.ToVector()) {
    const ElementSet vertices = ElementSet::Range(digraph_.vertices);
    if (!sources_.IsSubsetOf(vertices)) {
      throw Error(ErrorCode::kInvalidArgument, "source vertex out of range");
    }
    if (!sinks_.IsSubsetOf(vertices)) {
      throw Error(ErrorCode::kElementOutsideT, "sink vertex out of range");
    }
    for (const auto& [u, v] : digraph_.arcs) {
      if (u < 0 || v < 0 || u >= digraph_.vertices || v >= digraph_.vertices) {
        throw Error(ErrorCode::kInvalidArgument, "arc endpoint out of range");
      }
    }
  }

  const Digraph& digraph() const { return digraph_; }
  const ElementSet& sources() const { return sources_; }
  const ElementSet& sinks() const { return sinks_; }
  int size() const { return static_cast<int>(sink_vertices_.size()); }

  int VertexOf(int element) const { return sink_vertices_.at(element); }

  int ElementOf(int vertex) const {
    auto it = std::lower_bound(sink_vertices_.begin(), sink_vertices_.end(), vertex);
    if (it == sink_vertices_.end() || *it != vertex) {
      throw Error(ErrorCode::kElementOutsideT,
                  "vertex " + std::to_string(vertex) + " is not in T");
    }
    return static_cast<int>(it - sink_vertices_.begin());
  }

  ElementSet ToVertices(const ElementSet& x) const {
    ElementSet out;
    x.ForEach([&](int e) { out.Insert(sink_vertices_[e]); });
    return out;
  }

  int Linkage(const ElementSet& x) const {
    return VertexDisjointPaths(digraph_, sources_, ToVertices(x));
  }

  Matroid ToMatroid() const {
    Gammoid self = *this;
    return Matroid::FromPredicate(
        size(),
        [self](const ElementSet& x) { return self.Linkage(x) == x.Count(); },
        [self](const ElementSet& x) { return self.Linkage(x); });
  }

 private:
  Digraph digraph_;
  ElementSet sources_;
  ElementSet sinks_;
  std::vector<int> sink_vertices_;
};

inline Matroid GammoidMatroid(const Digraph& d, const ElementSet& sources,
                              const ElementSet& sinks) {
  return Gammoid(d, sources, sinks).ToMatroid();
}

// Rank r plus hyperplanes H_1..H_q of a paving matroid: proper subsets of S
// with |H_i| >= r and |H_i & H_j| <= r-2.
struct HyperplaneFamily {
  int rank = 2;
  int ground_size = 0;
  std::vector<ElementSet> hyperplanes;

  // Description of the first violated condition, if any.
  std::optional<std::string> Violation() const {
    if (rank < 2) return "rank must be at least 2";
    if (ground_size < rank) return "ground set smaller than the rank";
    if (ground_size > ElementSet::kCapacity) return "ground set too large";
    const ElementSet ground = ElementSet::Range(ground_size);
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      const ElementSet& h = hyperplanes[i];
      if (!h.IsSubsetOf(ground)) return "H" + std::to_string(i) + " leaves the ground set";
      if (h == ground) return "H" + std::to_string(i) + " is not a proper subset";
      if (h.Count() < rank) {
        return "H" + std::to_string(i) + " has fewer than r elements";
      }
      for (std::size_t j = 0; j < i; ++j) {
        if ((h & hyperplanes[j]).Count() > rank - 2) {
          return "H" + std::to_string(j) + " and H" + std::to_string(i) +
                 " share more than r-2 elements";
        }
      }
    }
    return std::nullopt;
  }

  void Validate() const {
    if (auto v = Violation()) throw Error(ErrorCode::kInvalidFamily, *v);
  }
};

// No validation; lets audits observe what an invalid family produces.
inline Matroid PavingMatroidUnchecked(const HyperplaneFamily& h) {
  return Matroid::Unchecked(h.ground_size, [h](const ElementSet& x) {
    const int size = x.Count();
    if (size < h.rank) return true;
    if (size > h.rank) return false;
    for (const auto& hp : h.hyperplanes) {
      if (x.IsSubsetOf(hp)) return false;
    }
    return true;
  });
}

// Bases: r-sets contained in no hyperplane.
inline Matroid PavingMatroid(const HyperplaneFamily& h) {
  h.Validate();
  Matroid m = PavingMatroidUnchecked(h);
  m.RequireLoopless();
  return m;
}

// max{ceil(|S|/r), ceil(|H_i|/(r-1))}.
inline int PavingColoringNumber(const HyperplaneFamily& h) {
  h.Validate();
  int chi = (h.ground_size + h.rank - 1) / h.rank;
  for (const auto& hp : h.hyperplanes) {
    chi = std::max(chi, (hp.Count() + h.rank - 2) / (h.rank - 1));
  }
  return chi;
}

struct LaminarSet {
  ElementSet elements;
  int capacity = 1;
};

struct LaminarSpec {
  int ground_size = 0;
  std::vector<LaminarSet> sets;

  void Validate() const {
    const ElementSet ground = ElementSet::Range(ground_size);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!sets[i].elements.IsSubsetOf(ground)) {
        throw Error(ErrorCode::kNotLaminar, "member leaves the ground set");
      }
      if (sets[i].capacity < 1) {
        throw Error(ErrorCode::kNotLaminar, "capacities must be at least 1");
      }
      for (std::size_t j = 0; j < i; ++j) {
        const ElementSet& a = sets[i].elements;
        const ElementSet& b = sets[j].elements;
        if (a.Intersects(b) && !a.IsSubsetOf(b) && !b.IsSubsetOf(a)) {
          throw Error(ErrorCode::kNotLaminar,
                      "members " + std::to_string(j) + " and " +
                          std::to_string(i) + " cross");
        }
      }
    }
  }
};

inline Matroid LaminarMatroid(const LaminarSpec& spec) {
  spec.Validate();
  return Matroid::FromPredicate(spec.ground_size, [sets = spec.sets](const ElementSet& x) {
    for (const auto& s : sets) {
      if ((x & s.elements).Count() > s.capacity) return false;
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Projective planes PG(2, q) for q in {2, 3, 4, 5, 7, 8}.

// Addition and multiplication tables of GF(q). GF(4) and GF(8) use the
// irreducible polynomials x^2+x+1 and x^3+x+1 over GF(2); elements are
// coefficient bitmasks, so addition is XOR.
class GaloisField {
 public:
  explicit GaloisField(int q) : q_(q), add_(q, std::vector<int>(q)), mul_(q, std::vector<int>(q)) {
    if (q == 2 || q == 3 || q == 5 || q == 7) {
      for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
          add_[a][b] = (a + b) % q;
          mul_[a][b] = (a * b) % q;
        }
      }
    } else if (q == 4 || q == 8) {
      const int degree = q == 4 ? 2 : 3;
      const int modulus = q == 4 ? 0b111 : 0b1011;
      for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
          add_[a][b] = a ^ b;
          int product = 0;
          for (int i = 0; i < degree; ++i) {
            if ((b >> i) & 1) product ^= a << i;
          }
          for (int i = 2 * degree - 2; i >= degree; --i) {
            if ((product >> i) & 1) product ^= modulus << (i - degree);
          }
          mul_[a][b] = product;
        }
      }
    } else {
      throw Error(ErrorCode::kUnsupportedOrder,
                  "no plane of order " + std::to_string(q) + " supported");
    }
  }

  int order() const { return q_; }
  int Add(int a, int b) const { return add_[a][b]; }
  int Mul(int a, int b) const { return mul_[a][b]; }

 private:
  int q_;
  std::vector<std::vector<int>> add_;
  std::vector<std::vector<int>> mul_;
};

struct ProjectivePlane {
  int order = 0;
  int point_count = 0;
  std::vector<ElementSet> lines;

  // Rank-3 paving family whose hyperplanes are the lines.
  HyperplaneFamily ToHyperplaneFamily() const {
    return HyperplaneFamily{3, point_count, lines};
  }
};

// Description of the first failed axiom or count, if any.
inline std::optional<std::string> ProjectivePlaneViolation(const ProjectivePlane& p) {
  const int q = p.order;
  const int expected = q * q + q + 1;
  if (p.point_count != expected) return "point count";
  if (static_cast<int>(p.lines.size()) != expected) return "line count";
  for (const auto& line : p.lines) {
    if (line.Count() != q + 1) return "points per line";
  }
  // (P1) two distinct points lie on exactly one line.
  for (int a = 0; a < p.point_count; ++a) {
    for (int b = a + 1; b < p.point_count; ++b) {
      int through = 0;
      for (const auto& line : p.lines) through += line.Contains(a) && line.Contains(b);
      if (through != 1) return "P1 fails for points " + std::to_string(a) + "," + std::to_string(b);
    }
  }
  // (P2) two distinct lines meet in exactly one point.
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < p.lines.size(); ++j) {
      if ((p.lines[i] & p.lines[j]).Count() != 1) return "P2 fails";
    }
  }
  // (P3) four points, no three collinear.
  auto collinear = [&](int a, int b, int c) {
    for (const auto& line : p.lines) {
      if (line.Contains(a) && line.Contains(b) && line.Contains(c)) return true;
    }
    return false;
  };
  const int n = p.point_count;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (collinear(a, b, c)) continue;
        for (int d = c + 1; d < n; ++d) {
          if (!collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d)) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return "P3 fails";
}

// PG(2, q) from homogeneous coordinates: points and lines are the nonzero
// triples over GF(q) normalized so the first nonzero entry is 1; a point
// lies on a line iff their dot product vanishes.
inline ProjectivePlane MakeProjectivePlane(int q) {
  const GaloisField field(q);
  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        std::array<int, 3> t{x, y, z};
        int lead = 0;
        while (lead < 3 && t[lead] == 0) ++lead;
        if (lead < 3 && t[lead] == 1) triples.push_back(t);
      }
    }
  }
  ProjectivePlane plane;
  plane.order = q;
  plane.point_count = static_cast<int>(triples.size());
  for (const auto& line : triples) {
    ElementSet points;
    for (int p = 0; p < plane.point_count; ++p) {
      int dot = 0;
      for (int i = 0; i < 3; ++i) dot = field.Add(dot, field.Mul(line[i], triples[p][i]));
      if (dot == 0) points.Insert(p);
    }
    plane.lines.push_back(points);
  }
  if (auto violation = ProjectivePlaneViolation(plane)) {
    throw Error(ErrorCode::kInvariantBreach, "PG(2," + std::to_string(q) + "): " + *violation);
  }
  return plane;
}

inline HyperplaneFamily FanoFamily() { return MakeProjectivePlane(2).ToHyperplaneFamily(); }

// ---------------------------------------------------------------------------
// Generators.

inline Graph CompleteGraph(int n) {
  Graph g;
  g.vertices = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

// Three partition matroids on {a,b,c,d,e,f} = {0..5} with two-element
// circuits {ad,be,cf}, {ae,bf,cd}, {af,bd,ce} and the lists
// L_a = L_d = {1,2}, L_b = L_e = {1,3}, L_c = L_f = {2,3}.
struct KiralyTriple {
  std::vector<PartitionIntoClasses> partitions;
  std::vector<Matroid> matroids;
  std::vector<std::vector<int>> lists;
};

inline KiralyTriple MakeKiralyTriple() {
  enum { a, b, c, d, e, f };
  KiralyTriple t;
  t.partitions = {
      PartitionIntoClasses::FromClasses(6, {{a, d}, {b, e}, {c, f}}),
      PartitionIntoClasses::FromClasses(6, {{a, e}, {b, f}, {c, d}}),
      PartitionIntoClasses::FromClasses(6, {{a, f}, {b, d}, {c, e}}),
  };
  for (const auto& p : t.partitions) t.matroids.push_back(PartitionMatroid(p));
  t.lists = {{1, 2}, {1, 3}, {2, 3}, {1, 2}, {1, 3}, {2, 3}};
  return t;
}

// |S| = 2k split into blocks of sizes ceil(2k/3) >= ... >= floor(2k/3);
// independent iff |X| <= 2 and at most one element per block.
inline LaminarSpec LaminarRankTwoTight(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const int n = 2 * k;
  LaminarSpec spec;
  spec.ground_size = n;
  spec.sets.push_back({ElementSet::Range(n), 2});
  int start = 0;
  for (int i = 0; i < 3; ++i) {
    const int size = n / 3 + (i < n % 3 ? 1 : 0);
    ElementSet block;
    for (int e = start; e < start + size; ++e) block.Insert(e);
    start += size;
    if (!block.Empty()) spec.sets.push_back({block, 1});
  }
  return spec;
}

// k blocks of size k-1 (|S| = k^2 - k); independent iff at most one element
// per block and |X| <= k-1.
inline LaminarSpec LaminarGammoidTight(int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be >= 2");
  LaminarSpec spec;
  spec.ground_size = k * (k - 1);
  spec.sets.push_back({ElementSet::Range(spec.ground_size), k - 1});
  for (int i = 0; i < k; ++i) {
    ElementSet block;
    for (int e = i * (k - 1); e < (i + 1) * (k - 1); ++e) block.Insert(e);
    spec.sets.push_back({block, 1});
  }
  return spec;
}

struct GammoidInstance {
  Digraph digraph;
  ElementSet sources;
  ElementSet sinks;
};

// Digraph realizing LaminarGammoidTight(k): element vertices 0..k(k-1)-1,
// then one hub per block with arcs to its elements, then k-1 sources with
// arcs to every hub. Hubs cap each block at one path; the sources cap the
// total at k-1.
inline GammoidInstance GammoidTight(int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be >= 2");
  const int elements = k * (k - 1);
  const int hub0 = elements;
  const int source0 = elements + k;
  GammoidInstance g;
  g.digraph.vertices = elements + k + (k - 1);
  for (int i = 0; i < k; ++i) {
    for (int e = i * (k - 1); e < (i + 1) * (k - 1); ++e) {
      g.digraph.arcs.emplace_back(hub0 + i, e);
    }
  }
  for (int s = 0; s < k - 1; ++s) {
    for (int i = 0; i < k; ++i) g.digraph.arcs.emplace_back(source0 + s, hub0 + i);
    g.sources.Insert(source0 + s);
  }
  g.sinks = ElementSet::Range(elements);
  return g;
}

}  // namespace matred

#endif  // MATRED_ZOO_HPP_

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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every random sweep uses a fixed seed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "matred/matred.hpp"
#include "test_support.hpp"

namespace {

using namespace matred;  // NOLINT
using testing::Rng;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failed;

  void Require(bool condition, const std::string& what) {
    if (!condition) {
      failed += (pass ? " | failed: " : "; ") + what;
      pass = false;
    }
  }
};

int failures = 0;

void Criterion(int id, const char* name, const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.Require(false, std::string("exception ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("%s %2d %-22s %.2fs  %s%s\n", out.pass ? "PASS" : "FAIL", id, name, seconds,
              out.detail.str().c_str(), out.failed.c_str());
  std::fflush(stdout);
}

// Exhaustive report with the claimed bound checked.
VerificationReport Verify(const ReductionResult& r, const Matroid& m) {
  WeakMapOptions options;
  options.chi_bound = r.claimed_chi_bound;
  return IsWeakMap(r.partition, m, options);
}

bool Certified(const VerificationReport& v) {
  return v.weak_map && v.certified() && v.method == VerificationMethod::kExhaustive;
}

void FanoTightness(Outcome& out) {
  const Matroid fano = PavingMatroid(FanoFamily());
  const int chi = ColoringNumber(fano).k;
  const ReductionResult r = ReducePaving(FanoFamily());
  const VerificationReport v = Verify(r, fano);
  const int best = MinPartitionReductionChi(fano);
  out.detail << "chi=" << chi << " chi(N)=" << v.chi_reduction << " min=" << best;
  out.Require(chi == 3, "chi(Fano) = 3");
  out.Require(Certified(v), "certified weak map");
  out.Require(v.chi_reduction == 4, "chi(N) = 4");
  out.Require(best == 4, "min reduction chi = 4");
}

void GraphicTightness(Outcome& out) {
  const Matroid k4 = GraphicMatroid(CompleteGraph(4));
  const ReductionResult r = ReduceGraphic(CompleteGraph(4));
  const VerificationReport v = Verify(r, k4);
  const int best = MinPartitionReductionChi(k4);
  // Independent sweep over every set partition of the six edges.
  int partitions = 0;
  int brute_best = 7;
  std::vector<int> label(6, 0);
  std::function<void(int, int)> rec = [&](int e, int used) {
    if (e == 6) {
      ++partitions;
      const auto p = PartitionIntoClasses::FromLabels(label);
      if (testing::BruteWeakMap(p, k4)) brute_best = std::min(brute_best, p.MaxClassSize());
      return;
    }
    for (int c = 0; c <= used; ++c) {
      label[e] = c;
      rec(e + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  out.detail << "chi(N)=" << v.chi_reduction << " min=" << best << " partitions=" << partitions
             << " brute_min=" << brute_best;
  out.Require(Certified(v), "certified weak map");
  out.Require(v.rank_preserving, "rank preserving");
  out.Require(v.chi_reduction <= 3, "chi(N) <= 3");
  out.Require(partitions == 203, "203 partitions enumerated");
  out.Require(best == 3 && brute_best == 3, "min reduction chi = 3");
}

void GammoidTightness(Outcome& out) {
  const GammoidInstance g = GammoidTight(3);
  const Matroid m = GammoidMatroid(g.digraph, g.sources, g.sinks);
  const ReductionResult r = ReduceGammoid(g.digraph, g.sources, g.sinks);
  const VerificationReport v = Verify(r, m);
  const int best = MinPartitionReductionChi(m);
  out.detail << "|S|=" << m.size() << " chi=" << v.chi_source << " chi(N)=" << v.chi_reduction
             << " min=" << best;
  out.Require(m.size() == 6 && v.chi_source == 3, "instance has |S| = 6, k = 3");
  out.Require(Certified(v), "certified weak map");
  out.Require(v.rank_preserving, "rank preserving");
  out.Require(v.chi_reduction <= 4, "chi(N) <= 4");
  out.Require(best == 4, "min reduction chi = 4");
}

void RankTwoTightness(Outcome& out) {
  const Matroid m = LaminarMatroid(LaminarRankTwoTight(3));
  const ReductionResult r = ReducePavingRank2(m);
  const VerificationReport v = Verify(r, m);
  const int best = MinPartitionReductionChi(m);
  const int brute = testing::BruteMinReductionChi(m);
  out.detail << "chi=" << v.chi_source << " chi(N)=" << v.chi_reduction << " min=" << best
             << " brute=" << brute;
  out.Require(v.chi_source == 3, "chi = 3");
  out.Require(Certified(v), "certified weak map");
  out.Require(v.rank_preserving, "rank preserving");
  out.Require(v.chi_reduction <= 4, "chi(N) <= 4");
  out.Require(best == 4 && brute == 4, "4 is optimal");
}

bool HasThreeColoredLine(const ProjectivePlane& plane, const std::vector<int>& colors) {
  for (const auto& line : plane.lines) {
    int mask = 0;
    line.ForEach([&](int p) {
      if (colors[p] >= 0) mask |= 1 << colors[p];
    });
    if (mask == 7) return true;
  }
  return false;
}

void ProjectivePlanes(Outcome& out) {
  const ProjectivePlane fano = MakeProjectivePlane(2);
  const ProjectivePlane pg4 = MakeProjectivePlane(4);
  auto counts_ok = [](const ProjectivePlane& p, int points, int per_line) {
    bool ok = p.point_count == points && static_cast<int>(p.lines.size()) == points;
    for (const auto& l : p.lines) ok = ok && l.Count() == per_line;
    return ok && !ProjectivePlaneViolation(p);
  };
  out.Require(counts_ok(fano, 7, 3), "PG(2,2) counts 7/7/3");
  out.Require(counts_ok(pg4, 21, 5), "PG(2,4) counts 21/21/5");

  int swept = 0;
  int violations = 0;
  for (int code = 0; code < 2187; ++code) {
    std::vector<int> colors(7);
    for (int p = 0, c = code; p < 7; ++p, c /= 3) colors[p] = c % 3;
    ++swept;
    if (HasThreeColoredLine(fano, colors)) continue;
    violations += CheckProjectiveTrichotomy(fano, colors).which == TrichotomyCase::kViolation;
  }
  out.Require(swept == 2187 && violations == 0, "Fano sweep hits a case every time");

  // Random weak-map candidates: points in random order take a random color
  // that keeps every line at most two-colored.
  const Matroid m = PavingMatroid(pg4.ToHyperplaneFamily());
  Rng rng(5);
  int satisfying = 0;
  int min_max_class = 22;
  int bad_bound = 0;
  int bad_case = 0;
  for (int sample = 0; sample < 100000; ++sample) {
    std::vector<int> order(21);
    for (int i = 0; i < 21; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> colors(21, -1);
    bool stuck = false;
    for (int p : order) {
      int options[3];
      int count = 0;
      for (int c = 0; c < 3; ++c) {
        colors[p] = c;
        if (!HasThreeColoredLine(pg4, colors)) options[count++] = c;
      }
      if (count == 0) {
        stuck = true;
        break;
      }
      colors[p] = options[testing::Uniform(rng, 0, count - 1)];
    }
    if (stuck) continue;
    const auto partition = PartitionIntoClasses::FromLabels(colors);
    if (!IsWeakMap(partition, m).weak_map) continue;
    ++satisfying;
    min_max_class = std::min(min_max_class, partition.MaxClassSize());
    bad_bound += partition.MaxClassSize() < 11;
    bad_case += CheckProjectiveTrichotomy(pg4, colors).which == TrichotomyCase::kViolation;
  }
  out.detail << "sweep=" << swept << " sampled=100000 satisfying=" << satisfying
             << " min_max_class=" << min_max_class;
  out.Require(satisfying > 0, "sampler found weak-map partitions");
  out.Require(bad_bound == 0, "every satisfying partition has a class >= 11");
  out.Require(bad_case == 0, "trichotomy holds on PG(2,4) samples");
}

void KiralyFixture(Outcome& out) {
  const KiralyTriple t = MakeKiralyTriple();
  const bool colorable = ListColorable(t.matroids, t.lists).found;
  const auto abc = ElementSet::Of({0, 1, 2});
  const auto def = ElementSet::Of({3, 4, 5});
  bool stated = true;
  for (const Matroid& m : t.matroids) stated = stated && m.IsIndependent(abc) && m.IsIndependent(def);
  bool pairwise = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      pairwise = pairwise && CommonIndependentPartition(t.matroids[i], t.matroids[j], 2).found;
    }
  }
  const bool triple = CommonIndependentPartition(t.matroids, 2).found;
  out.detail << "list_colorable=" << colorable << " pairwise=" << pairwise << " triple=" << triple;
  out.Require(!colorable, "list coloring with the given lists fails");
  out.Require(stated, "{a,b,c},{d,e,f} is common independent");
  out.Require(pairwise && triple, "common 2-partition exists");
}

void BasesAndSbo(Outcome& out) {
  const Matroid k4 = GraphicMatroid(CompleteGraph(4));
  const std::size_t bases = Bases(k4).size();
  const bool sbo = IsStronglyBaseOrderable(k4);
  out.detail << "bases=" << bases << " sbo=" << sbo;
  out.Require(bases == 16, "16 bases");
  out.Require(!sbo, "not strongly base orderable");
}

void OracleEquivalence(Outcome& out) {
  Rng rng(8);
  int dualized = 0;
  int minimized = 0;
  int searched = 0;
  MinimizeStats total;
  int search_leaf_deletions = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testing::RandomLooplessGammoid(rng, 10, 8);
    const Matroid linkage = GammoidMatroid(g.digraph, g.sources, g.sinks);
    const BipartitePresentation p = DualizeGammoid(g.digraph, g.sources, g.sinks);
    dualized += OracleEqual(PresentedMatroid(p), linkage);
    MinimizeStats stats;
    const BipartitePresentation q = MinimizePresentation(p, &stats);
    minimized += OracleEqual(PresentedMatroid(q), linkage);
    total.tight_splits += stats.tight_splits;
    total.contractions += stats.contractions;
    total.edge_drops += stats.edge_drops;
    total.leaf_deletions += stats.leaf_deletions;
    total.rejected_leaf_deletions += stats.rejected_leaf_deletions;
    // Leaf deletions during the search, checked against the linkage oracle.
    // The raw presentation is used too whenever it has a B2-forest.
    const int k = ColoringNumber(linkage).k;
    bool ok = true;
    if (k >= 2) {
      std::vector<const BipartitePresentation*> starts = {&q};
      try {
        FindB2Forest(p, k);
        starts.push_back(&p);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoB2Forest) throw;
      }
      for (const BipartitePresentation* start : starts) {
        const LocalSearchResult r = RunLocalSearch(*start, k);
        search_leaf_deletions += r.leaf_deletions;
        ok = ok && OracleEqual(PresentedMatroid(r.presentation), linkage);
      }
    }
    searched += ok;
  }
  out.detail << "dualize " << dualized << "/20 minimize " << minimized << "/20 search "
             << searched << "/20; splits=" << total.tight_splits
             << " contractions=" << total.contractions << " edge_drops=" << total.edge_drops
             << " leaf_deletions=" << total.leaf_deletions + search_leaf_deletions
             << " unsound_leaf_deletions_rejected=" << total.rejected_leaf_deletions;
  out.Require(dualized == 20, "dualization equivalent");
  out.Require(minimized == 20, "minimization equivalent");
  out.Require(searched == 20, "leaf deletions during search equivalent");
  out.Require(total.leaf_deletions + search_leaf_deletions > 0, "leaf deletions exercised");
}

void CrossChecks(Outcome& out) {
  Rng rng(9);
  int coloring = 0;
  int inequality = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Matroid m = testing::RandomMixedMatroid(rng, 10);
    const int k = ColoringNumber(m).k;
    coloring += k == ColoringNumberBruteforce(m);
    inequality += k == testing::ChiByRankInequality(m);
  }
  int paving = 0;
  int paving_inequality = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const HyperplaneFamily h = testing::RandomHyperplaneFamily(
        rng, testing::Uniform(rng, 2, 4), testing::Uniform(rng, 5, 10));
    const Matroid m = PavingMatroid(h);
    const int k = ColoringNumber(m).k;
    paving += PavingColoringNumber(h) == k;
    paving_inequality += k == testing::ChiByRankInequality(m);
  }
  out.detail << "coloring " << coloring << "/50 inequality " << inequality << "/50 paving "
             << paving << "/30 paving_inequality " << paving_inequality << "/30";
  out.Require(coloring == 50 && inequality == 50, "mixed matroids agree");
  out.Require(paving == 30 && paving_inequality == 30, "paving formula agrees");
}

bool IsRewiring(const std::string& label) {
  return label == "large" || label == "case1" || label == "case2";
}

void LocalSearchProperties(Outcome& out) {
  Rng rng(10);
  int instances = 0;
  int steps = 0;
  int non_decreasing = 0;
  int count_changed = 0;
  int fallbacks = 0;
  int unbalanced = 0;
  int leaves_outside = 0;
  int failed = 0;
  while (instances < 100) {
    const auto g = testing::RandomLooplessGammoid(rng, 10, 8);
    const int k = ColoringNumber(GammoidMatroid(g.digraph, g.sources, g.sinks)).k;
    if (k < 2) continue;
    ++instances;
    const BipartitePresentation p =
        MinimizePresentation(DualizeGammoid(g.digraph, g.sources, g.sinks));
    PotentialVector previous = ComputePotential(FindB2Forest(p, k), k);
    LocalSearchOptions options;
    options.trace = [&](const TraceRecord& t) {
      if (IsRewiring(t.label)) {
        ++steps;
        non_decreasing += !(t.potential < previous);
        count_changed += t.potential.levels.size() != previous.levels.size();
      }
      // A search while a large component remains replaces a rewiring step
      // that failed to lower the potential.
      if (t.label == "search" && previous.violation > 0) ++fallbacks;
      previous = t.potential;
    };
    try {
      const LocalSearchResult r = RunLocalSearch(p, k, options);
      for (const auto& c : r.forest.components) unbalanced += c.s_count > 2 * k - 2;
      leaves_outside += internal::FirstLeafOutsideS(r.presentation, r.forest) != -1;
    } catch (const Error&) {
      ++failed;
    }
  }
  out.detail << "instances=" << instances << " steps=" << steps
             << " non_decreasing=" << non_decreasing << " count_changed=" << count_changed
             << " fallbacks=" << fallbacks << " unterminated=" << failed
             << " unbalanced=" << unbalanced << " leaves_outside_S=" << leaves_outside;
  out.Require(non_decreasing == 0 && fallbacks == 0, "every step lowers the potential");
  out.Require(count_changed == 0, "component count preserved");
  out.Require(failed == 0, "terminates under the default cap");
  out.Require(unbalanced == 0, "final |S(C)| <= 2k-2");
  out.Require(leaves_outside == 0, "final leaves in S");
}

void TruncationChain(Outcome& out) {
  const Matroid k4 = GraphicMatroid(CompleteGraph(4));
  const ReductionResult start = ReduceGraphic(CompleteGraph(4));
  const auto chain = ReduceTruncationChain(k4, start, 2);
  out.Require(chain.size() == 1 && chain[0].rank == 2, "one step to rank 2");
  for (const auto& step : chain) {
    const Matroid truncated = Truncate(k4, step.rank);
    const int chi = ColoringNumberBruteforce(truncated);
    const int chi_n = step.reduction.partition.MaxClassSize();
    const bool weak = testing::BruteWeakMap(step.reduction.partition, truncated);
    out.detail << "rank " << step.rank << ": chi(M')=" << chi << " chi(N')=" << chi_n
               << " weak_map=" << weak << " ";
    out.Require(chi_n <= 2 * chi, "chi(N') <= 2 chi(M')");
    out.Require(weak, "weak map of the truncation");
    out.Require(OracleEqual(step.truncated, truncated), "truncation recomputed");
  }
}

void SeymourDeskScale(Outcome& out) {
  Rng rng(12);
  int identical = 0;
  int arbitrary = 0;
  int done = 0;
  while (done < 30) {
    const Matroid m = testing::RandomMixedMatroid(rng, 8);
    const int chi = ColoringNumber(m).k;
    if (std::pow(chi, m.size()) > 1e7) continue;
    ++done;
    std::vector<int> palette(chi + 2);
    for (int c = 0; c < chi + 2; ++c) palette[c] = c;
    const std::vector<std::vector<int>> same(
        m.size(), std::vector<int>(palette.begin(), palette.begin() + chi));
    identical += ListColorable({m}, same).found;
    std::vector<std::vector<int>> lists(m.size());
    for (auto& l : lists) {
      std::shuffle(palette.begin(), palette.end(), rng);
      l.assign(palette.begin(), palette.begin() + chi);
    }
    arbitrary += ListColorable({m}, lists).found;
  }
  out.detail << "uniform lists " << identical << "/30 random lists " << arbitrary << "/30";
  out.Require(identical == 30 && arbitrary == 30, "list colorable with lists of size chi");
}

}  // namespace

int main() {
  Criterion(1, "fano-tightness", FanoTightness);
  Criterion(2, "graphic-tightness", GraphicTightness);
  Criterion(3, "gammoid-tightness", GammoidTightness);
  Criterion(4, "rank2-tightness", RankTwoTightness);
  Criterion(5, "projective-planes", ProjectivePlanes);
  Criterion(6, "kiraly-fixture", KiralyFixture);
  Criterion(7, "k4-bases-sbo", BasesAndSbo);
  Criterion(8, "oracle-equivalence", OracleEquivalence);
  Criterion(9, "cross-checks", CrossChecks);
  Criterion(10, "local-search", LocalSearchProperties);
  Criterion(11, "truncation-chain", TruncationChain);
  Criterion(12, "list-coloring", SeymourDeskScale);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

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

// JSON documents for matroids, partitions, lists and reports.
//
// Every matroid document is an object {"kind": ..., "n": ..., payload}
// where element ids are positions: edge order for graphic, left vertices for
// transversal, sorted sinks for gammoid. Optional "names" gives one unique
// string per element.

#ifndef MATRED_IO_HPP_
#define MATRED_IO_HPP_

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "matred/error.hpp"
#include "matred/gammoid_reducer.hpp"
#include "matred/matroid.hpp"
#include "matred/reducers.hpp"
#include "matred/verifier.hpp"
#include "matred/zoo.hpp"

namespace matred {

using Json = nlohmann::json;

// A parsed matroid document. Exactly one of the structural fields is set,
// matching `kind`.
struct MatroidDocument {
  std::string kind;
  int n = 0;
  std::vector<std::string> names;
  Matroid matroid;
  std::optional<Graph> graph;
  std::optional<BipartiteGraph> bipartite;
  std::optional<GammoidInstance> gammoid;
  std::optional<HyperplaneFamily> paving;
  std::optional<LaminarSpec> laminar;
  std::optional<PartitionIntoClasses> partition;
  std::optional<ProjectivePlane> plane;
  int uniform_rank = 0;
};

namespace internal {

[[noreturn]] inline void ParseFail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

inline const Json& Field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    ParseFail(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

inline int IntField(const Json& doc, const char* key) {
  const Json& v = Field(doc, key);
  if (!v.is_number_integer()) ParseFail(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

inline std::vector<int> IntList(const Json& v, const char* what) {
  if (!v.is_array()) ParseFail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : v) {
    if (!x.is_number_integer()) ParseFail(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline std::vector<std::pair<int, int>> PairList(const Json& v, const char* what) {
  if (!v.is_array()) ParseFail(std::string(what) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const Json& x : v) {
    std::vector<int> p = IntList(x, what);
    if (p.size() != 2) ParseFail(std::string(what) + " entries must be pairs");
    out.emplace_back(p[0], p[1]);
  }
  return out;
}

inline ElementSet SetOf(const std::vector<int>& v, int n, const char* what) {
  ElementSet s;
  for (int e : v) {
    if (e < 0 || e >= n) ParseFail(std::string(what) + " element out of range");
    s.Insert(e);
  }
  return s;
}

inline Json SetJson(const ElementSet& s) { return Json(s.ToVector()); }

inline std::vector<std::vector<int>> SetsToVectors(const std::vector<ElementSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.push_back(s.ToVector());
  return out;
}

inline void ParseNames(const Json& doc, MatroidDocument& out) {
  if (!doc.contains("names")) return;
  const Json& names = doc.at("names");
  if (!names.is_array() || static_cast<int>(names.size()) != out.n) {
    ParseFail("\"names\" must list one name per element");
  }
  std::set<std::string> seen;
  for (const Json& x : names) {
    if (!x.is_string()) ParseFail("names must be strings");
    if (!seen.insert(x.get<std::string>()).second) ParseFail("duplicate element name");
    out.names.push_back(x.get<std::string>());
  }
}

}  // namespace internal

// Builds the matroid a document describes. Constructor preconditions apply
// (for instance graphic rejects self-loops); JSON shape errors raise
// kParseError.
inline MatroidDocument ParseMatroidDocument(const Json& doc) {
  using internal::Field;
  using internal::IntField;
  using internal::ParseFail;
  if (!doc.is_object()) ParseFail("document must be an object");
  const Json& kind_json = Field(doc, "kind");
  if (!kind_json.is_string()) ParseFail("\"kind\" must be a string");
  MatroidDocument out;
  out.kind = kind_json.get<std::string>();
  try {
    if (out.kind == "graphic") {
      Graph g;
      g.vertices = IntField(doc, "vertices");
      g.edges = internal::PairList(Field(doc, "edges"), "edges");
      out.matroid = GraphicMatroid(g);
      out.graph = std::move(g);
    } else if (out.kind == "uniform") {
      out.uniform_rank = IntField(doc, "rank");
      out.matroid = UniformMatroid(out.uniform_rank, IntField(doc, "n"));
    } else if (out.kind == "partition") {
      const int n = IntField(doc, "n");
      const Json& classes = Field(doc, "classes");
      if (!classes.is_array()) ParseFail("\"classes\" must be an array");
      std::vector<std::vector<int>> cls;
      for (const Json& c : classes) cls.push_back(internal::IntList(c, "class"));
      out.partition = PartitionIntoClasses::FromClasses(n, cls);
      out.matroid = PartitionMatroid(*out.partition);
    } else if (out.kind == "transversal") {
      BipartiteGraph g(IntField(doc, "n"), IntField(doc, "right"),
                       internal::PairList(Field(doc, "edges"), "edges"));
      out.matroid = TransversalMatroid(g);
      out.bipartite = std::move(g);
    } else if (out.kind == "gammoid") {
      GammoidInstance g;
      g.digraph.vertices = IntField(doc, "vertices");
      g.digraph.arcs = internal::PairList(Field(doc, "arcs"), "arcs");
      g.sources = internal::SetOf(internal::IntList(Field(doc, "sources"), "sources"),
                                  g.digraph.vertices, "sources");
      g.sinks = internal::SetOf(internal::IntList(Field(doc, "sinks"), "sinks"),
                                g.digraph.vertices, "sinks");
      out.matroid = GammoidMatroid(g.digraph, g.sources, g.sinks);
      out.gammoid = std::move(g);
    } else if (out.kind == "paving") {
      HyperplaneFamily h;
      h.rank = IntField(doc, "rank");
      h.ground_size = IntField(doc, "n");
      const Json& hs = Field(doc, "hyperplanes");
      if (!hs.is_array()) ParseFail("\"hyperplanes\" must be an array");
      for (const Json& x : hs) {
        h.hyperplanes.push_back(
            internal::SetOf(internal::IntList(x, "hyperplane"), h.ground_size, "hyperplane"));
      }
      out.matroid = PavingMatroid(h);
      out.paving = std::move(h);
    } else if (out.kind == "laminar") {
      LaminarSpec spec;
      spec.ground_size = IntField(doc, "n");
      const Json& sets = Field(doc, "sets");
      if (!sets.is_array()) ParseFail("\"sets\" must be an array");
      for (const Json& x : sets) {
        spec.sets.push_back(
            {internal::SetOf(internal::IntList(Field(x, "elements"), "elements"),
                             spec.ground_size, "elements"),
             IntField(x, "capacity")});
      }
      out.matroid = LaminarMatroid(spec);
      out.laminar = std::move(spec);
    } else if (out.kind == "projective_plane") {
      ProjectivePlane plane;
      if (doc.contains("lines")) {
        plane.order = IntField(doc, "order");
        plane.point_count = IntField(doc, "n");
        for (const Json& x : doc.at("lines")) {
          plane.lines.push_back(
              internal::SetOf(internal::IntList(x, "line"), plane.point_count, "line"));
        }
        if (auto v = ProjectivePlaneViolation(plane)) {
          throw Error(ErrorCode::kInvalidFamily, *v);
        }
      } else {
        plane = MakeProjectivePlane(IntField(doc, "order"));
      }
      out.paving = plane.ToHyperplaneFamily();
      out.matroid = PavingMatroid(*out.paving);
      out.plane = std::move(plane);
    } else {
      ParseFail("unknown kind \"" + out.kind + "\"");
    }
  } catch (const Json::exception& e) {
    ParseFail(e.what());
  }
  out.n = out.matroid.size();
  if (doc.contains("n") && doc.at("n") != out.n) {
    ParseFail("\"n\" disagrees with the payload");
  }
  internal::ParseNames(doc, out);
  return out;
}

inline Json GraphicDocument(const Graph& g) {
  return {{"kind", "graphic"}, {"n", g.edge_count()}, {"vertices", g.vertices}, {"edges", g.edges}};
}

inline Json UniformDocument(int rank, int n) {
  return {{"kind", "uniform"}, {"n", n}, {"rank", rank}};
}

inline Json PartitionDocument(const PartitionIntoClasses& p) {
  return {{"kind", "partition"}, {"n", p.ground_size()}, {"classes", p.ToVectors()}};
}

inline Json TransversalDocument(const BipartiteGraph& g) {
  return {{"kind", "transversal"}, {"n", g.left()}, {"right", g.right()}, {"edges", g.edges()}};
}

inline Json GammoidDocument(const GammoidInstance& g) {
  return {{"kind", "gammoid"},
          {"n", g.sinks.Count()},
          {"vertices", g.digraph.vertices},
          {"arcs", g.digraph.arcs},
          {"sources", g.sources.ToVector()},
          {"sinks", g.sinks.ToVector()}};
}

inline Json PavingDocument(const HyperplaneFamily& h) {
  return {{"kind", "paving"},
          {"n", h.ground_size},
          {"rank", h.rank},
          {"hyperplanes", internal::SetsToVectors(h.hyperplanes)}};
}

inline Json LaminarDocument(const LaminarSpec& spec) {
  Json sets = Json::array();
  for (const auto& s : spec.sets) {
    sets.push_back({{"elements", s.elements.ToVector()}, {"capacity", s.capacity}});
  }
  return {{"kind", "laminar"}, {"n", spec.ground_size}, {"sets", sets}};
}

inline Json ProjectivePlaneDocument(const ProjectivePlane& p) {
  return {{"kind", "projective_plane"},
          {"n", p.point_count},
          {"order", p.order},
          {"lines", internal::SetsToVectors(p.lines)}};
}

// Serializes a parsed document back to its kind.
inline Json ToDocument(const MatroidDocument& d) {
  Json out;
  if (d.graph) {
    out = GraphicDocument(*d.graph);
  } else if (d.kind == "uniform") {
    out = UniformDocument(d.uniform_rank, d.n);
  } else if (d.partition && d.kind == "partition") {
    out = PartitionDocument(*d.partition);
  } else if (d.bipartite) {
    out = TransversalDocument(*d.bipartite);
  } else if (d.gammoid) {
    out = GammoidDocument(*d.gammoid);
  } else if (d.plane) {
    out = ProjectivePlaneDocument(*d.plane);
  } else if (d.paving) {
    out = PavingDocument(*d.paving);
  } else if (d.laminar) {
    out = LaminarDocument(*d.laminar);
  } else {
    throw Error(ErrorCode::kKindMismatch, "cannot serialize kind \"" + d.kind + "\"");
  }
  if (!d.names.empty()) out["names"] = d.names;
  return out;
}

// Reads "classes" from a partition or reduction document.
inline PartitionIntoClasses ParsePartition(const Json& doc) {
  try {
    const int n = internal::IntField(doc, "n");
    const Json& classes = internal::Field(doc, "classes");
    if (!classes.is_array()) internal::ParseFail("\"classes\" must be an array");
    std::vector<std::vector<int>> cls;
    for (const Json& c : classes) cls.push_back(internal::IntList(c, "class"));
    return PartitionIntoClasses::FromClasses(n, cls);
  } catch (const Json::exception& e) {
    internal::ParseFail(e.what());
  }
}

// {"lists": {"<element id or name>": [colors]}} with one entry per element.
inline std::vector<std::vector<int>> ParseLists(const Json& doc, int n,
                                                const std::vector<std::string>& names = {}) {
  const Json& lists = internal::Field(doc, "lists");
  if (!lists.is_object()) internal::ParseFail("\"lists\" must be an object");
  std::vector<std::vector<int>> out(n);
  std::vector<char> seen(n, 0);
  for (const auto& [key, value] : lists.items()) {
    int e = -1;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
      if (names[i] == key) e = i;
    }
    if (e == -1) {
      std::size_t used = 0;
      try {
        e = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size()) internal::ParseFail("unknown element \"" + key + "\"");
    }
    if (e < 0 || e >= n || seen[e]) internal::ParseFail("bad list key \"" + key + "\"");
    seen[e] = 1;
    out[e] = internal::IntList(value, "list");
  }
  for (int e = 0; e < n; ++e) {
    if (!seen[e]) internal::ParseFail("no list for element " + std::to_string(e));
  }
  return out;
}

inline Json ListsJson(const std::vector<std::vector<int>>& lists) {
  Json out = Json::object();
  for (std::size_t e = 0; e < lists.size(); ++e) out[std::to_string(e)] = lists[e];
  return out;
}

// {"kind": "bundle", "matroids": [...], "lists": {...}}.
inline Json KiralyDocument(const KiralyTriple& t) {
  Json matroids = Json::array();
  for (const auto& p : t.partitions) matroids.push_back(PartitionDocument(p));
  return {{"kind", "bundle"}, {"n", 6}, {"matroids", matroids}, {"lists", ListsJson(t.lists)}};
}

inline Json ReportJson(const VerificationReport& r) {
  Json out = {{"weak_map", r.weak_map},
              {"certified", r.certified()},
              {"rank_preserving", r.rank_preserving},
              {"chi_source", r.chi_source},
              {"chi_reduction", r.chi_reduction},
              {"bound_satisfied", r.bound_satisfied},
              {"method", r.MethodString()},
              {"transversals_checked", r.trials}};
  out["witness"] = r.witness ? internal::SetJson(*r.witness) : Json(nullptr);
  return out;
}

inline Json ReductionDocument(const ReductionResult& r, const std::string& algorithm) {
  return {{"kind", "reduction"},
          {"algorithm", algorithm},
          {"provenance", r.provenance},
          {"n", r.partition.ground_size()},
          {"classes", r.partition.ToVectors()},
          {"claimed_chi_bound", r.claimed_chi_bound},
          {"rank_preserving_claimed", r.rank_preserving_claimed}};
}

inline Json TraceJson(const TraceRecord& t) {
  return {{"step", t.step},
          {"case", t.label},
          {"small_component", t.small_component},
          {"parent_component", t.parent_component},
          {"potential", t.potential.ToString()}};
}

inline Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

}  // namespace matred

#endif  // MATRED_IO_HPP_

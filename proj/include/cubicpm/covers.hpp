#pragma once

// Covers of E(G) by perfect matchings: the perfect matching index, the
// defect-3 Berge cover pipeline, covers built from circuit cores, the
// auxiliary graph H# and the cyclically 4-edge-connected defect-3 verdict.

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cubicpm/arrays.hpp"
#include "cubicpm/colouring.hpp"
#include "cubicpm/families.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/matching.hpp"

namespace cubicpm {

struct BergeCover {
  std::vector<PerfectMatching> matchings;
  int size() const { return static_cast<int>(matchings.size()); }
};

inline bool covers_all_edges(const Graph& g, const std::vector<PerfectMatching>& pms) {
  std::vector<char> hit(static_cast<std::size_t>(g.size()), 0);
  for (const auto& pm : pms) {
    if (!is_perfect_matching(g, pm.edges)) return false;
    for (EdgeId e : pm.edges) hit[e] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

// Exact set cover of E(G) by at most k of the given matchings. Branches on
// the uncovered edge contained in the fewest matchings, trying matchings in
// index order, so the first cover found is deterministic. Returns sorted
// indices into pms.
inline std::optional<std::vector<int>> find_cover(const Graph& g, const std::vector<PerfectMatching>& pms, int k) {
  const int m = g.size(), half = g.order() / 2;
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(m));
  for (int i = 0; i < static_cast<int>(pms.size()); ++i) {
    for (EdgeId e : pms[i].edges) holders[e].push_back(i);
  }
  std::vector<int> hits(static_cast<std::size_t>(m), 0);
  int uncovered = m;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int budget) -> bool {
    if (uncovered == 0) return true;
    if (budget == 0 || uncovered > budget * half) return false;
    int pick = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (EdgeId e = 0; e < m; ++e) {
      if (!hits[e] && holders[e].size() < fewest) {
        fewest = holders[e].size();
        pick = e;
      }
    }
    for (int i : holders[pick]) {
      chosen.push_back(i);
      for (EdgeId e : pms[i].edges) uncovered -= hits[e]++ == 0;
      if (self(self, budget - 1)) return true;
      for (EdgeId e : pms[i].edges) uncovered += --hits[e] == 0;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, k)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

struct PmiResult {
  int value = 0;
  BergeCover witness;
  // No cover of size value - 1 exists among all perfect matchings.
  bool exhaustive = false;
  // Set when no 5-cover exists: a counterexample to Berge's conjecture.
  bool berge_counterexample = false;
  long perfect_matchings = 0;
};

struct HexCoreCertificate;

inline BergeCover berge_cover_defect3(const CubicGraph& g, const DefectResult& d);

namespace detail {

inline BergeCover colour_classes(const Graph& g, const EdgeColouring3& col) {
  BergeCover c;
  for (Colour k = 1; k <= 3; ++k) {
    PerfectMatching pm;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (col.colour[e] == k) pm.edges.push_back(e);
    }
    c.matchings.push_back(std::move(pm));
  }
  return c;
}

}  // namespace detail

// Exact perfect matching index: 3 iff 3-edge-colourable; otherwise exact set
// cover over all perfect matchings for k = 4; otherwise a 5-cover from the
// defect-3 pipeline when df = 3, or from set cover; larger values only if
// the search proves them.
inline PmiResult pmi(const CubicGraph& g, long pm_cap = kDefaultPmCap) {
  require_bridgeless(g);
  PmiResult r;
  if (auto col = find_3_edge_colouring(g)) {
    r.value = 3;
    r.witness = detail::colour_classes(g, *col);
    r.exhaustive = true;  // every vertex needs three distinct matchings
    return r;
  }
  const auto pms = enumerate_perfect_matchings(g, pm_cap);
  r.perfect_matchings = static_cast<long>(pms.size());
  if (!covers_all_edges(g, pms)) throw NoCoverFound("some edge lies in no perfect matching");
  if (auto idx = find_cover(g, pms, 4)) {
    r.value = 4;
    for (int i : *idx) r.witness.matchings.push_back(pms[i]);
    r.exhaustive = true;  // not 3-edge-colourable
    return r;
  }
  r.exhaustive = true;
  const DefectResult d = defect_from(g, pms);
  if (d.value == 3) {
    r.value = 5;
    r.witness = berge_cover_defect3(g, d);
    return r;
  }
  for (int k = 5; k <= g.size(); ++k) {
    if (auto idx = find_cover(g, pms, k)) {
      r.value = k;
      for (int i : *idx) r.witness.matchings.push_back(pms[i]);
      r.berge_counterexample = k > 5;
      return r;
    }
  }
  throw NoCoverFound("perfect matchings do not cover the edge set");
}

// A perfect matching containing at least two of the uncovered core edges
// e1, e3, e5. Tries the paths e3e4e5, e5e0e1, e1e2e3 in this order: remove
// the path's four vertices, match the rest, add the path's end edges.
inline PerfectMatching lemma_m4(const Graph& g, const HexCoreCertificate& c) {
  for (int i : {1, 3, 5}) {
    const int a = (i + 2) % 6, b = (i + 4) % 6;  // path e_a e_{a+1} e_b
    std::vector<Vertex> gone{c.core_vertices[a], c.core_vertices[(a + 1) % 6], c.core_vertices[(a + 2) % 6],
                             c.core_vertices[(a + 3) % 6]};
    auto rest = has_perfect_matching(remove_vertices(whole(g), gone));
    if (!rest) continue;
    rest->edges.push_back(c.core_edges[a]);
    rest->edges.push_back(c.core_edges[b]);
    std::sort(rest->edges.begin(), rest->edges.end());
    if (!is_perfect_matching(g, rest->edges)) throw InternalError("extended matching is not perfect");
    return *rest;
  }
  throw LemmaViolated("no antipodal path of the hexagon leaves a matchable remainder");
}

// Optimal array + lemma_m4 + (if still needed) a matching through the last
// uncovered edge.
inline BergeCover berge_cover_defect3(const CubicGraph& g, const DefectResult& d) {
  if (d.value != 3) throw PreconditionDefectNot3("defect is " + std::to_string(d.value));
  const HexCoreCertificate cert = hex_certificate_from(g, d.witness);
  BergeCover cover;
  for (const auto& pm : d.witness.m) cover.matchings.push_back(pm);
  const PerfectMatching m4 = lemma_m4(g, cert);
  cover.matchings.push_back(m4);
  for (EdgeId e : d.uncovered) {
    if (m4.contains(e)) continue;
    auto m5 = pm_containing(g, {e});
    if (!m5) throw InternalError("no perfect matching through an edge of a bridgeless cubic graph");
    cover.matchings.push_back(*m5);
  }
  if (cover.size() > 5 || !covers_all_edges(g, cover.matchings)) throw InternalError("defect-3 cover is invalid");
  return cover;
}

inline BergeCover berge_cover_defect3(const CubicGraph& g, long pm_cap = kDefaultPmCap) {
  return berge_cover_defect3(g, defect(g, pm_cap));
}

// Cover of size at most 3 + ceil(d/4) for an array whose core is a single
// even circuit of length d >= 6 in a cyclically 4-edge-connected graph: each
// extra matching contains two uncovered edges joined by a doubly covered one.
inline BergeCover cover_circuit_core(const CubicGraph& g, const ThreeArray& a) {
  if (cyclic_edge_connectivity(g).value < 4) throw PreconditionViolated("graph is not cyclically 4-edge-connected");
  const Core core = core_of(g, a);
  const auto comps = components(core.subgraph);
  const int d = static_cast<int>(core.subgraph.edges.size());
  bool circuit = comps.size() == 1 && core.subgraph.order() == d && d >= 6 && d % 2 == 0 && core.triply.empty() &&
                 static_cast<int>(core.uncovered.size()) == d / 2;
  for (Vertex v : core.subgraph.vertices) {
    int deg = 0;
    for (EdgeId e : g.incident(v)) deg += core.subgraph.has_edge(e) ? 1 : 0;
    circuit = circuit && deg == 2;
  }
  if (!circuit) throw PreconditionViolated("core is not a single even circuit of length >= 6");
  const auto uncovered = detail::membership(g.size(), core.uncovered);
  // Walk the circuit from its smallest vertex starting with an uncovered edge.
  std::vector<Vertex> cv;
  std::vector<EdgeId> ce;
  Vertex v = core.subgraph.vertices.front();
  EdgeId e = -1;
  for (EdgeId x : g.incident(v)) {
    if (core.subgraph.has_edge(x) && uncovered[x]) e = x;
  }
  for (int i = 0; i < d; ++i) {
    cv.push_back(v);
    ce.push_back(e);
    const Vertex w = g.edge(e).other(v);
    EdgeId next = -1;
    for (EdgeId x : g.incident(w)) {
      if (x != e && core.subgraph.has_edge(x)) next = x;
    }
    v = w;
    e = next;
  }
  BergeCover cover;
  for (const auto& pm : a.m) cover.matchings.push_back(pm);
  const int paths = (d / 2 + 1) / 2;  // ceil(d / 4)
  for (int t = 0; t < paths; ++t) {
    int s = 4 * t;
    if (s + 2 >= d) s = d - 2;  // last uncovered edge pairs with c_0
    std::vector<Vertex> gone{cv[s], cv[(s + 1) % d], cv[(s + 2) % d], cv[(s + 3) % d]};
    auto rest = has_perfect_matching(remove_vertices(whole(g), gone));
    if (!rest) throw CorePathMatchingFailed("core path starting at edge " + std::to_string(ce[s]) + " is not extendable");
    rest->edges.push_back(ce[s]);
    rest->edges.push_back(ce[(s + 2) % d]);
    std::sort(rest->edges.begin(), rest->edges.end());
    cover.matchings.push_back(*rest);
  }
  if (!covers_all_edges(g, cover.matchings)) throw InternalError("circuit-core cover is invalid");
  return cover;
}

struct HSharpGraph {
  CubicGraph graph;
  Vertex s = -1;
  Vertex t = -1;
  EdgeId e = -1;  // u2 - u5
  EdgeId f = -1;  // s - t
  std::vector<Vertex> vertex_origin;  // H# vertex -> G vertex, -1 for s and t
  std::vector<EdgeId> edge_origin;    // H# edge -> G edge, -1 for e and f
  // Bipartition of H# - {e, f} when it is bipartite.
  std::optional<std::vector<int>> bipartition;
};

// H# from H+ = G - E(C) with labels shifted by `shift` (0..2): delete f2 and
// f5, join u2 - u5 by e, merge v0, v1 into s and v3, v4 into t, join s - t
// by f.
inline HSharpGraph build_h_sharp(const Graph& g, const HexCoreCertificate& c, int shift = 0) {
  auto at = [&](const auto& arr, int i) { return arr[(i + shift) % 6]; };
  if (at(c.outer_ends, 2) == at(c.outer_ends, 5)) throw CoincidentEndpoints("u2 = u5");
  const auto on_c = detail::membership(g.order(), c.core_vertices);
  for (Vertex u : c.outer_ends) {
    if (on_c[u]) throw PreconditionViolated("hexagon has a chord");
  }
  HSharpGraph hs;
  std::vector<Vertex> id(static_cast<std::size_t>(g.order()), -1);
  int n = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!on_c[v]) {
      id[v] = n++;
      hs.vertex_origin.push_back(v);
    }
  }
  hs.s = n++;
  hs.t = n++;
  hs.vertex_origin.push_back(-1);
  hs.vertex_origin.push_back(-1);
  id[at(c.core_vertices, 0)] = id[at(c.core_vertices, 1)] = hs.s;
  id[at(c.core_vertices, 3)] = id[at(c.core_vertices, 4)] = hs.t;
  Graph h(n);
  const auto core_edge = detail::membership(g.size(), c.core_edges);
  for (EdgeId x = 0; x < g.size(); ++x) {
    if (core_edge[x] || x == at(c.cut_edges, 2) || x == at(c.cut_edges, 5)) continue;
    h.add_edge(id[g.edge(x).u], id[g.edge(x).v]);
    hs.edge_origin.push_back(x);
  }
  hs.e = h.add_edge(id[at(c.outer_ends, 2)], id[at(c.outer_ends, 5)]);
  hs.f = h.add_edge(hs.s, hs.t);
  hs.edge_origin.push_back(-1);
  hs.edge_origin.push_back(-1);
  hs.graph = CubicGraph(std::move(h));
  const std::array<EdgeId, 2> ef{hs.e, hs.f};
  hs.bipartition = bipartition(hs.graph, ef);
  return hs;
}

// Explicit isomorphism search; returns the image of each vertex of a in b.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return std::nullopt;
  auto multiplicity = [](const Graph& g) {
    std::vector<int> mult(static_cast<std::size_t>(g.order()) * g.order(), 0);
    for (const Edge& e : g.edges()) {
      ++mult[static_cast<std::size_t>(e.u) * g.order() + e.v];
      if (!e.is_loop()) ++mult[static_cast<std::size_t>(e.v) * g.order() + e.u];
    }
    return mult;
  };
  const auto ma = multiplicity(a), mb = multiplicity(b);
  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (Vertex x = 0; x <= v && ok; ++x) {
        const Vertex y = x == v ? w : map[x];
        ok = ma[static_cast<std::size_t>(v) * n + x] == mb[static_cast<std::size_t>(w) * n + y];
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

// Fingerprint (10 vertices, 15 edges, simple, girth 5) then an explicit
// isomorphism to the stored Petersen graph.
inline bool is_petersen(const Graph& g) {
  if (g.order() != 10 || g.size() != 15 || !g.is_cubic() || girth(g) != 5) return false;
  return find_isomorphism(g, petersen()).has_value();
}

struct Theorem2Verdict {
  enum class Kind { FourCover, Petersen, Counterexample };
  Kind kind = Kind::Counterexample;
  std::optional<BergeCover> cover;
  std::optional<std::vector<Vertex>> isomorphism;
  DefectResult defect;
  int cyclic_connectivity = 0;
};

inline const char* to_string(Theorem2Verdict::Kind k) {
  switch (k) {
    case Theorem2Verdict::Kind::FourCover: return "four-cover";
    case Theorem2Verdict::Kind::Petersen: return "petersen";
    case Theorem2Verdict::Kind::Counterexample: return "counterexample";
  }
  return "?";
}

// For cyclically 4-edge-connected graphs of defect 3: a 4-cover, or the
// Petersen graph. Anything else is returned as a counterexample verdict.
inline Theorem2Verdict theorem2_verify(const CubicGraph& g, long pm_cap = kDefaultPmCap) {
  require_bridgeless(g);
  Theorem2Verdict v;
  v.cyclic_connectivity = cyclic_edge_connectivity(g).value;
  if (v.cyclic_connectivity < 4) {
    throw PreconditionViolated("cyclic connectivity " + std::to_string(v.cyclic_connectivity) + " < 4");
  }
  const auto pms = enumerate_perfect_matchings(g, pm_cap);
  v.defect = defect_from(g, pms);
  if (v.defect.value != 3) throw PreconditionViolated("defect is " + std::to_string(v.defect.value));
  if (auto idx = find_cover(g, pms, 4)) {
    v.kind = Theorem2Verdict::Kind::FourCover;
    v.cover = BergeCover{};
    for (int i : *idx) v.cover->matchings.push_back(pms[i]);
    return v;
  }
  if (g.order() == 10 && girth(g) == 5) {
    v.isomorphism = find_isomorphism(g, petersen());
    if (v.isomorphism) {
      v.kind = Theorem2Verdict::Kind::Petersen;
      return v;
    }
  }
  v.kind = Theorem2Verdict::Kind::Counterexample;
  return v;
}

}  // namespace cubicpm

#pragma once

// 3-arrays of perfect matchings: the induced multi-colouring phi, the
// characteristic Z2^3 flow chi, cores, the colouring defect, and the
// hexagonal-core certificate for defect 3.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubicpm/colouring.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/matching.hpp"

namespace cubicpm {

inline constexpr long kDefaultPmCap = 100000;

struct ThreeArray {
  std::array<PerfectMatching, 3> m;
  friend bool operator==(const ThreeArray&, const ThreeArray&) = default;
};

// phi(e) as a bit mask over colours: bit (i-1) set iff e is in M_i.
struct PhiColouring {
  std::vector<std::uint8_t> mask;

  int weight(EdgeId e) const { return __builtin_popcount(mask.at(e)); }
  std::string label(EdgeId e) const {
    std::string s;
    for (int i = 0; i < 3; ++i) {
      if (mask.at(e) >> i & 1) s.push_back(static_cast<char>('1' + i));
    }
    return s;
  }
};

// chi(e) = (x1, x2, x3) packed as bits; x_i = 0 iff e is in M_i.
struct CharFlow {
  std::vector<std::uint8_t> value;
};

struct Core {
  Subgraph subgraph;  // induced by edges that are not simply covered
  std::vector<EdgeId> uncovered;
  std::vector<EdgeId> doubly;
  std::vector<EdgeId> triply;
};

inline bool is_three_array(const Graph& g, const ThreeArray& a) {
  return std::all_of(a.m.begin(), a.m.end(), [&](const PerfectMatching& pm) { return is_perfect_matching(g, pm.edges); });
}

inline PhiColouring phi_of(const Graph& g, const ThreeArray& a) {
  PhiColouring phi{std::vector<std::uint8_t>(static_cast<std::size_t>(g.size()), 0)};
  for (int i = 0; i < 3; ++i) {
    for (EdgeId e : a.m[i].edges) phi.mask.at(e) |= static_cast<std::uint8_t>(1 << i);
  }
  return phi;
}

inline CharFlow chi_from_phi(const PhiColouring& phi) {
  CharFlow chi{phi.mask};
  for (auto& x : chi.value) x = static_cast<std::uint8_t>(~x & 7);
  return chi;
}

inline PhiColouring phi_from_chi(const CharFlow& chi) {
  PhiColouring phi{chi.value};
  for (auto& x : phi.mask) x = static_cast<std::uint8_t>(~x & 7);
  return phi;
}

inline CharFlow chi_of(const Graph& g, const ThreeArray& a) {
  CharFlow chi{std::vector<std::uint8_t>(static_cast<std::size_t>(g.size()), 7)};
  for (int i = 0; i < 3; ++i) {
    for (EdgeId e : a.m[i].edges) chi.value.at(e) &= static_cast<std::uint8_t>(~(1 << i));
  }
  if (phi_from_chi(chi).mask != phi_of(g, a).mask) throw InternalError("phi and chi disagree");
  return chi;
}

// Kirchhoff's law in Z2^3 at every vertex (a loop contributes twice).
inline bool satisfies_kirchhoff(const Graph& g, const CharFlow& chi) {
  for (Vertex v = 0; v < g.order(); ++v) {
    int s = 0;
    for (EdgeId e : g.incident(v)) s ^= chi.value.at(e);
    if (s != 0) return false;
  }
  return true;
}

inline Core core_of(const Graph& g, const ThreeArray& a) {
  const auto phi = phi_of(g, a);
  Core core;
  std::vector<Vertex> verts;
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const int w = phi.weight(e);
    if (w == 1) continue;
    edges.push_back(e);
    verts.push_back(g.edge(e).u);
    verts.push_back(g.edge(e).v);
    (w == 0 ? core.uncovered : w == 2 ? core.doubly : core.triply).push_back(e);
  }
  core.subgraph = {&g, detail::sorted_unique(verts), edges};
  return core;
}

inline int uncovered_count(const Graph& g, const ThreeArray& a) {
  return static_cast<int>(core_of(g, a).uncovered.size());
}

struct NoTriplyReport {
  bool no_triply = false;
  bool phi_proper = false;
  bool chi_nowhere_zero = false;
  bool equivalent() const { return no_triply == phi_proper && phi_proper == chi_nowhere_zero; }
};

inline NoTriplyReport check_no_triply(const Graph& g, const ThreeArray& a) {
  const auto phi = phi_of(g, a);
  const auto chi = chi_of(g, a);
  NoTriplyReport r;
  r.no_triply = std::none_of(phi.mask.begin(), phi.mask.end(), [](std::uint8_t m) { return m == 7; });
  r.chi_nowhere_zero = std::none_of(chi.value.begin(), chi.value.end(), [](std::uint8_t x) { return x == 0; });
  r.phi_proper = true;
  for (Vertex v = 0; v < g.order() && r.phi_proper; ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (phi.mask[inc[i]] == phi.mask[inc[j]]) r.phi_proper = false;
      }
    }
  }
  if (!r.equivalent()) throw InternalError("no-triply equivalence fails on this array");
  return r;
}

struct DefectResult {
  int value = 0;
  ThreeArray witness;
  std::vector<EdgeId> uncovered;
  long perfect_matchings = 0;  // size of the enumerated pool
};

namespace detail {

// Fixed-width edge bitset for fast union/popcount.
struct EdgeBits {
  std::vector<std::uint64_t> w;
  EdgeBits() = default;
  explicit EdgeBits(int m) : w(static_cast<std::size_t>((m + 63) / 64), 0) {}
  void set(EdgeId e) { w[e / 64] |= std::uint64_t{1} << (e % 64); }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
};

inline std::vector<EdgeBits> to_bits(const Graph& g, const std::vector<PerfectMatching>& pms) {
  std::vector<EdgeBits> out;
  out.reserve(pms.size());
  for (const auto& pm : pms) {
    EdgeBits b(g.size());
    for (EdgeId e : pm.edges) b.set(e);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace detail

// Exact defect over all unordered triples of the given perfect matchings.
// Pairs whose union cannot be completed below the current best are pruned by
// the bound |M3 \ (M1 u M2)| <= |V|/2.
inline DefectResult defect_from(const Graph& g, const std::vector<PerfectMatching>& pms) {
  if (pms.empty()) throw NoCoverFound("graph has no perfect matching");
  const auto bits = detail::to_bits(g, pms);
  const int m = g.size(), half = g.order() / 2;
  const std::size_t words = bits.front().w.size();
  const std::size_t p = pms.size();
  int best = m + 1;
  std::array<std::size_t, 3> arg{0, 0, 0};
  std::vector<std::uint64_t> uni(words);
  for (std::size_t i = 0; i < p && best > 0; ++i) {
    for (std::size_t j = i; j < p && best > 0; ++j) {
      int covered = 0;
      for (std::size_t w = 0; w < words; ++w) {
        uni[w] = bits[i].w[w] | bits[j].w[w];
        covered += __builtin_popcountll(uni[w]);
      }
      if (m - covered - half >= best) continue;
      for (std::size_t k = j; k < p; ++k) {
        int extra = 0;
        for (std::size_t w = 0; w < words; ++w) extra += __builtin_popcountll(bits[k].w[w] & ~uni[w]);
        const int left = m - covered - extra;
        if (left < best) {
          best = left;
          arg = {i, j, k};
          if (left == m - covered - half || best == 0) break;
        }
      }
    }
  }
  DefectResult r;
  r.value = best;
  r.witness = ThreeArray{{pms[arg[0]], pms[arg[1]], pms[arg[2]]}};
  r.uncovered = core_of(g, r.witness).uncovered;
  r.perfect_matchings = static_cast<long>(p);
  if (static_cast<int>(r.uncovered.size()) != best) throw InternalError("defect witness mismatch");
  return r;
}

inline DefectResult defect(const CubicGraph& g, long pm_cap = kDefaultPmCap) {
  require_bridgeless(g);
  return defect_from(g, enumerate_perfect_matchings(g, pm_cap));
}

struct CoreComponentInfo {
  enum class Shape { EvenCircuit, SubdividedCubic };
  Shape shape = Shape::EvenCircuit;
  int vertices = 0;
  int edges = 0;
  int uncovered = 0;
};

struct CoreStructureReport {
  std::vector<CoreComponentInfo> components;
  bool heavy_edges_form_perfect_matching = true;  // doubly or triply covered
};

// Checks the optimal-core structure: every component is an even circuit of
// length >= 6 or a subdivision of a cubic graph, and the doubly and triply
// covered edges form a perfect matching of the core. The array must be
// optimal; violations raise NotOptimalEvidence.
inline CoreStructureReport check_core_structure(const Graph& g, const ThreeArray& a) {
  const Core core = core_of(g, a);
  CoreStructureReport rep;
  std::vector<EdgeId> heavy = core.doubly;
  heavy.insert(heavy.end(), core.triply.begin(), core.triply.end());
  std::sort(heavy.begin(), heavy.end());
  rep.heavy_edges_form_perfect_matching = is_perfect_matching(core.subgraph, heavy);
  if (!rep.heavy_edges_form_perfect_matching) {
    throw NotOptimalEvidence("doubly and triply covered edges are not a perfect matching of the core");
  }
  const auto uncovered = detail::membership(g.size(), core.uncovered);
  for (const auto& comp : components(core.subgraph)) {
    CoreComponentInfo info;
    info.vertices = comp.order();
    info.edges = static_cast<int>(comp.edges.size());
    for (EdgeId e : comp.edges) info.uncovered += uncovered[e];
    int deg3 = 0;
    for (Vertex v : comp.vertices) {
      int d = 0;
      for (EdgeId e : g.incident(v)) d += comp.has_edge(e) ? 1 : 0;
      if (d < 2 || d > 3) throw NotOptimalEvidence("core vertex of degree " + std::to_string(d));
      deg3 += d == 3;
    }
    if (deg3 == 0) {
      if (info.edges % 2 != 0 || info.edges < 6) {
        throw NotOptimalEvidence("core circuit of length " + std::to_string(info.edges));
      }
      info.shape = CoreComponentInfo::Shape::EvenCircuit;
    } else {
      info.shape = CoreComponentInfo::Shape::SubdividedCubic;
    }
    rep.components.push_back(info);
  }
  return rep;
}

inline CoreStructureReport check_core_structure(const Graph& g, const DefectResult& d) {
  return check_core_structure(g, d.witness);
}

// Hexagonal core C = (e0 ... e5) with v_i = e_{i-1} n e_i, f_i the third edge
// at v_i and u_i its other end. The labelling puts the uncovered edges at
// e1, e3, e5 (the rotated labelling, uncovered at e0, e2, e4, is also
// accepted by the validator).
struct HexCoreCertificate {
  std::array<EdgeId, 6> core_edges{};
  std::array<Vertex, 6> core_vertices{};
  std::array<EdgeId, 6> cut_edges{};
  std::array<Vertex, 6> outer_ends{};
  ThreeArray array;
  EdgeColouring3 colouring;  // proper 3-edge-colouring of G - E(C)
};

// Subgraph G - E(C) on all vertices.
inline Subgraph outside_core(const Graph& g, const HexCoreCertificate& c) {
  return remove_edges(whole(g), c.core_edges);
}

// Returns an empty string when c is a valid hexagonal-core certificate of g.
inline std::string hex_certificate_violation(const Graph& g, const HexCoreCertificate& c) {
  for (int i = 0; i < 6; ++i) {
    const Edge& e = g.edge(c.core_edges[i]);
    const Vertex a = c.core_vertices[i], b = c.core_vertices[(i + 1) % 6];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return "core edge e" + std::to_string(i) + " misplaced";
    const Edge& f = g.edge(c.cut_edges[i]);
    if (!f.touches(a) || f.other(a) != c.outer_ends[i]) return "cut edge f" + std::to_string(i) + " misplaced";
  }
  const auto cyc = detail::sorted_unique({c.core_vertices.begin(), c.core_vertices.end()});
  if (cyc.size() != 6) return "core vertices not distinct";
  if (induced_subgraph(g, cyc).edges.size() != 6) return "core is not an induced 6-cycle";
  const auto cut = boundary(g, cyc);
  auto listed = std::vector<EdgeId>(c.cut_edges.begin(), c.cut_edges.end());
  std::sort(listed.begin(), listed.end());
  if (cut != listed) return "cut edges do not match delta(C)";
  if (!is_proper_colouring_of(outside_core(g, c), c.colouring)) return "colouring of G - E(C) not proper";
  for (EdgeId e : c.core_edges) {
    if (c.colouring.colour.at(e) != 0) return "core edge coloured";
  }
  // Cut colours read cyclically must be aabbcc up to rotation.
  const auto vec = colour_vector_of(c.colouring, c.cut_edges);
  bool pattern = false;
  for (int r = 0; r < 2 && !pattern; ++r) {
    const Colour a = vec[r], b = vec[(r + 2) % 6], d = vec[(r + 4) % 6];
    pattern = vec[r + 1] == a && vec[(r + 3) % 6] == b && vec[(r + 5) % 6] == d && a != b && b != d && a != d;
  }
  if (!pattern) return "cut colours are not 1,1,2,2,3,3 cyclically";
  if (is_three_array(g, c.array)) {
    const auto core = core_of(g, c.array);
    auto ce = std::vector<EdgeId>(c.core_edges.begin(), c.core_edges.end());
    std::sort(ce.begin(), ce.end());
    if (core.subgraph.edges != ce) return "array core is not the hexagon";
    std::vector<EdgeId> odd{c.core_edges[1], c.core_edges[3], c.core_edges[5]};
    std::vector<EdgeId> even{c.core_edges[0], c.core_edges[2], c.core_edges[4]};
    std::sort(odd.begin(), odd.end());
    std::sort(even.begin(), even.end());
    if (core.uncovered != odd && core.uncovered != even) return "uncovered edges do not alternate on C";
  } else {
    return "array is not a 3-array";
  }
  return {};
}

// Builds the certificate from an optimal array with a hexagonal core.
inline HexCoreCertificate hex_certificate_from(const Graph& g, const ThreeArray& a) {
  const Core core = core_of(g, a);
  if (core.subgraph.edges.size() != 6 || core.subgraph.order() != 6 || core.uncovered.size() != 3) {
    throw InternalError("core of an optimal array of a defect-3 graph is not a 6-cycle");
  }
  const auto uncovered = detail::membership(g.size(), core.uncovered);
  // Walk the hexagon from its smallest vertex along its doubly covered edge,
  // so that e0 is doubly covered and e1 uncovered.
  const Vertex start = core.subgraph.vertices.front();
  EdgeId e0 = -1;
  for (EdgeId e : g.incident(start)) {
    if (core.subgraph.has_edge(e) && !uncovered[e]) e0 = e;
  }
  HexCoreCertificate c;
  const bool built = e0 >= 0;
  if (built) {
    Vertex v = start;
    EdgeId e = e0;
    for (int i = 0; i < 6; ++i) {
      c.core_vertices[i] = v;
      c.core_edges[i] = e;
      const Vertex w = g.edge(e).other(v);
      EdgeId next = -1;
      for (EdgeId x : g.incident(w)) {
        if (x != e && core.subgraph.has_edge(x)) next = x;
      }
      v = w;
      e = next;
    }
  }
  if (!built) throw InternalError("hexagon has no doubly covered edge at its first vertex");
  for (int i = 0; i < 6; ++i) {
    const Vertex v = c.core_vertices[i];
    for (EdgeId x : g.incident(v)) {
      if (!core.subgraph.has_edge(x)) {
        c.cut_edges[i] = x;
        c.outer_ends[i] = g.edge(x).other(v);
      }
    }
  }
  const auto phi = phi_of(g, a);
  c.colouring.colour.assign(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (core.subgraph.has_edge(e)) continue;
    const std::uint8_t m = phi.mask[e];
    c.colouring.colour[e] = static_cast<Colour>(m == 1 ? 1 : m == 2 ? 2 : 3);
  }
  c.array = a;
  if (auto why = hex_certificate_violation(g, c); !why.empty()) throw InternalError("hex certificate invalid: " + why);
  return c;
}

// Certificate iff df(g) = 3. Also checks on the instance that the optimal
// core is a 6-cycle and that the certificate satisfies the colouring form.
inline std::optional<HexCoreCertificate> hexagonal_core_certificate(const CubicGraph& g, long pm_cap = kDefaultPmCap) {
  const DefectResult d = defect(g, pm_cap);
  if (d.value != 3) return std::nullopt;
  return hex_certificate_from(g, d.witness);
}

inline std::optional<HexCoreCertificate> hexagonal_core_certificate(const CubicGraph& g, const DefectResult& d) {
  if (d.value != 3) return std::nullopt;
  return hex_certificate_from(g, d.witness);
}

// Some 3-edge-colouring of G - E(C) gives the cut the cyclic pattern
// 1,1,2,2,3,3 up to colour permutation and rotation.
inline bool hexagonal_boundary_colouring_exists(const Graph& g, const HexCoreCertificate& c) {
  for (const auto& v : realisable_vectors(outside_core(g, c), c.cut_edges)) {
    for (int r = 0; r < 2; ++r) {
      if (v[r] == v[r + 1] && v[r + 2] == v[(r + 3) % 6] && v[(r + 4) % 6] == v[(r + 5) % 6] &&
          v[r] != v[r + 2] && v[r + 2] != v[(r + 4) % 6] && v[r] != v[(r + 4) % 6]) {
        return true;
      }
    }
  }
  return false;
}

// Types of colourings of H+ = G - E(C) read on (f0, ..., f5).
inline std::set<ColouringType> admissible_types(const Graph& g, const HexCoreCertificate& c) {
  return types_of(realisable_vectors(outside_core(g, c), c.cut_edges));
}

// C+ : the hexagon with six pendant edges whose outer ends are distinct.
// Vertices 0..5 are v0..v5, 6..11 the outer ends; edges 0..5 are e0..e5 and
// 6..11 are f0..f5.
inline Graph hexagon_with_pendants() {
  Graph h(12);
  for (int i = 0; i < 6; ++i) h.add_edge(i, (i + 1) % 6);
  for (int i = 0; i < 6; ++i) h.add_edge(i, 6 + i);
  return h;
}

inline std::set<ColouringType> admissible_types_core_side() {
  static const Graph h = hexagon_with_pendants();
  return types_of(realisable_vectors(whole(h), {6, 7, 8, 9, 10, 11}));
}

struct ShortCircuitReport {
  int triangles = 0;
  int quadrilaterals = 0;
  int meeting_core = 0;
  bool holds = true;
};

// Every triangle or quadrilateral meeting the hexagon shares with it exactly
// one uncovered edge and nothing else.
inline ShortCircuitReport check_lemma_3_5(const Graph& g, const HexCoreCertificate& c) {
  ShortCircuitReport rep;
  const auto on_c = detail::membership(g.order(), c.core_vertices);
  const auto core_edge = detail::membership(g.size(), c.core_edges);
  const auto uncovered = detail::membership(g.size(), core_of(g, c.array).uncovered);
  for (const auto& q : short_circuits(g, 4)) {
    if (q.length() < 3) continue;
    (q.length() == 3 ? rep.triangles : rep.quadrilaterals)++;
    std::vector<Vertex> shared_v;
    std::vector<EdgeId> shared_e;
    for (Vertex v : q.vertices) {
      if (on_c[v]) shared_v.push_back(v);
    }
    for (EdgeId e : q.edges) {
      if (core_edge[e]) shared_e.push_back(e);
    }
    if (shared_v.empty()) continue;
    ++rep.meeting_core;
    const bool single = shared_e.size() == 1 && shared_v.size() == 2 && uncovered[shared_e[0]];
    if (!single) rep.holds = false;
  }
  return rep;
}

}  // namespace cubicpm

#pragma once

// Proper 3-edge-colourings of subcubic graphs, Kempe chains, the parity
// check on edge cuts, and colour vectors on ordered 6-edge cuts together
// with their canonical types.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubicpm/graph.hpp"

namespace cubicpm {

using Colour = std::uint8_t;  // 1, 2, 3; 0 = uncoloured

// Colour per parent edge id; edges outside the coloured subgraph hold 0.
struct EdgeColouring3 {
  std::vector<Colour> colour;

  Colour operator[](EdgeId e) const { return colour.at(e); }
  friend bool operator==(const EdgeColouring3&, const EdgeColouring3&) = default;
};

// No two equally coloured edges share a vertex (a coloured loop is never
// proper) and every colour is in {0, 1, 2, 3}.
inline bool is_proper(const Graph& g, const EdgeColouring3& c) {
  if (static_cast<int>(c.colour.size()) != g.size()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    int seen = 0;
    for (EdgeId e : g.incident(v)) {
      const Colour k = c.colour[e];
      if (k > 3) return false;
      if (k == 0) continue;
      if (seen & (1 << k)) return false;
      seen |= 1 << k;
    }
  }
  return true;
}

// Proper, and every edge of h is coloured.
inline bool is_proper_colouring_of(const Subgraph& h, const EdgeColouring3& c) {
  if (!is_proper(*h.parent, c)) return false;
  return std::all_of(h.edges.begin(), h.edges.end(), [&](EdgeId e) { return c.colour[e] != 0; });
}

namespace detail {

// Exhaustive backtracking over the edges of h, most constrained edge first,
// ties broken by edge id. visit returns true to stop the search.
inline void search_colourings(const Subgraph& h, const std::map<EdgeId, Colour>& fixed,
                              const std::function<bool(const EdgeColouring3&)>& visit) {
  const Graph& g = *h.parent;
  EdgeColouring3 col{std::vector<Colour>(static_cast<std::size_t>(g.size()), 0)};
  std::vector<int> used(static_cast<std::size_t>(g.order()), 0);
  for (auto [e, k] : fixed) {
    if (!h.has_edge(e) || k < 1 || k > 3) throw ConstraintConflict("constraint on edge " + std::to_string(e));
    const Edge& ed = g.edge(e);
    if (ed.is_loop() || (used[ed.u] & (1 << k)) || (used[ed.v] & (1 << k))) {
      throw ConstraintConflict("constraints are not a proper partial colouring at edge " + std::to_string(e));
    }
    col.colour[e] = k;
    used[ed.u] |= 1 << k;
    used[ed.v] |= 1 << k;
  }
  std::vector<EdgeId> open;
  for (EdgeId e : h.edges) {
    if (!col.colour[e]) {
      if (g.edge(e).is_loop()) return;  // a loop can never be properly coloured
      open.push_back(e);
    }
  }
  std::vector<char> done(static_cast<std::size_t>(g.size()), 0);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t left) -> void {
    if (left == 0) {
      stop = visit(col);
      return;
    }
    EdgeId pick = -1;
    int best = 4;
    for (EdgeId e : open) {
      if (done[e]) continue;
      const int avail = 3 - __builtin_popcount(static_cast<unsigned>((used[g.edge(e).u] | used[g.edge(e).v]) & 0b1110));
      if (avail < best) {
        best = avail;
        pick = e;
        if (avail == 0) break;
      }
    }
    if (best == 0) return;
    const Edge& ed = g.edge(pick);
    done[pick] = 1;
    for (Colour k = 1; k <= 3 && !stop; ++k) {
      if ((used[ed.u] | used[ed.v]) & (1 << k)) continue;
      col.colour[pick] = k;
      used[ed.u] |= 1 << k;
      used[ed.v] |= 1 << k;
      self(self, left - 1);
      used[ed.u] &= ~(1 << k);
      used[ed.v] &= ~(1 << k);
      col.colour[pick] = 0;
    }
    done[pick] = 0;
  };
  rec(rec, open.size());
}

}  // namespace detail

// A proper 3-edge-colouring of h extending the constraints, or nothing; the
// search is exhaustive, so nothing means no such colouring exists.
inline std::optional<EdgeColouring3> find_3_edge_colouring(const Subgraph& h,
                                                           const std::map<EdgeId, Colour>& constraints = {}) {
  std::optional<EdgeColouring3> found;
  std::map<EdgeId, Colour> fixed = constraints;
  if (fixed.empty()) {
    // Colours are interchangeable: pin the edges at the first vertex that has
    // any edge in h.
    for (Vertex v : h.vertices) {
      std::vector<EdgeId> at;
      for (EdgeId e : h.parent->incident(v)) {
        if (h.has_edge(e) && std::find(at.begin(), at.end(), e) == at.end()) at.push_back(e);
      }
      if (at.empty()) continue;
      bool loop = false;
      for (EdgeId e : at) loop = loop || h.parent->edge(e).is_loop();
      if (loop) return std::nullopt;
      for (std::size_t i = 0; i < at.size(); ++i) fixed[at[i]] = static_cast<Colour>(i + 1);
      break;
    }
  }
  detail::search_colourings(h, fixed, [&](const EdgeColouring3& c) {
    found = c;
    return true;
  });
  return found;
}

inline std::optional<EdgeColouring3> find_3_edge_colouring(const Graph& g) {
  return find_3_edge_colouring(whole(g));
}

// Every proper 3-edge-colouring of h (all colour permutations included).
inline std::vector<EdgeColouring3> enumerate_3_edge_colourings(const Subgraph& h, long cap = 1'000'000) {
  std::vector<EdgeColouring3> out;
  detail::search_colourings(h, {}, [&](const EdgeColouring3& c) {
    if (static_cast<long>(out.size()) >= cap) throw CapExceeded("more than " + std::to_string(cap) + " colourings");
    out.push_back(c);
    return false;
  });
  return out;
}

// For each colour, the number of cut edges carrying it has the parity of the
// cut size.
inline bool parity_check(const EdgeColouring3& col, std::span<const EdgeId> cut) {
  std::array<int, 4> count{};
  for (EdgeId e : cut) {
    const Colour k = col.colour.at(e);
    if (k == 0) throw UncolouredEdgeInCut("edge " + std::to_string(e) + " is uncoloured");
    ++count[k];
  }
  const int parity = static_cast<int>(cut.size()) % 2;
  return count[1] % 2 == parity && count[2] % 2 == parity && count[3] % 2 == parity;
}

inline bool parity_check(const EdgeColouring3& col, const EdgeCut& cut) { return parity_check(col, cut.edges); }

struct KempeChain {
  enum class Kind { Path, Circuit };
  Colour first = 1;
  Colour second = 2;
  std::vector<EdgeId> edges;  // in walk order
  Kind kind = Kind::Path;
};

// The maximal (i, j)-alternating walk through start. Paths are listed from
// one end to the other; circuits start at start.
inline KempeChain kempe_chain(const Graph& g, const EdgeColouring3& col, EdgeId start, Colour i, Colour j) {
  const Colour c0 = col.colour.at(start);
  if (i == j || (c0 != i && c0 != j)) throw StartColourMismatch("start edge colour is not in the pair");
  KempeChain chain{i, j, {start}, KempeChain::Kind::Path};
  auto next_at = [&](Vertex v, EdgeId from) -> EdgeId {
    const Colour want = col.colour[from] == i ? j : i;
    for (EdgeId e : g.incident(v)) {
      if (e != from && col.colour[e] == want) return e;
    }
    return -1;
  };
  // Walk forward from start's v end.
  std::vector<EdgeId> forward;
  Vertex at = g.edge(start).v;
  EdgeId cur = start;
  for (;;) {
    const EdgeId nx = next_at(at, cur);
    if (nx < 0) break;
    if (nx == start) {
      chain.edges.insert(chain.edges.end(), forward.begin(), forward.end());
      chain.kind = KempeChain::Kind::Circuit;
      return chain;
    }
    forward.push_back(nx);
    at = g.edge(nx).other(at);
    cur = nx;
  }
  std::vector<EdgeId> backward;
  at = g.edge(start).u;
  cur = start;
  for (;;) {
    const EdgeId nx = next_at(at, cur);
    if (nx < 0) break;
    backward.push_back(nx);
    at = g.edge(nx).other(at);
    cur = nx;
  }
  chain.edges.assign(backward.rbegin(), backward.rend());
  chain.edges.push_back(start);
  chain.edges.insert(chain.edges.end(), forward.begin(), forward.end());
  return chain;
}

// Interchanges the chain's two colours. Throws StaleChain unless the chain is
// exactly the maximal chain of col through its edges.
inline EdgeColouring3 kempe_switch(const Graph& g, const EdgeColouring3& col, const KempeChain& chain) {
  if (chain.edges.empty()) throw StaleChain("empty chain");
  for (EdgeId e : chain.edges) {
    const Colour k = col.colour.at(e);
    if (k != chain.first && k != chain.second) throw StaleChain("edge " + std::to_string(e) + " off the colour pair");
  }
  const auto fresh = kempe_chain(g, col, chain.edges.front(), chain.first, chain.second);
  auto a = fresh.edges, b = chain.edges;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || fresh.kind != chain.kind) throw StaleChain("chain does not match the colouring");
  EdgeColouring3 out = col;
  for (EdgeId e : chain.edges) out.colour[e] = col.colour[e] == chain.first ? chain.second : chain.first;
  return out;
}

// Colours as elements of Z2 x Z2: 1 = (0,1), 2 = (1,0), 3 = (1,1), so the
// group sum is bitwise xor of the colour values.
inline int z2z2_sum(std::span<const Colour> cs) {
  int s = 0;
  for (Colour c : cs) s ^= c;
  return s;
}

// A sequence of six colours on an ordered 6-edge cut whose Z2 x Z2 sum is 0.
class ColourVector {
 public:
  explicit ColourVector(std::array<Colour, 6> c) : c_(c) {
    for (Colour k : c_) {
      if (k < 1 || k > 3) throw ParityViolation("colour out of range");
    }
    if (z2z2_sum(c_) != 0) throw ParityViolation("colour vector " + str() + " violates the parity lemma");
  }
  static ColourVector from_string(std::string_view s) {
    if (s.size() != 6) throw ParityViolation("colour vector needs six colours");
    std::array<Colour, 6> c{};
    for (int i = 0; i < 6; ++i) c[i] = static_cast<Colour>(s[i] - '0');
    return ColourVector(c);
  }

  Colour operator[](int i) const { return c_.at(i); }
  const std::array<Colour, 6>& colours() const { return c_; }
  std::string str() const {
    std::string s;
    for (Colour k : c_) s.push_back(static_cast<char>('0' + k));
    return s;
  }
  bool uses_all_colours() const {
    int mask = 0;
    for (Colour k : c_) mask |= 1 << k;
    return mask == 0b1110;
  }
  friend bool operator==(const ColourVector&, const ColourVector&) = default;

 private:
  std::array<Colour, 6> c_;
};

inline ColourVector colour_vector_of(const EdgeColouring3& col, const std::array<EdgeId, 6>& ordered_cut) {
  std::array<Colour, 6> c{};
  for (int i = 0; i < 6; ++i) {
    c[i] = col.colour.at(ordered_cut[i]);
    if (c[i] == 0) throw UncolouredEdgeInCut("edge " + std::to_string(ordered_cut[i]) + " is uncoloured");
  }
  return ColourVector(c);
}

enum class TypeClass { B, C, P, MissingColour };

inline const char* to_string(TypeClass t) {
  switch (t) {
    case TypeClass::B: return "B";
    case TypeClass::C: return "C";
    case TypeClass::P: return "P";
    case TypeClass::MissingColour: return "missing-colour";
  }
  return "?";
}

struct ColouringType {
  std::string canonical;
  TypeClass cls = TypeClass::MissingColour;
  friend bool operator==(const ColouringType&, const ColouringType&) = default;
  friend auto operator<=>(const ColouringType& a, const ColouringType& b) { return a.canonical <=> b.canonical; }
};

// The six permutations of {1, 2, 3}; perm[k] is the image of colour k.
inline constexpr std::array<std::array<Colour, 4>, 6> kColourPermutations{{
    {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}}};

inline ColourVector permute(const ColourVector& v, const std::array<Colour, 4>& perm) {
  std::array<Colour, 6> c{};
  for (int i = 0; i < 6; ++i) c[i] = perm[v[i]];
  return ColourVector(c);
}

// Classes of the fifteen all-colour types.
inline const std::map<std::string, TypeClass>& type_table() {
  static const std::map<std::string, TypeClass> table{
      {"112233", TypeClass::P}, {"112323", TypeClass::P}, {"112332", TypeClass::C},
      {"121233", TypeClass::P}, {"121323", TypeClass::B}, {"121332", TypeClass::P},
      {"122133", TypeClass::C}, {"122313", TypeClass::P}, {"122331", TypeClass::P},
      {"123123", TypeClass::C}, {"123132", TypeClass::B}, {"123213", TypeClass::B},
      {"123231", TypeClass::P}, {"123312", TypeClass::P}, {"123321", TypeClass::C}};
  return table;
}

inline ColouringType canonical_type(const ColourVector& v) {
  std::string best;
  for (const auto& perm : kColourPermutations) {
    const std::string s = permute(v, perm).str();
    if (best.empty() || s < best) best = s;
  }
  ColouringType t{best, TypeClass::MissingColour};
  if (v.uses_all_colours()) t.cls = type_table().at(best);
  return t;
}

// The all-colour types in lexicographic order, derived by enumerating colour
// vectors rather than read off the class table.
inline std::vector<ColouringType> enumerate_types() {
  std::set<ColouringType> seen;
  std::array<Colour, 6> c{};
  for (int code = 0; code < 729; ++code) {
    int x = code;
    for (int i = 5; i >= 0; --i, x /= 3) c[i] = static_cast<Colour>(x % 3 + 1);
    if (z2z2_sum(c) != 0) continue;
    const ColourVector v(c);
    if (v.uses_all_colours()) seen.insert(canonical_type(v));
  }
  return {seen.begin(), seen.end()};
}

// All parity-respecting colour vectors, in lexicographic order.
inline std::vector<ColourVector> all_colour_vectors() {
  std::vector<ColourVector> out;
  std::array<Colour, 6> c{};
  for (int code = 0; code < 729; ++code) {
    int x = code;
    for (int i = 5; i >= 0; --i, x /= 3) c[i] = static_cast<Colour>(x % 3 + 1);
    if (z2z2_sum(c) == 0) out.emplace_back(c);
  }
  return out;
}

// Colour vectors on the ordered boundary realised by proper 3-edge-colourings
// of h that colour every edge of h.
inline std::vector<ColourVector> realisable_vectors(const Subgraph& h, const std::array<EdgeId, 6>& ordered_cut) {
  std::vector<ColourVector> out;
  for (const auto& v : all_colour_vectors()) {
    std::map<EdgeId, Colour> fixed;
    bool clash = false;
    for (int i = 0; i < 6; ++i) {
      auto [it, fresh] = fixed.emplace(ordered_cut[i], v[i]);
      if (!fresh && it->second != v[i]) clash = true;
    }
    if (clash) continue;
    try {
      if (find_3_edge_colouring(h, fixed)) out.push_back(v);
    } catch (const ConstraintConflict&) {
    }
  }
  return out;
}

inline std::set<ColouringType> types_of(const std::vector<ColourVector>& vectors) {
  std::set<ColouringType> out;
  for (const auto& v : vectors) out.insert(canonical_type(v));
  return out;
}

}  // namespace cubicpm

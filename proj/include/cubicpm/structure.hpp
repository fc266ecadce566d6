#pragma once

// Bipartite index, almost bipartite graphs and their colourings, oddness.

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "cubicpm/colouring.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/matching.hpp"

namespace cubicpm {

struct BipartiteIndexResult {
  int value = 0;
  std::vector<EdgeId> deleted;  // sorted
  std::vector<int> side;        // 0/1 per vertex, a bipartition of G - deleted
};

namespace detail {

// Edge set of some odd closed walk in g - deleted, or nullopt when that graph
// is bipartite. Found by BFS layering: an edge inside a layer closes an odd
// walk through the root; the shortest such walk over all roots is returned.
inline std::optional<std::vector<EdgeId>> odd_closed_walk(const Graph& g, const std::vector<char>& deleted) {
  const int n = g.order();
  std::optional<std::vector<EdgeId>> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<EdgeId> via(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(via.begin(), via.end(), -1);
    dist[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      if (best && 2 * dist[x] + 1 >= static_cast<int>(best->size())) break;
      for (EdgeId e : g.incident(x)) {
        if (deleted[e] || e == via[x]) continue;
        const Vertex y = g.edge(e).other(x);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          q.push(y);
        } else if (dist[y] == dist[x]) {
          std::vector<EdgeId> walk{e};
          for (Vertex z : {x, y}) {
            for (Vertex w = z; w != root; w = g.edge(via[w]).other(w)) walk.push_back(via[w]);
          }
          if (!best || walk.size() < best->size()) best = std::move(walk);
        }
      }
    }
  }
  if (best) {
    std::sort(best->begin(), best->end());
    best->erase(std::unique(best->begin(), best->end()), best->end());
  }
  return best;
}

}  // namespace detail

// Exact bi(G) by iterative deepening: every deletion set meets the edge set
// of every odd closed walk, so branch on the edges of a short one.
inline BipartiteIndexResult bipartite_index(const Graph& g) {
  std::vector<char> deleted(static_cast<std::size_t>(g.size()), 0);
  std::vector<EdgeId> chosen;
  auto rec = [&](auto&& self, int budget) -> bool {
    auto walk = detail::odd_closed_walk(g, deleted);
    if (!walk) return true;
    if (budget == 0) return false;
    for (EdgeId e : *walk) {
      deleted[e] = 1;
      chosen.push_back(e);
      if (self(self, budget - 1)) return true;
      chosen.pop_back();
      deleted[e] = 0;
    }
    return false;
  };
  BipartiteIndexResult r;
  for (int k = 0;; ++k) {
    if (rec(rec, k)) {
      r.value = k;
      break;
    }
  }
  r.deleted = chosen;
  std::sort(r.deleted.begin(), r.deleted.end());
  r.side = *bipartition(g, r.deleted);
  return r;
}

struct AlmostBipartiteWitness {
  EdgeId e = -1;
  EdgeId f = -1;
  std::vector<int> side;  // bipartition of G - {e, f}
  int e_inside = -1;      // part containing both ends of e
  int f_inside = -1;
};

// First pair (e, f) in lexicographic id order whose removal leaves a
// bipartite graph, provided g is bridgeless and not bipartite.
inline std::optional<AlmostBipartiteWitness> almost_bipartite_witness(const Graph& g) {
  if (!is_bridgeless(g) || is_bipartite(g)) return std::nullopt;
  for (EdgeId e = 0; e < g.size(); ++e) {
    for (EdgeId f = e + 1; f < g.size(); ++f) {
      const std::array<EdgeId, 2> pair{e, f};
      auto side = bipartition(g, pair);
      if (!side) continue;
      AlmostBipartiteWitness w;
      w.e = e;
      w.f = f;
      w.e_inside = (*side)[g.edge(e).u];
      w.f_inside = (*side)[g.edge(f).u];
      w.side = std::move(*side);
      return w;
    }
  }
  return std::nullopt;
}

inline std::string almost_bipartite_violation(const Graph& g, const AlmostBipartiteWitness& w) {
  if (w.e < 0 || w.f < 0 || w.e >= g.size() || w.f >= g.size() || w.e == w.f) return "surplus edges invalid";
  if (static_cast<int>(w.side.size()) != g.order()) return "bipartition has wrong length";
  if (!is_bridgeless(g)) return "graph has a bridge";
  if (is_bipartite(g)) return "graph is bipartite";
  for (EdgeId x = 0; x < g.size(); ++x) {
    const Edge& ed = g.edge(x);
    const bool same = w.side[ed.u] == w.side[ed.v];
    if (x == w.e || x == w.f) {
      if (!same) return "surplus edge " + std::to_string(x) + " crosses the bipartition";
    } else if (same) {
      return "edge " + std::to_string(x) + " lies inside a part";
    }
  }
  if (w.side[g.edge(w.e).u] != w.e_inside || w.side[g.edge(w.f).u] != w.f_inside) return "part labels mismatch";
  return {};
}

// Colour class 1 is a perfect matching through both surplus edges; its
// complement lies in the bipartite graph G - {e, f}, so its circuits are even
// and are coloured 2, 3 alternately.
inline EdgeColouring3 colour_almost_bipartite(const CubicGraph& g, const AlmostBipartiteWitness& w) {
  if (auto why = almost_bipartite_violation(g, w); !why.empty()) throw WitnessInvalid(why);
  auto m = pm_containing(g, {w.e, w.f});
  if (!m) throw InternalError("no perfect matching through both surplus edges");
  EdgeColouring3 col;
  col.colour.assign(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId x : m->edges) col.colour[x] = 1;
  for (EdgeId start = 0; start < g.size(); ++start) {
    if (col.colour[start] != 0) continue;
    Vertex v = g.edge(start).v;
    EdgeId cur = start;
    Colour k = 2;
    while (col.colour[cur] == 0) {
      col.colour[cur] = k;
      k = k == 2 ? 3 : 2;
      EdgeId next = -1;
      for (EdgeId x : g.incident(v)) {
        if (x != cur && !m->contains(x)) next = x;
      }
      cur = next;
      v = g.edge(cur).other(v);
    }
  }
  if (!is_proper(g, col)) throw InternalError("odd circuit in the complement of the matching");
  return col;
}

struct OddnessResult {
  int value = 0;
  PerfectMatching complement_of;  // the witness 2-factor is E(G) minus this
  std::vector<EdgeId> two_factor;
  int odd_circuits = 0;
};

inline int odd_circuits_in(const Graph& g, std::span<const EdgeId> two_factor) {
  Subgraph f{&g, {}, {two_factor.begin(), two_factor.end()}};
  std::sort(f.edges.begin(), f.edges.end());
  f.vertices.resize(static_cast<std::size_t>(g.order()));
  std::iota(f.vertices.begin(), f.vertices.end(), 0);
  int odd = 0;
  for (const auto& c : components(f)) odd += c.order() % 2;
  return odd;
}

inline std::vector<EdgeId> complement_edges(const Graph& g, const PerfectMatching& m) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!m.contains(e)) out.push_back(e);
  }
  return out;
}

// Exact oddness over the complements of all perfect matchings; the witness
// is the first matching (in enumeration order) attaining the minimum.
inline OddnessResult oddness(const CubicGraph& g, long pm_cap) {
  require_bridgeless(g);
  OddnessResult r;
  r.value = -1;
  for (const auto& pm : enumerate_perfect_matchings(g, pm_cap)) {
    auto f = complement_edges(g, pm);
    const int odd = odd_circuits_in(g, f);
    if (r.value < 0 || odd < r.value) {
      r.value = r.odd_circuits = odd;
      r.complement_of = pm;
      r.two_factor = std::move(f);
      if (odd == 0) break;
    }
  }
  return r;
}

}  // namespace cubicpm

#pragma once

// Independent re-checks for certificate witnesses. Nothing here calls the
// search routines of the other headers; the matching enumerator, colouring
// test, max-cut search and cut search are separate, simpler implementations.

#include <algorithm>
#include <bitset>
#include <optional>
#include <string>
#include <vector>

#include "cubicpm/graph.hpp"

namespace cubicpm::check {

inline bool perfect_matching(const Graph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.size()) return false;
    const Edge& x = g.edge(e);
    if (x.u == x.v) return false;
    ++hits[x.u];
    ++hits[x.v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

using Mask = std::vector<std::uint64_t>;

inline Mask mask_of(const Graph& g, const std::vector<EdgeId>& edges) {
  Mask m(static_cast<std::size_t>((g.size() + 63) / 64), 0);
  for (EdgeId e : edges) m[e / 64] |= std::uint64_t{1} << (e % 64);
  return m;
}

inline int popcount(const Mask& m) {
  int c = 0;
  for (auto w : m) c += static_cast<int>(std::bitset<64>(w).count());
  return c;
}

// Perfect matchings by include/exclude over edges in id order. Returns
// nullopt once more than `limit` are found.
inline std::optional<std::vector<std::vector<EdgeId>>> all_perfect_matchings(const Graph& g, long limit) {
  const int n = g.order(), m = g.size();
  std::vector<std::vector<EdgeId>> out;
  if (n % 2 == 1) return out;
  std::vector<int> last(static_cast<std::size_t>(n), -1);
  for (EdgeId e = 0; e < m; ++e) {
    last[g.edge(e).u] = std::max(last[g.edge(e).u], e);
    last[g.edge(e).v] = std::max(last[g.edge(e).v], e);
  }
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> chosen;
  bool overflow = false;
  auto rec = [&](auto&& self, EdgeId e) -> void {
    if (overflow) return;
    if (static_cast<int>(chosen.size()) * 2 == n) {
      if (static_cast<long>(out.size()) >= limit) {
        overflow = true;
        return;
      }
      out.push_back(chosen);
      return;
    }
    if (e == m) return;
    const Edge& x = g.edge(e);
    if (x.u != x.v && !used[x.u] && !used[x.v]) {
      used[x.u] = used[x.v] = 1;
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
      used[x.u] = used[x.v] = 0;
    }
    // Skipping e strands an endpoint whose last edge it is.
    if ((!used[x.u] && last[x.u] == e) || (!used[x.v] && last[x.v] == e)) return;
    self(self, e + 1);
  };
  rec(rec, 0);
  if (overflow) return std::nullopt;
  return out;
}

// Minimum number of edges missed by three perfect matchings (repetition
// allowed), by scanning every triple.
inline int min_uncovered_by_three(const Graph& g, const std::vector<std::vector<EdgeId>>& pms) {
  std::vector<Mask> ms;
  for (const auto& pm : pms) ms.push_back(mask_of(g, pm));
  int best = g.size();
  const std::size_t p = ms.size();
  Mask u(ms.empty() ? 0 : ms[0].size());
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      for (std::size_t k = j; k < p; ++k) {
        for (std::size_t w = 0; w < u.size(); ++w) u[w] = ms[i][w] | ms[j][w] | ms[k][w];
        best = std::min(best, g.size() - popcount(u));
      }
    }
  }
  return best;
}

// Whether some k of the matchings (k <= 4) cover every edge.
inline bool has_cover_of_size(const Graph& g, const std::vector<std::vector<EdgeId>>& pms, int k) {
  std::vector<Mask> ms;
  for (const auto& pm : pms) ms.push_back(mask_of(g, pm));
  const std::size_t p = ms.size();
  if (p == 0) return g.size() == 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  Mask u(ms[0].size());
  for (;;) {
    std::fill(u.begin(), u.end(), 0);
    for (std::size_t i : idx) {
      for (std::size_t w = 0; w < u.size(); ++w) u[w] |= ms[i][w];
    }
    if (popcount(u) == g.size()) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == p - 1) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[pos];
  }
}

inline bool covers(const Graph& g, const std::vector<std::vector<EdgeId>>& cover) {
  std::vector<char> hit(static_cast<std::size_t>(g.size()), 0);
  for (const auto& pm : cover) {
    if (!perfect_matching(g, pm)) return false;
    for (EdgeId e : pm) hit[e] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

inline std::vector<std::vector<Vertex>> components_without(const Graph& g, const std::vector<char>& vertex_gone,
                                                           const std::vector<char>& edge_gone) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (vertex_gone[s] || comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (EdgeId e : g.incident(x)) {
        if (edge_gone[e]) continue;
        const Vertex y = g.edge(e).other(x);
        if (vertex_gone[y] || comp[y] >= 0) continue;
        comp[y] = comp[s];
        stack.push_back(y);
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// No labelling of the vertices by two sides leaves fewer than `bound`
// edges inside a side. Branch and bound over vertices in id order.
inline bool no_bipartition_below(const Graph& g, int bound) {
  if (bound <= 0) return true;
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, Vertex v, int bad) -> bool {
    if (bad >= bound) return false;
    if (v == n) return true;
    for (int s : {0, 1}) {
      if (v == 0 && s == 1) break;
      int extra = 0;
      for (EdgeId e : g.incident(v)) {
        const Vertex w = g.edge(e).other(v);
        if (w == v) {
          ++extra;  // loops appear twice
        } else if (w < v && side[w] == s) {
          extra += 2;
        }
      }
      side[v] = s;
      if (self(self, v + 1, bad + extra / 2)) return true;
      side[v] = -1;
    }
    return false;
  };
  return !rec(rec, 0, 0);
}

inline bool bipartite_after(const Graph& g, const std::vector<EdgeId>& deleted, const std::vector<int>& side) {
  if (static_cast<int>(side.size()) != g.order()) return false;
  std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e : deleted) {
    if (e < 0 || e >= g.size()) return false;
    gone[e] = 1;
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!gone[e] && side[g.edge(e).u] == side[g.edge(e).v]) return false;
  }
  return true;
}

inline int odd_circuits_of_complement(const Graph& g, const std::vector<EdgeId>& pm) {
  std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e : pm) gone[e] = 1;
  int odd = 0;
  for (const auto& c : components_without(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0), gone)) {
    odd += static_cast<int>(c.size() % 2);
  }
  return odd;
}

inline bool contains_circuit(const Graph& g, const std::vector<Vertex>& part, const std::vector<char>& edge_gone) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : part) in[v] = 1;
  long edges = 0;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!edge_gone[e] && in[g.edge(e).u] && in[g.edge(e).v]) ++edges;
  }
  return edges >= static_cast<long>(part.size());  // part is connected
}

// Whether deleting `cut` leaves at least two components with circuits.
inline bool cycle_separating(const Graph& g, const std::vector<EdgeId>& cut) {
  std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e : cut) gone[e] = 1;
  int cyclic = 0;
  for (const auto& c : components_without(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0), gone)) {
    cyclic += contains_circuit(g, c, gone) ? 1 : 0;
  }
  return cyclic >= 2;
}

// No cycle-separating edge set of size below `bound`; nullopt when the
// number of subsets to try exceeds `budget`.
inline std::optional<bool> no_cycle_separating_below(const Graph& g, int bound, double budget = 2e7) {
  const int m = g.size();
  double work = 0;
  for (int k = 1; k < bound; ++k) {
    double c = 1;
    for (int i = 0; i < k; ++i) c = c * (m - i) / (i + 1);
    work += c;
  }
  if (work > budget) return std::nullopt;
  std::vector<EdgeId> cut;
  auto rec = [&](auto&& self, EdgeId from, int left) -> bool {
    if (left == 0) return cycle_separating(g, cut);
    for (EdgeId e = from; e <= m - left; ++e) {
      cut.push_back(e);
      if (self(self, e + 1, left - 1)) return true;
      cut.pop_back();
    }
    return false;
  };
  for (int k = 1; k < bound; ++k) {
    if (rec(rec, 0, k)) return false;
  }
  return true;
}

// `map` sends vertex i of a to map[i] of b and every edge to an edge with
// the same multiplicity.
inline bool isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map) {
  if (a.order() != b.order() || a.size() != b.size() || static_cast<int>(map.size()) != a.order()) return false;
  std::vector<char> seen(static_cast<std::size_t>(b.order()), 0);
  for (Vertex v : map) {
    if (v < 0 || v >= b.order() || seen[v]) return false;
    seen[v] = 1;
  }
  auto key = [](Vertex x, Vertex y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
  std::vector<std::pair<int, int>> ea, eb;
  for (const Edge& e : a.edges()) ea.push_back(key(map[e.u], map[e.v]));
  for (const Edge& e : b.edges()) eb.push_back(key(e.u, e.v));
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

}  // namespace cubicpm::check

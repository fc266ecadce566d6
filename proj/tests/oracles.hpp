#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the library beyond the Graph container.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "cubicpm/graph.hpp"

namespace oracle {

using cubicpm::EdgeId;
using cubicpm::Graph;
using cubicpm::Vertex;
using EdgeSet = std::vector<EdgeId>;

// Calls f(combo) for every k-subset of {0..m-1} in lexicographic order;
// stops early when f returns true.
template <class F>
bool for_each_subset(int m, int k, F&& f) {
  if (k > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Perfect matchings as the n/2-subsets of edges covering every vertex once.
inline std::vector<EdgeSet> perfect_matchings(const Graph& g) {
  std::vector<EdgeSet> out;
  const int n = g.order();
  if (n % 2 == 1) return out;
  for_each_subset(g.size(), n / 2, [&](const std::vector<int>& s) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int e : s) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; })) out.push_back(s);
    return false;
  });
  return out;
}

inline int defect(const Graph& g) {
  const auto pms = perfect_matchings(g);
  int best = g.size();
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (std::size_t j = i; j < pms.size(); ++j) {
      for (std::size_t k = j; k < pms.size(); ++k) {
        std::set<EdgeId> u(pms[i].begin(), pms[i].end());
        u.insert(pms[j].begin(), pms[j].end());
        u.insert(pms[k].begin(), pms[k].end());
        best = std::min(best, g.size() - static_cast<int>(u.size()));
      }
    }
  }
  return best;
}

// Smallest k such that k perfect matchings cover every edge (0 if none do).
inline int pmi(const Graph& g) {
  const auto pms = perfect_matchings(g);
  const int p = static_cast<int>(pms.size());
  for (int k = 1; k <= p; ++k) {
    const bool found = for_each_subset(p, k, [&](const std::vector<int>& s) {
      std::set<EdgeId> u;
      for (int i : s) u.insert(pms[i].begin(), pms[i].end());
      return static_cast<int>(u.size()) == g.size();
    });
    if (found) return k;
  }
  return 0;
}

inline bool colourable(const Graph& g) {
  std::vector<int> c(static_cast<std::size_t>(g.size()), 0);
  auto ok = [&](EdgeId e) {
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      for (EdgeId f : g.incident(x)) {
        if (f != e && c[f] == c[e]) return false;
      }
    }
    return !g.edge(e).is_loop();
  };
  auto rec = [&](auto&& self, EdgeId e) -> bool {
    if (e == g.size()) return true;
    for (int k = 1; k <= 3; ++k) {
      c[e] = k;
      if (ok(e) && self(self, e + 1)) return true;
    }
    c[e] = 0;
    return false;
  };
  return rec(rec, 0);
}

// Minimum number of edges inside a side over all 2-labellings.
inline int bipartite_index(const Graph& g) {
  const int n = g.order();
  int best = g.size();
  for (long mask = 0; mask < (1L << (n - 1)); ++mask) {
    int bad = 0;
    for (const auto& e : g.edges()) {
      const bool a = (mask >> e.u) & 1, b = (mask >> e.v) & 1;
      if (a == b) ++bad;
    }
    best = std::min(best, bad);
  }
  return best;
}

inline std::vector<std::vector<Vertex>> components(const Graph& g, const std::vector<char>& edge_gone) {
  cubicpm::detail::UnionFind uf(g.order());
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!edge_gone[e]) uf.unite(g.edge(e).u, g.edge(e).v);
  }
  std::vector<std::vector<Vertex>> by_root(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(c);
  }
  return out;
}

// Minimum size of an edge set whose removal leaves two components with
// circuits, or the cycle rank if there is none.
inline int cyclic_connectivity(const Graph& g) {
  const int rank = g.size() - g.order() + 1;
  for (int k = 1; k < rank; ++k) {
    const bool found = for_each_subset(g.size(), k, [&](const std::vector<int>& s) {
      std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
      for (int e : s) gone[e] = 1;
      int cyclic = 0;
      for (const auto& c : components(g, gone)) {
        std::set<Vertex> in(c.begin(), c.end());
        int edges = 0;
        for (EdgeId e = 0; e < g.size(); ++e) {
          if (!gone[e] && in.count(g.edge(e).u)) ++edges;
        }
        if (edges >= static_cast<int>(c.size())) ++cyclic;
      }
      return cyclic >= 2;
    });
    if (found) return k;
  }
  return rank;
}

inline int girth(const Graph& g) {
  int best = 0;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.is_loop()) return 1;
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{ed.u};
    dist[ed.u] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (EdgeId f : g.incident(queue[i])) {
        if (f == e) continue;
        const Vertex w = g.edge(f).other(queue[i]);
        if (dist[w] < 0) {
          dist[w] = dist[queue[i]] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[ed.v] >= 0 && (best == 0 || dist[ed.v] + 1 < best)) best = dist[ed.v] + 1;
  }
  return best;
}

inline int oddness(const Graph& g) {
  int best = g.order();
  for (const auto& pm : perfect_matchings(g)) {
    std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
    for (EdgeId e : pm) gone[e] = 1;
    int odd = 0;
    for (const auto& c : components(g, gone)) odd += static_cast<int>(c.size() % 2);
    best = std::min(best, odd);
  }
  return best;
}

}  // namespace oracle

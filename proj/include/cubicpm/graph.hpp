#pragma once

// Multigraph representation with stable edge ids, plus the cut, component,
// girth and cyclic-connectivity machinery shared by every other header.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubicpm/errors.hpp"

namespace cubicpm {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const { return u == v; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return u == w || v == w; }
};

// General multigraph. Loops and parallel edges are allowed; a loop appears
// twice in the incidence list of its vertex so degree() counts edge-ends.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order) : adj_(static_cast<std::size_t>(order)) {}

  EdgeId add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
      throw std::out_of_range("add_edge: vertex out of range");
    }
    const EdgeId id = size();
    edges_.push_back({u, v});
    adj_[u].push_back(id);
    adj_[v].push_back(id);
    return id;
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool is_cubic() const {
    return std::all_of(adj_.begin(), adj_.end(),
                       [](const auto& a) { return a.size() == 3; });
  }
  bool has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.is_loop(); });
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    for (EdgeId e = 0; e < a.size(); ++e) {
      if (a.edges_[e].u != b.edges_[e].u || a.edges_[e].v != b.edges_[e].v) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_;
};

// A Graph in which every vertex has exactly three edge-ends. Immutable once
// constructed.
class CubicGraph : public Graph {
 public:
  CubicGraph() = default;
  explicit CubicGraph(Graph g) : Graph(std::move(g)) {
    for (Vertex v = 0; v < order(); ++v) {
      if (degree(v) != 3) {
        throw NotCubic("vertex " + std::to_string(v) + " has degree " +
                       std::to_string(degree(v)));
      }
    }
  }

 private:
  using Graph::add_edge;
};

// A subgraph of a parent graph. Vertex and edge lists are sorted; edges keep
// their parent ids.
struct Subgraph {
  const Graph* parent = nullptr;
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int order() const { return static_cast<int>(vertices.size()); }
  bool has_vertex(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  bool has_edge(EdgeId e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
};

struct EdgeCut {
  std::vector<Vertex> side;
  std::vector<EdgeId> edges;
};

namespace detail {

inline std::vector<Vertex> sorted_unique(std::vector<Vertex> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline std::vector<char> membership(int n, std::span<const int> items) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int x : items) in.at(x) = 1;
  return in;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace detail

inline Subgraph whole(const Graph& g) {
  Subgraph h{&g, {}, {}};
  h.vertices.resize(static_cast<std::size_t>(g.order()));
  std::iota(h.vertices.begin(), h.vertices.end(), 0);
  h.edges.resize(static_cast<std::size_t>(g.size()));
  std::iota(h.edges.begin(), h.edges.end(), 0);
  return h;
}

inline Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices) {
  Subgraph h{&g, detail::sorted_unique(std::move(vertices)), {}};
  const auto in = detail::membership(g.order(), h.vertices);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (in[g.edge(e).u] && in[g.edge(e).v]) h.edges.push_back(e);
  }
  return h;
}

inline Subgraph remove_vertices(const Subgraph& h, std::vector<Vertex> gone) {
  const auto out = detail::membership(h.parent->order(), gone);
  Subgraph r{h.parent, {}, {}};
  for (Vertex v : h.vertices) {
    if (!out[v]) r.vertices.push_back(v);
  }
  for (EdgeId e : h.edges) {
    const Edge& ed = h.parent->edge(e);
    if (!out[ed.u] && !out[ed.v]) r.edges.push_back(e);
  }
  return r;
}

inline Subgraph remove_edges(const Subgraph& h, std::span<const EdgeId> gone) {
  Subgraph r = h;
  std::vector<EdgeId> drop(gone.begin(), gone.end());
  std::sort(drop.begin(), drop.end());
  r.edges.clear();
  std::set_difference(h.edges.begin(), h.edges.end(), drop.begin(), drop.end(),
                      std::back_inserter(r.edges));
  return r;
}

// Connected components, ordered by their smallest vertex.
inline std::vector<Subgraph> components(const Subgraph& h) {
  const Graph& g = *h.parent;
  detail::UnionFind uf(g.order());
  for (EdgeId e : h.edges) uf.unite(g.edge(e).u, g.edge(e).v);
  std::vector<int> slot(static_cast<std::size_t>(g.order()), -1);
  std::vector<Subgraph> comps;
  for (Vertex v : h.vertices) {
    const int r = uf.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.push_back({&g, {}, {}});
    }
    comps[slot[r]].vertices.push_back(v);
  }
  for (EdgeId e : h.edges) comps[slot[uf.find(g.edge(e).u)]].edges.push_back(e);
  return comps;
}

inline int odd_count(const std::vector<Subgraph>& comps) {
  return static_cast<int>(std::count_if(comps.begin(), comps.end(),
                                        [](const Subgraph& c) { return c.order() % 2 == 1; }));
}

inline bool is_connected(const Graph& g) {
  return g.order() == 0 || components(whole(g)).size() == 1;
}

// Edges of g with exactly one end in x; loops never qualify.
inline std::vector<EdgeId> boundary(const Graph& g, std::span<const Vertex> x) {
  const auto in = detail::membership(g.order(), x);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (in[g.edge(e).u] != in[g.edge(e).v]) out.push_back(e);
  }
  return out;
}

inline EdgeCut edge_cut(const Graph& g, std::vector<Vertex> x) {
  x = detail::sorted_unique(std::move(x));
  if (x.empty() || static_cast<int>(x.size()) >= g.order()) {
    throw EmptySide("cut side must be a nonempty proper subset of the vertices");
  }
  EdgeCut cut{std::move(x), {}};
  cut.edges = boundary(g, cut.side);
  return cut;
}

// Length of a shortest circuit; a loop counts 1, a parallel pair 2. Returns 0
// for forests.
inline int girth(const Graph& g) {
  if (g.has_loop()) return 1;
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<EdgeId> via(static_cast<std::size_t>(g.order()));
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    via[root] = -1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      if (2 * dist[x] + 1 >= best) break;
      for (EdgeId e : g.incident(x)) {
        if (e == via[x]) continue;
        const Vertex y = g.edge(e).other(x);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          q.push(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

// Bridges by lowpoint search over edge ids, so parallel edges are never
// bridges. Sorted by id.
inline std::vector<EdgeId> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> out;
  int timer = 0;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const Vertex w = g.edge(e).other(f.v);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Loops count as bridge-forcing: in a cubic graph the edge leaving a loop
// vertex is a bridge, and downstream matching theory assumes loopless input.
inline bool is_bridgeless(const Graph& g) { return !g.has_loop() && bridges(g).empty(); }

inline void require_bridgeless(const Graph& g) {
  if (g.has_loop()) throw HasBridge("graph has a loop");
  const auto b = bridges(g);
  if (!b.empty()) throw HasBridge("edge " + std::to_string(b.front()) + " is a bridge");
}

// Two-colouring of the graph with the listed edges ignored. Side 0 holds the
// smallest vertex of each component. Empty optional if an odd circuit remains.
inline std::optional<std::vector<int>> bipartition(const Graph& g,
                                                   std::span<const EdgeId> ignored = {}) {
  std::vector<char> skip(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e : ignored) skip.at(e) = 1;
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        if (skip[e]) continue;
        const Vertex y = g.edge(e).other(x);
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// A circuit given by its edges in traversal order and its vertices, where
// vertices[i] is the common end of edges[i-1] and edges[i].
struct Circuit {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

// All circuits of length at most max_len, each reported once: it starts at
// its smallest vertex and, for length >= 3, its second vertex is smaller than
// its last. Loops and parallel pairs are included.
inline std::vector<Circuit> short_circuits(const Graph& g, int max_len) {
  std::vector<Circuit> out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (g.edge(e).is_loop() && max_len >= 1) out.push_back({{g.edge(e).u}, {e}});
  }
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> path;
  std::vector<EdgeId> pedges;
  auto extend = [&](auto&& self, Vertex start, Vertex x) -> void {
    for (EdgeId e : g.incident(x)) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      if (!pedges.empty() && e == pedges.back()) continue;
      const Vertex y = ed.other(x);
      if (y == start && !pedges.empty()) {
        const bool two = pedges.size() == 1;
        if (two ? pedges.front() < e : path[1] < path.back()) {
          Circuit c{path, pedges};
          c.edges.push_back(e);
          out.push_back(std::move(c));
        }
        continue;
      }
      if (y < start || on[y] || static_cast<int>(pedges.size()) + 1 >= max_len) continue;
      on[y] = 1;
      path.push_back(y);
      pedges.push_back(e);
      self(self, start, y);
      path.pop_back();
      pedges.pop_back();
      on[y] = 0;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    on[s] = 1;
    path = {s};
    pedges.clear();
    extend(extend, s, s);
    on[s] = 0;
  }
  return out;
}

// Induced circuits of exactly the given length (no chord, no parallel edge
// between circuit vertices outside the circuit).
inline std::vector<Circuit> induced_circuits(const Graph& g, int length) {
  std::vector<Circuit> out;
  for (auto& c : short_circuits(g, length)) {
    if (c.length() != length) continue;
    if (induced_subgraph(g, c.vertices).edges.size() == c.edges.size()) out.push_back(std::move(c));
  }
  return out;
}

struct CyclicConnectivity {
  int value = 0;
  int cycle_rank = 0;
  // A minimum cycle-separating cut, present when value is below the cap.
  std::optional<EdgeCut> witness;
};

namespace detail {

// Returns the vertex set of one circuit-containing component of g - removed if
// at least two components contain a circuit.
inline std::optional<std::vector<Vertex>> cyclic_split(const Graph& g,
                                                       std::span<const EdgeId> removed) {
  std::vector<char> skip(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e : removed) skip[e] = 1;
  UnionFind uf(g.order());
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!skip[e]) uf.unite(g.edge(e).u, g.edge(e).v);
  }
  std::vector<int> nv(static_cast<std::size_t>(g.order()), 0), ne(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) ++nv[uf.find(v)];
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!skip[e]) ++ne[uf.find(g.edge(e).u)];
  }
  int cyclic = 0, first = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (uf.find(v) == v && ne[v] >= nv[v]) {
      ++cyclic;
      if (first < 0) first = v;
    }
  }
  if (cyclic < 2) return std::nullopt;
  std::vector<Vertex> side;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (uf.find(v) == first) side.push_back(v);
  }
  return side;
}

}  // namespace detail

// Minimum size of a cycle-separating edge cut, capped by the cycle rank.
// Searches independent edge sets of increasing size; a minimum
// cycle-separating cut is always independent.
inline CyclicConnectivity cyclic_edge_connectivity(const Graph& g) {
  if (!is_connected(g)) throw Disconnected("cyclic connectivity needs a connected graph");
  CyclicConnectivity out;
  out.cycle_rank = g.size() - g.order() + 1;
  std::vector<EdgeId> chosen;
  std::vector<int> touched(static_cast<std::size_t>(g.order()), 0);
  std::optional<std::vector<Vertex>> found;
  auto search = [&](auto&& self, EdgeId from, int left) -> bool {
    if (left == 0) {
      found = detail::cyclic_split(g, chosen);
      return found.has_value();
    }
    for (EdgeId e = from; e < g.size(); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop() || touched[ed.u] || touched[ed.v]) continue;
      touched[ed.u] = touched[ed.v] = 1;
      chosen.push_back(e);
      const bool ok = self(self, e + 1, left - 1);
      chosen.pop_back();
      touched[ed.u] = touched[ed.v] = 0;
      if (ok) return true;
    }
    return false;
  };
  const int shortest = girth(g);
  for (int k = 1; k < out.cycle_rank; ++k) {
    if (k == shortest) {
      // The cut around a shortest circuit usually realises the girth bound.
      for (const auto& c : induced_circuits(g, k)) {
        const auto cut = boundary(g, c.vertices);
        if (static_cast<int>(cut.size()) == k && detail::cyclic_split(g, cut)) {
          out.value = k;
          out.witness = EdgeCut{c.vertices, cut};
          std::sort(out.witness->side.begin(), out.witness->side.end());
          return out;
        }
      }
    }
    if (search(search, 0, k)) {
      out.value = k;
      out.witness = EdgeCut{*found, boundary(g, *found)};
      return out;
    }
  }
  out.value = out.cycle_rank;
  return out;
}

}  // namespace cubicpm

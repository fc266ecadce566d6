#pragma once

// Named graphs and generators. Vertex numbering:
//   petersen   outer cycle 0-4 (i, i+1), spokes (i, i+5), inner pentagram
//              (5+i, 5+(i+2)%5). The hexagon 0-1-2-3-8-5 is the core of an
//              optimal array; deleting it leaves the claw centred at 9.
//   k33        parts {0,1,2} and {3,4,5}
//   cube_q3    vertices 0..7, u ~ v iff they differ in one bit
//   prism3     triangles 0-1-2 and 3-4-5, rungs (i, i+3)
//   heawood    14-cycle plus chords (2i, 2i+5)
//   flower     a_i = 4i, b_i = 4i+1, c_i = 4i+2, d_i = 4i+3; a_i is adjacent
//              to b_i, c_i, d_i; the b's form a k-cycle and
//              c_0 .. c_{k-1} d_0 .. d_{k-1} a 2k-cycle.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cubicpm/graph.hpp"

namespace cubicpm {

namespace detail {

inline Graph from_pairs(int n, std::vector<std::pair<int, int>> pairs, bool sort = true) {
  for (auto& [u, v] : pairs) {
    if (u > v) std::swap(u, v);
  }
  if (sort) std::sort(pairs.begin(), pairs.end());
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

}  // namespace detail

inline CubicGraph petersen() {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < 5; ++i) p.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) p.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) p.emplace_back(5 + i, 5 + (i + 2) % 5);
  return CubicGraph(detail::from_pairs(10, p, false));
}

inline CubicGraph k4() { return CubicGraph(detail::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})); }

inline CubicGraph k33() {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) p.emplace_back(i, j);
  }
  return CubicGraph(detail::from_pairs(6, p));
}

inline CubicGraph dipole3() { return CubicGraph(detail::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}})); }

inline CubicGraph cube_q3() {
  std::vector<std::pair<int, int>> p;
  for (int v = 0; v < 8; ++v) {
    for (int b = 1; b < 8; b <<= 1) {
      if (v < (v ^ b)) p.emplace_back(v, v ^ b);
    }
  }
  return CubicGraph(detail::from_pairs(8, p));
}

inline CubicGraph prism3() {
  return CubicGraph(detail::from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
}

inline CubicGraph heawood() {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < 14; ++i) p.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) p.emplace_back(i, (i + 5) % 14);
  return CubicGraph(detail::from_pairs(14, p));
}

inline CubicGraph flower_snark(int k) {
  if (k < 5 || k % 2 == 0) throw BadParameter("flower snark needs odd k >= 5, got " + std::to_string(k));
  auto a = [](int i) { return 4 * i; };
  auto b = [](int i) { return 4 * i + 1; };
  auto c = [](int i) { return 4 * i + 2; };
  auto d = [](int i) { return 4 * i + 3; };
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < k; ++i) {
    p.emplace_back(a(i), b(i));
    p.emplace_back(a(i), c(i));
    p.emplace_back(a(i), d(i));
    p.emplace_back(b(i), b((i + 1) % k));
    if (i + 1 < k) {
      p.emplace_back(c(i), c(i + 1));
      p.emplace_back(d(i), d(i + 1));
    }
  }
  p.emplace_back(c(k - 1), d(0));
  p.emplace_back(d(k - 1), c(0));
  return CubicGraph(detail::from_pairs(4 * k, p));
}

struct Section7Graph {
  CubicGraph graph;
  std::array<EdgeId, 3> joining{};  // the 3-edge-cut R
  int petersen_order = 9;           // vertices 0..8 come from Petersen - v
  std::vector<Vertex> petersen_origin;  // new id -> Petersen vertex (first 9)
  std::vector<Vertex> base_origin;      // new id - 9 -> base vertex
};

// Petersen minus `v` joined to `b` minus `u` by three edges pairing the
// 2-valent vertices in sorted order; `pairing` permutes the base side.
inline Section7Graph section7(const Graph& b, Vertex u, Vertex v = 0, std::array<int, 3> pairing = {0, 1, 2}) {
  if (!b.is_cubic()) throw NotCubic("base graph is not cubic");
  if (!is_bipartite(b)) throw NotBipartite("base graph is not bipartite");
  if (!is_connected(b)) throw Disconnected("base graph is not connected");
  if (b.order() < 4) throw TooSmall("base graph needs at least four vertices");
  if (u < 0 || u >= b.order() || v < 0 || v >= 10) throw BadParameter("vertex out of range");
  auto sorted_perm = pairing;
  std::sort(sorted_perm.begin(), sorted_perm.end());
  if (sorted_perm != std::array<int, 3>{0, 1, 2}) throw BadParameter("pairing is not a permutation");
  const CubicGraph pg = petersen();
  auto neighbours = [](const Graph& g, Vertex x) {
    std::vector<Vertex> out;
    for (EdgeId e : g.incident(x)) out.push_back(g.edge(e).other(x));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw BadParameter("removed vertex has parallel edges");
    return out;
  };
  const auto np = neighbours(pg, v);
  const auto nb = neighbours(b, u);
  Section7Graph s;
  std::vector<Vertex> pid(10, -1), bid(static_cast<std::size_t>(b.order()), -1);
  int n = 0;
  for (Vertex x = 0; x < 10; ++x) {
    if (x == v) continue;
    pid[x] = n++;
    s.petersen_origin.push_back(x);
  }
  for (Vertex x = 0; x < b.order(); ++x) {
    if (x == u) continue;
    bid[x] = n++;
    s.base_origin.push_back(x);
  }
  Graph h(n);
  for (const Edge& e : pg.edges()) {
    if (!e.touches(v)) h.add_edge(pid[e.u], pid[e.v]);
  }
  for (const Edge& e : b.edges()) {
    if (!e.touches(u)) h.add_edge(bid[e.u], bid[e.v]);
  }
  for (int i = 0; i < 3; ++i) s.joining[i] = h.add_edge(pid[np[i]], bid[nb[pairing[i]]]);
  s.graph = CubicGraph(std::move(h));
  return s;
}

// Dot product G1 . G2: delete independent edges ab, cd of G1; delete the
// edge xy of G2 with its ends, whose other neighbours are x1, x2 and y1, y2;
// join a-x1, b-x2, c-y1, d-y2. Petersen . Petersen gives the Blanusa snarks.
inline CubicGraph dot_product(const Graph& g1, EdgeId ab, EdgeId cd, const Graph& g2, EdgeId xy) {
  const Edge e1 = g1.edge(ab), e2 = g1.edge(cd), e3 = g2.edge(xy);
  if (e1.touches(e2.u) || e1.touches(e2.v) || e1.is_loop() || e2.is_loop() || e3.is_loop()) {
    throw BadParameter("dot product needs independent edges");
  }
  auto others = [&](Vertex x, Vertex skip) {
    std::vector<Vertex> out;
    for (EdgeId e : g2.incident(x)) {
      if (e != xy) out.push_back(g2.edge(e).other(x));
    }
    std::sort(out.begin(), out.end());
    if (out.size() != 2 || std::find(out.begin(), out.end(), skip) != out.end()) {
      throw BadParameter("dot product needs a simple edge xy");
    }
    return out;
  };
  const auto xs = others(e3.u, e3.v), ys = others(e3.v, e3.u);
  const int n1 = g1.order();
  std::vector<Vertex> id2(static_cast<std::size_t>(g2.order()), -1);
  int n = n1;
  for (Vertex x = 0; x < g2.order(); ++x) {
    if (!e3.touches(x)) id2[x] = n++;
  }
  Graph h(n);
  for (EdgeId e = 0; e < g1.size(); ++e) {
    if (e != ab && e != cd) h.add_edge(g1.edge(e).u, g1.edge(e).v);
  }
  for (const Edge& e : g2.edges()) {
    if (!e.touches(e3.u) && !e.touches(e3.v)) h.add_edge(id2[e.u], id2[e.v]);
  }
  h.add_edge(e1.u, id2[xs[0]]);
  h.add_edge(e1.v, id2[xs[1]]);
  h.add_edge(e2.u, id2[ys[0]]);
  h.add_edge(e2.v, id2[ys[1]]);
  return CubicGraph(std::move(h));
}

// The two Blanusa snarks on 18 vertices (variant 1 or 2).
inline CubicGraph blanusa(int variant) {
  const CubicGraph p = petersen();
  // Edges at distance 2 (joined by a third edge) vs distance 3 in L(Pg):
  // outer edges 01 and 23 are joined by 12; 01 and the inner edge 79 are not
  // joined by any edge.
  auto find = [&](Vertex a, Vertex b) {
    for (EdgeId e = 0; e < p.size(); ++e) {
      if (p.edge(e).touches(a) && p.edge(e).touches(b)) return e;
    }
    throw InternalError("edge missing");
  };
  if (variant == 1) return dot_product(p, find(0, 1), find(2, 3), p, find(0, 5));
  if (variant == 2) return dot_product(p, find(0, 1), find(7, 9), p, find(0, 5));
  throw BadParameter("Blanusa variant must be 1 or 2");
}

namespace detail {

// Uniform integer in [0, bound) from raw 64-bit output, independent of the
// standard library's distribution implementations.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

template <class T>
void shuffle(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(rng, i)]);
}

}  // namespace detail

// Pairing model on 3n points, resampled until loopless and bridgeless.
// Parallel edges are allowed. Edge ids follow the sorted pair list.
inline CubicGraph random_bridgeless_cubic(int n, std::uint64_t seed) {
  if (n < 2 || n % 2 == 1) throw BadParameter("random cubic graph needs even n >= 2, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<int> points(static_cast<std::size_t>(3 * n));
  for (;;) {
    for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
    detail::shuffle(points, rng);
    std::vector<std::pair<int, int>> p;
    bool loop = false;
    for (int i = 0; i < 3 * n; i += 2) {
      loop = loop || points[i] == points[i + 1];
      p.emplace_back(points[i], points[i + 1]);
    }
    if (loop) continue;
    Graph g = detail::from_pairs(n, p);
    if (is_connected(g) && is_bridgeless(g)) return CubicGraph(std::move(g));
  }
}

// Connected bipartite cubic multigraph with parts {0..n/2-1}, {n/2..n-1}.
inline CubicGraph random_bipartite_cubic(int n, std::uint64_t seed) {
  if (n < 2 || n % 2 == 1) throw BadParameter("random bipartite cubic graph needs even n >= 2");
  const int h = n / 2;
  std::mt19937_64 rng(seed);
  std::vector<int> right(static_cast<std::size_t>(3 * h));
  for (;;) {
    for (int i = 0; i < 3 * h; ++i) right[i] = h + i / 3;
    detail::shuffle(right, rng);
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < 3 * h; ++i) p.emplace_back(i / 3, right[i]);
    Graph g = detail::from_pairs(n, p);
    if (is_connected(g)) return CubicGraph(std::move(g));
  }
}

struct AlmostBipartiteInstance {
  CubicGraph graph;
  EdgeId e = -1;  // inside the first part
  EdgeId f = -1;  // inside the second part
};

// A random bipartite cubic graph with one rewire: edges a1b1, a2b2 with
// a1 != a2, b1 != b2 become a1a2 and b1b2. Resampled until the result is
// connected, bridgeless and not bipartite.
inline AlmostBipartiteInstance random_almost_bipartite(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 == 1) throw BadParameter("almost bipartite generator needs even n >= 4");
  std::mt19937_64 rng(seed);
  for (;;) {
    const CubicGraph base = random_bipartite_cubic(n, rng());
    const auto i = static_cast<EdgeId>(detail::below(rng, static_cast<std::uint64_t>(base.size())));
    const auto j = static_cast<EdgeId>(detail::below(rng, static_cast<std::uint64_t>(base.size())));
    const Edge x = base.edge(i), y = base.edge(j);  // u in the first part
    if (x.u == y.u || x.v == y.v) continue;
    Graph g(n);
    for (EdgeId k = 0; k < base.size(); ++k) {
      if (k != i && k != j) g.add_edge(base.edge(k).u, base.edge(k).v);
    }
    AlmostBipartiteInstance out;
    out.e = g.add_edge(std::min(x.u, y.u), std::max(x.u, y.u));
    out.f = g.add_edge(std::min(x.v, y.v), std::max(x.v, y.v));
    if (!is_connected(g) || !is_bridgeless(g) || is_bipartite(g)) continue;
    out.graph = CubicGraph(std::move(g));
    return out;
  }
}

}  // namespace cubicpm

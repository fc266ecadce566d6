#pragma once

// Perfect matchings: existence via Edmonds' blossom search, enumeration,
// prescribed and forbidden edges, Tutte sets and the 6-cut analysis.

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubicpm/graph.hpp"

namespace cubicpm {

struct PerfectMatching {
  std::vector<EdgeId> edges;  // sorted

  bool contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
  friend auto operator<=>(const PerfectMatching&, const PerfectMatching&) = default;
};

// True iff the edges cover every vertex of h exactly once using edges of h.
inline bool is_perfect_matching(const Subgraph& h, std::span<const EdgeId> edges) {
  const Graph& g = *h.parent;
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.size() || !h.has_edge(e)) return false;
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return false;
    ++hits[ed.u];
    ++hits[ed.v];
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (hits[v] != (h.has_vertex(v) ? 1 : 0)) return false;
  }
  return true;
}

inline bool is_perfect_matching(const Graph& g, std::span<const EdgeId> edges) {
  return is_perfect_matching(whole(g), edges);
}

namespace detail {

// Maximum cardinality matching on the simple graph underlying h (loops
// dropped, parallel edges merged). mate[i] is a local vertex index or -1.
class Blossom {
 public:
  explicit Blossom(const Subgraph& h) : h_(h), n_(h.order()) {
    const Graph& g = *h.parent;
    local_.assign(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < n_; ++i) local_[h.vertices[i]] = i;
    adj_.resize(static_cast<std::size_t>(n_));
    for (EdgeId e : h.edges) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      const int a = local_[ed.u], b = local_[ed.v];
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    mate_.assign(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) continue;
      for (int w : adj_[v]) {
        if (mate_[w] < 0) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] < 0) augment_from(v);
    }
  }

  int matched_pairs() const {
    return static_cast<int>(std::count_if(mate_.begin(), mate_.end(), [](int m) { return m >= 0; })) / 2;
  }
  bool perfect() const { return 2 * matched_pairs() == n_; }

  // Matching as parent edge ids, choosing the smallest id among parallels.
  std::vector<EdgeId> edges() const {
    const Graph& g = *h_.parent;
    std::vector<EdgeId> out;
    std::vector<char> done(static_cast<std::size_t>(n_), 0);
    for (EdgeId e : h_.edges) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      const int a = local_[ed.u], b = local_[ed.v];
      if (mate_[a] == b && !done[a]) {
        done[a] = done[b] = 1;
        out.push_back(e);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(static_cast<std::size_t>(n_), 0);
    parent_.assign(static_cast<std::size_t>(n_), -1);
    base_.resize(static_cast<std::size_t>(n_));
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const int cur = lca(v, to);
          in_blossom_.assign(static_cast<std::size_t>(n_), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  void augment_from(int root) {
    int v = find_path(root);
    while (v >= 0) {
      const int pv = parent_[v];
      const int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Subgraph& h_;
  int n_;
  std::vector<int> local_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace detail

inline int maximum_matching_size(const Subgraph& h) { return detail::Blossom(h).matched_pairs(); }

// Witness perfect matching of h, or nothing.
inline std::optional<PerfectMatching> has_perfect_matching(const Subgraph& h) {
  if (h.order() % 2 == 1) return std::nullopt;
  for (Vertex v : h.vertices) {
    const auto inc = h.parent->incident(v);
    const bool isolated = std::none_of(inc.begin(), inc.end(), [&](EdgeId e) {
      return h.has_edge(e) && !h.parent->edge(e).is_loop();
    });
    if (isolated) return std::nullopt;
  }
  detail::Blossom b(h);
  if (!b.perfect()) return std::nullopt;
  return PerfectMatching{b.edges()};
}

inline std::optional<PerfectMatching> has_perfect_matching(const Graph& g) {
  return has_perfect_matching(whole(g));
}

// Every perfect matching, sorted lexicographically by edge-id sequence.
// Throws CapExceeded as soon as more than cap matchings exist.
inline std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g, long cap) {
  if (cap < 1) throw std::invalid_argument("enumerate_perfect_matchings: cap must be >= 1");
  std::vector<PerfectMatching> out;
  if (g.order() % 2 == 1) return out;
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  std::vector<EdgeId> chosen;
  auto rec = [&](auto&& self, Vertex from) -> void {
    Vertex v = from;
    while (v < g.order() && covered[v]) ++v;
    if (v == g.order()) {
      if (static_cast<long>(out.size()) >= cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " perfect matchings");
      }
      PerfectMatching pm{chosen};
      std::sort(pm.edges.begin(), pm.edges.end());
      out.push_back(std::move(pm));
      return;
    }
    std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    for (EdgeId e : inc) {
      const Vertex w = g.edge(e).other(v);
      if (w == v || covered[w]) continue;
      covered[v] = covered[w] = 1;
      chosen.push_back(e);
      self(self, v + 1);
      chosen.pop_back();
      covered[v] = covered[w] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_matching(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop() || hit[ed.u] || hit[ed.v]) return false;
    hit[ed.u] = hit[ed.v] = 1;
  }
  return true;
}

// A perfect matching containing every required edge, or nothing.
inline std::optional<PerfectMatching> pm_containing(const Graph& g, std::vector<EdgeId> required) {
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  if (!is_matching(g, required)) throw RequiredNotMatching("required edges share a vertex or include a loop");
  std::vector<Vertex> ends;
  for (EdgeId e : required) {
    ends.push_back(g.edge(e).u);
    ends.push_back(g.edge(e).v);
  }
  auto rest = has_perfect_matching(remove_vertices(whole(g), ends));
  if (!rest) return std::nullopt;
  rest->edges.insert(rest->edges.end(), required.begin(), required.end());
  std::sort(rest->edges.begin(), rest->edges.end());
  return rest;
}

// A perfect matching avoiding every forbidden edge, or nothing.
inline std::optional<PerfectMatching> pm_avoiding(const Graph& g, std::span<const EdgeId> forbidden) {
  return has_perfect_matching(remove_edges(whole(g), forbidden));
}

struct TutteCertificate {
  std::vector<Vertex> s;
  std::vector<Subgraph> components;  // of h - s
  int odd_count = 0;
};

// Largest subgraph order for which the Tutte set is found by exhaustive search
// over subsets in (size, lexicographic) order. Larger subgraphs use the
// Gallai-Edmonds set, shrunk to an inclusion-minimal one.
inline constexpr int kExhaustiveTutteLimit = 24;

namespace detail {

inline int tutte_surplus(const Subgraph& h, const std::vector<Vertex>& s) {
  return odd_count(components(remove_vertices(h, s))) - static_cast<int>(s.size());
}

}  // namespace detail

inline std::optional<TutteCertificate> tutte_certificate(const Subgraph& h) {
  if (has_perfect_matching(h)) return std::nullopt;
  std::optional<std::vector<Vertex>> s;
  const int n = h.order();
  if (n <= kExhaustiveTutteLimit) {
    std::vector<Vertex> pick;
    auto rec = [&](auto&& self, int from, int left) -> bool {
      if (left == 0) return detail::tutte_surplus(h, pick) > 0;
      for (int i = from; i + left <= n; ++i) {
        pick.push_back(h.vertices[i]);
        if (self(self, i + 1, left - 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    for (int size = 0; size <= n && !s; ++size) {
      pick.clear();
      if (rec(rec, 0, size)) s = pick;
    }
  } else {
    // Gallai-Edmonds: D = vertices missed by some maximum matching,
    // A = neighbours of D outside D.
    const int nu = maximum_matching_size(h);
    std::vector<char> in_d(static_cast<std::size_t>(h.parent->order()), 0);
    for (Vertex v : h.vertices) {
      if (maximum_matching_size(remove_vertices(h, {v})) == nu) in_d[v] = 1;
    }
    std::vector<Vertex> a;
    for (EdgeId e : h.edges) {
      const Edge& ed = h.parent->edge(e);
      if (in_d[ed.u] && !in_d[ed.v]) a.push_back(ed.v);
      if (in_d[ed.v] && !in_d[ed.u]) a.push_back(ed.u);
    }
    a = detail::sorted_unique(a);
    for (std::size_t i = 0; i < a.size();) {
      auto smaller = a;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (detail::tutte_surplus(h, smaller) > 0) {
        a = std::move(smaller);
      } else {
        ++i;
      }
    }
    s = a;
  }
  if (!s) throw InternalError("no Tutte set found for a graph without a perfect matching");
  TutteCertificate cert;
  cert.s = *s;
  cert.components = components(remove_vertices(h, cert.s));
  cert.odd_count = odd_count(cert.components);
  return cert;
}

// Certificate branch of the 6-cut analysis.
struct SixCutObstruction {
  std::vector<Vertex> s;
  std::vector<Subgraph> components;
  std::vector<int> cut_sizes;  // |delta_G(L)| per component L of H - S
};

struct SixCutAnalysis {
  std::variant<PerfectMatching, SixCutObstruction> outcome;

  bool has_matching() const { return std::holds_alternative<PerfectMatching>(outcome); }
  const PerfectMatching& matching() const { return std::get<PerfectMatching>(outcome); }
  const SixCutObstruction& obstruction() const { return std::get<SixCutObstruction>(outcome); }
};

// Checks every structural property promised for the obstruction branch:
// S independent and trivalent in H, all components of H - S odd,
// odd(H - S) = |S| + 2, each component has a 3-edge cut in G, and no edge of
// delta_G(H) ends in S. Returns an empty string when all hold.
inline std::string six_cut_violation(const Graph& g, const Subgraph& h, const SixCutObstruction& ob) {
  const auto in_s = detail::membership(g.order(), ob.s);
  for (Vertex v : ob.s) {
    if (!h.has_vertex(v)) return "S vertex outside H";
    int deg = 0;
    for (EdgeId e : g.incident(v)) {
      if (!h.has_edge(e)) continue;
      ++deg;
      if (in_s[g.edge(e).other(v)]) return "S is not independent";
    }
    if (deg != 3) return "S vertex not trivalent in H";
  }
  const auto comps = components(remove_vertices(h, ob.s));
  if (comps.size() != ob.components.size()) return "component list mismatch";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].order() % 2 == 0) return "even component in H - S";
    const auto cut = boundary(g, comps[i].vertices);
    if (cut.size() != 3) return "component cut of size " + std::to_string(cut.size());
    if (i >= ob.cut_sizes.size() || ob.cut_sizes[i] != 3) return "recorded cut size mismatch";
  }
  if (odd_count(comps) != static_cast<int>(ob.s.size()) + 2) return "odd(H - S) != |S| + 2";
  for (EdgeId e : boundary(g, h.vertices)) {
    if (in_s[g.edge(e).u] || in_s[g.edge(e).v]) return "6-cut edge incident with S";
  }
  return {};
}

// H is taken as the subgraph of g induced by h's vertices.
inline SixCutAnalysis analyze_six_cut(const Graph& g, const Subgraph& h_in) {
  require_bridgeless(g);
  const Subgraph h = induced_subgraph(g, h_in.vertices);
  const auto cut = boundary(g, h.vertices);
  if (cut.size() != 6) throw NotSixCut("|delta(H)| = " + std::to_string(cut.size()));
  if (auto pm = has_perfect_matching(h)) return {*pm};
  auto tc = tutte_certificate(h);
  SixCutObstruction ob{tc->s, tc->components, {}};
  for (const auto& c : ob.components) ob.cut_sizes.push_back(static_cast<int>(boundary(g, c.vertices).size()));
  if (auto why = six_cut_violation(g, h, ob); !why.empty()) {
    throw InternalError("6-cut obstruction violates its structure: " + why);
  }
  return {ob};
}

}  // namespace cubicpm

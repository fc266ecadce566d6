#pragma once

// Text formats: graph6 (simple graphs), sparse6 (multigraphs with loops) and
// cmg, a plain edge list that keeps edge ids in file order.
//
//   cmg <n> <m>
//   u v          (m lines, 0-indexed; repeated pairs are parallel edges,
//   ...           "u u" is a loop)

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cubicpm/graph.hpp"

namespace cubicpm {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

// Decodes N(n) and advances pos. Returns -1 on malformed input.
inline long decode_order(std::string_view s, std::size_t& pos) {
  auto byte = [&](std::size_t i) -> int {
    if (i >= s.size()) return -1;
    const int c = static_cast<unsigned char>(s[i]);
    return (c < 63 || c > 126) ? -1 : c - 63;
  };
  if (pos >= s.size()) return -1;
  if (s[pos] != '~') return byte(pos++);
  long n = 0;
  int digits = 3;
  ++pos;
  if (pos < s.size() && s[pos] == '~') {
    ++pos;
    digits = 6;
  }
  for (int i = 0; i < digits; ++i) {
    const int b = byte(pos++);
    if (b < 0) return -1;
    n = (n << 6) | b;
  }
  return n;
}

inline void encode_order(long n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

struct BitWriter {
  std::string out;
  int acc = 0;
  int filled = 0;
  void put(int bit) {
    acc = (acc << 1) | (bit & 1);
    if (++filled == 6) {
      out.push_back(static_cast<char>(acc + 63));
      acc = filled = 0;
    }
  }
  void put(long value, int width) {
    for (int i = width - 1; i >= 0; --i) put(static_cast<int>((value >> i) & 1));
  }
  int pending() const { return filled; }
};

}  // namespace detail

// Parses one graph6 line into a general graph; edge ids follow the
// lexicographic order of the pairs (u, v) with u < v.
inline Graph parse_graph6_graph(std::string_view text) {
  text = detail::trim(text);
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  std::size_t pos = 0;
  const long n = detail::decode_order(text, pos);
  if (n < 0) throw MalformedGraph6("bad order prefix");
  const long bits = n * (n - 1) / 2;
  const long need = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != need) {
    throw MalformedGraph6("expected " + std::to_string(need) + " data bytes, got " +
                          std::to_string(text.size() - pos));
  }
  std::vector<std::pair<int, int>> pairs;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int c = static_cast<unsigned char>(text[pos + k / 6]);
      if (c < 63 || c > 126) throw MalformedGraph6("byte out of range");
      if (((c - 63) >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw MalformedGraph6("byte out of range");
  }
  std::sort(pairs.begin(), pairs.end());
  Graph g(static_cast<int>(n));
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

inline CubicGraph parse_graph6(std::string_view text) { return CubicGraph(parse_graph6_graph(text)); }

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw std::invalid_argument("graph6 cannot encode loops");
    char& cell = adj[static_cast<std::size_t>(std::min(e.u, e.v)) * n + std::max(e.u, e.v)];
    if (cell) throw std::invalid_argument("graph6 cannot encode parallel edges");
    cell = 1;
  }
  std::string out;
  detail::encode_order(n, out);
  detail::BitWriter w;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) w.put(adj[static_cast<std::size_t>(i) * n + j]);
  }
  while (w.pending() != 0) w.put(0);
  return out + w.out;
}

// Parses one sparse6 line; edge ids follow the order of the encoded stream.
inline Graph parse_sparse6_graph(std::string_view text) {
  text = detail::trim(text);
  if (text.substr(0, 11) == ">>sparse6<<") text.remove_prefix(11);
  if (text.empty() || text.front() != ':') throw MalformedSparse6("missing ':' prefix");
  std::size_t pos = 1;
  const long n = detail::decode_order(text, pos);
  if (n < 0) throw MalformedSparse6("bad order prefix");
  int k = 0;
  while ((1L << k) < n) ++k;
  if (n <= 1) k = std::max(k, 1);
  std::vector<int> bits;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw MalformedSparse6("byte out of range");
    for (int b = 5; b >= 0; --b) bits.push_back(((c - 63) >> b) & 1);
  }
  Graph g(static_cast<int>(n));
  long v = 0;
  std::size_t at = 0;
  while (at + 1 + static_cast<std::size_t>(k) <= bits.size()) {
    const int b = bits[at++];
    long x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | bits[at++];
    if (b) ++v;
    if (v >= n || x >= n) break;
    if (x > v) {
      v = x;
    } else {
      g.add_edge(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return g;
}

inline std::string write_sparse6(const Graph& g) {
  const long n = g.order();
  int k = 0;
  while ((1L << k) < n) ++k;
  if (n <= 1) k = std::max(k, 1);
  std::vector<std::pair<int, int>> order;  // (hi, lo) sorted, stable by id
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.size()));
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    const Edge& x = g.edge(a);
    const Edge& y = g.edge(b);
    return std::make_pair(std::max(x.u, x.v), std::min(x.u, x.v)) <
           std::make_pair(std::max(y.u, y.v), std::min(y.u, y.v));
  });
  std::string out = ":";
  detail::encode_order(n, out);
  detail::BitWriter w;
  long cur = 0;
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    const long hi = std::max(e.u, e.v), lo = std::min(e.u, e.v);
    if (hi == cur) {
      w.put(0);
      w.put(lo, k);
    } else if (hi == cur + 1) {
      cur = hi;
      w.put(1);
      w.put(lo, k);
    } else {
      cur = hi;
      w.put(1);
      w.put(hi, k);
      w.put(0);
      w.put(lo, k);
    }
  }
  if (w.pending() != 0) {
    const int pad = 6 - w.pending();
    if (k < 6 && n == (1L << k) && cur == n - 2 && pad >= k + 1) {
      w.put(0);
    }
    while (w.pending() != 0) w.put(1);
  }
  return out + w.out;
}

inline Graph parse_cmg_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  long n = -1, m = -1;
  if (!(in >> tag) || tag != "cmg") throw MalformedCmg("missing 'cmg' header");
  if (!(in >> n >> m) || n < 0 || m < 0) throw MalformedCmg("bad header counts");
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = -1, v = -1;
    if (!(in >> u >> v)) throw MalformedCmg("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n) throw MalformedCmg("edge " + std::to_string(i) + " out of range");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) throw MalformedCmg("trailing data after edge list");
  return g;
}

inline CubicGraph parse_cmg(std::string_view text) { return CubicGraph(parse_cmg_graph(text)); }

inline std::string write_cmg(const Graph& g) {
  std::string out = "cmg " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

// Splits a stream into graph records: graph6/sparse6 lines, or cmg blocks
// separated by blank lines. Lines starting with '#' are skipped.
inline std::vector<std::string> split_records(std::string_view text) {
  std::vector<std::string> records;
  std::string block;
  auto flush = [&] {
    if (!detail::trim(block).empty()) records.emplace_back(detail::trim(block));
    block.clear();
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      flush();
    } else if (line.substr(0, 3) == "cmg") {
      flush();
      block = std::string(line) + "\n";
    } else if (!block.empty()) {
      block += std::string(line) + "\n";
    } else {
      records.emplace_back(line);
    }
    if (end == text.size()) break;
  }
  flush();
  return records;
}

// Dispatches on the record's leading characters.
inline CubicGraph parse_record(std::string_view record) {
  const auto t = detail::trim(record);
  if (t.substr(0, 3) == "cmg") return parse_cmg(t);
  if (!t.empty() && (t.front() == ':' || t.substr(0, 11) == ">>sparse6<<")) return CubicGraph(parse_sparse6_graph(t));
  return parse_graph6(t);
}

}  // namespace cubicpm

#pragma once

// Command-line front end. Every per-graph command emits one certificate:
//
//   {"schema":1,"tool_version":..,"graph":"cmg ..","claim":..,"value":..,
//    "witness":{..},"verified":bool}
//
// plus "error" when the computation failed and "runtime_ms" with --timing.
// "verified" is decided by the checks in validate.hpp, never by the search
// that produced the witness; `verify` re-runs the same checks on a file.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicpm/cubicpm.hpp"
#include "cubicpm/validate.hpp"

namespace cubicpm::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

struct Options {
  std::string command;
  std::string input;
  long pm_cap = kDefaultPmCap;
  std::string format = "json";
  std::uint64_t seed = 1;
  int jobs = 1;
  bool timing = false;
  std::string side;
  // gen
  std::string family;
  int n = 10;
  int k = 5;
  int count = 1;
  std::string base = "k33";
  int u = 0;
  int v = 0;
  std::string pairing = "012";
  int variant = 1;
  std::string out = "cmg";
};

inline const std::vector<std::pair<std::string, std::string>>& claim_names() {
  static const std::vector<std::pair<std::string, std::string>> names{
      {"defect", "defect"},
      {"pmi", "pmi"},
      {"berge-cover", "berge-cover"},
      {"core", "hex-core"},
      {"six-cut", "six-cut"},
      {"bi", "bipartite-index"},
      {"oddness", "oddness"},
      {"cyclic-conn", "cyclic-connectivity"},
      {"theorem1", "theorem1"},
      {"theorem2", "theorem2"},
  };
  return names;
}

inline json to_json(const PerfectMatching& pm) { return pm.edges; }

inline json to_json(const BergeCover& c) {
  json a = json::array();
  for (const auto& pm : c.matchings) a.push_back(pm.edges);
  return a;
}

inline json to_json(const ThreeArray& a) { return json::array({a.m[0].edges, a.m[1].edges, a.m[2].edges}); }

inline std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

inline std::vector<Vertex> default_six_cut_side(const CubicGraph& g) {
  const auto hex = induced_circuits(g, 6);
  if (hex.empty()) throw PreconditionViolated("no induced 6-cycle");
  const auto on = detail::membership(g.order(), hex.front().vertices);
  std::vector<Vertex> side;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!on[v]) side.push_back(v);
  }
  return side;
}

// Computes the claim for one graph. Throws cubicpm::Error on failure.
inline void compute(const std::string& command, const CubicGraph& g, const Options& o, json& cert) {
  json& w = cert["witness"];
  if (command == "defect") {
    const auto d = defect(g, o.pm_cap);
    cert["value"] = d.value;
    w["array"] = to_json(d.witness);
    w["uncovered"] = d.uncovered;
    w["perfect_matchings"] = d.perfect_matchings;
  } else if (command == "pmi") {
    const auto r = pmi(g, o.pm_cap);
    cert["value"] = r.value;
    w["cover"] = to_json(r.witness);
    w["exhaustive"] = r.exhaustive;
    if (r.berge_counterexample) w["berge_counterexample"] = true;
  } else if (command == "berge-cover") {
    const auto d = defect(g, o.pm_cap);
    const BergeCover c = d.value == 3 ? berge_cover_defect3(g, d) : pmi(g, o.pm_cap).witness;
    cert["value"] = c.size();
    w["cover"] = to_json(c);
  } else if (command == "core") {
    const auto d = defect(g, o.pm_cap);
    if (d.value != 3) throw PreconditionDefectNot3("defect is " + std::to_string(d.value));
    const auto c = hex_certificate_from(g, d.witness);
    cert["value"] = d.value;
    w["array"] = to_json(c.array);
    w["core_vertices"] = c.core_vertices;
    w["core_edges"] = c.core_edges;
    w["cut_edges"] = c.cut_edges;
    w["outer_ends"] = c.outer_ends;
    w["uncovered"] = d.uncovered;
  } else if (command == "six-cut") {
    const auto side = o.side.empty() ? default_six_cut_side(g) : parse_vertex_list(o.side);
    Subgraph h{&g, detail::sorted_unique(side), {}};
    for (Vertex v : h.vertices) {
      if (v < 0 || v >= g.order()) throw BadParameter("side vertex out of range");
    }
    const auto a = analyze_six_cut(g, h);
    w["side"] = h.vertices;
    cert["value"] = a.has_matching();
    if (a.has_matching()) {
      w["matching"] = a.matching().edges;
    } else {
      w["s"] = a.obstruction().s;
      json comps = json::array();
      for (const auto& c : a.obstruction().components) comps.push_back(c.vertices);
      w["components"] = comps;
    }
  } else if (command == "bi") {
    const auto r = bipartite_index(g);
    cert["value"] = r.value;
    w["deleted"] = r.deleted;
    w["side"] = r.side;
  } else if (command == "oddness") {
    const auto r = oddness(g, o.pm_cap);
    cert["value"] = r.value;
    w["matching"] = r.complement_of.edges;
    w["two_factor"] = r.two_factor;
  } else if (command == "cyclic-conn") {
    const auto r = cyclic_edge_connectivity(g);
    cert["value"] = r.value;
    w["cycle_rank"] = r.cycle_rank;
    if (r.witness) {
      w["side"] = r.witness->side;
      w["cut"] = r.witness->edges;
    }
  } else if (command == "theorem1") {
    const auto d = defect(g, o.pm_cap);
    const auto c = berge_cover_defect3(g, d);
    cert["value"] = c.size();
    w["array"] = to_json(d.witness);
    w["cover"] = to_json(c);
  } else if (command == "theorem2") {
    const auto v = theorem2_verify(g, o.pm_cap);
    cert["value"] = to_string(v.kind);
    w["array"] = to_json(v.defect.witness);
    if (v.cover) w["cover"] = to_json(*v.cover);
    if (v.isomorphism) w["isomorphism"] = *v.isomorphism;
  } else {
    throw std::invalid_argument("unknown command " + command);
  }
}

// ---- validation -------------------------------------------------------

struct Verdict {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

inline constexpr long kCheckPmLimit = 5000;

inline std::vector<std::vector<EdgeId>> matchings_from(const json& a) {
  std::vector<std::vector<EdgeId>> out;
  for (const auto& m : a) out.push_back(m.get<std::vector<EdgeId>>());
  return out;
}

inline bool check_colourable(const Graph& g, const std::vector<std::vector<EdgeId>>& pms) {
  // 3-edge-colourable iff three pairwise disjoint perfect matchings exist
  std::vector<check::Mask> ms;
  for (const auto& pm : pms) ms.push_back(check::mask_of(g, pm));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      bool disjoint = true;
      for (std::size_t w = 0; w < ms[i].size(); ++w) disjoint = disjoint && (ms[i][w] & ms[j][w]) == 0;
      if (!disjoint) continue;
      for (std::size_t k = j + 1; k < ms.size(); ++k) {
        int total = 0;
        for (std::size_t w = 0; w < ms[i].size(); ++w) {
          total += check::popcount({ms[i][w] | ms[j][w] | ms[k][w]});
        }
        if (total == g.size()) return true;
      }
    }
  }
  return false;
}

// Every 3-array misses at least `value` edges. Exact triple scan when the
// matching list is small; otherwise only non-colourability can be shown,
// which settles value 3 since a cubic graph has defect 0 or at least 3.
inline void check_defect_lower(const Graph& g, int value, Verdict& v) {
  if (value <= 0) return;
  auto pms = check::all_perfect_matchings(g, kCheckPmLimit);
  if (!pms) return v.fail("too many perfect matchings to check optimality");
  if (pms->size() <= 800) {
    const int best = check::min_uncovered_by_three(g, *pms);
    if (best != value) v.fail("a 3-array misses " + std::to_string(best) + " edges");
    return;
  }
  if (value != 3) return v.fail("optimality of defect > 3 not checkable at this size");
  if (check_colourable(g, *pms)) v.fail("graph is 3-edge-colourable");
}

inline void check_cover_lower(const Graph& g, int value, Verdict& v) {
  if (value <= 3) return;  // three matchings are needed at any vertex
  auto pms = check::all_perfect_matchings(g, kCheckPmLimit);
  if (!pms) return v.fail("too many perfect matchings to check the lower bound");
  if (value == 4) {
    if (check_colourable(g, *pms)) v.fail("graph is 3-edge-colourable");
    return;
  }
  if (value == 5) {
    if (pms->size() > 200) return v.fail("too many perfect matchings to rule out a 4-cover");
    if (check::has_cover_of_size(g, *pms, 4)) v.fail("a 4-cover exists");
    return;
  }
  v.fail("lower bound above 5 is not checked");
}

inline void check_defect_array(const Graph& g, const json& w, int value, Verdict& v) {
  const auto arr = matchings_from(w.at("array"));
  if (arr.size() != 3) return v.fail("array does not have three matchings");
  std::vector<int> hits(static_cast<std::size_t>(g.size()), 0);
  for (const auto& m : arr) {
    if (!check::perfect_matching(g, m)) return v.fail("array member is not a perfect matching");
    for (EdgeId e : m) ++hits[e];
  }
  const int missed = static_cast<int>(std::count(hits.begin(), hits.end(), 0));
  if (missed != value) v.fail("array misses " + std::to_string(missed) + " edges, claimed " + std::to_string(value));
}

inline void check_hex_core(const Graph& g, const json& w, Verdict& v) {
  const auto arr = matchings_from(w.at("array"));
  std::vector<int> hits(static_cast<std::size_t>(g.size()), 0);
  for (const auto& m : arr) {
    for (EdgeId e : m) ++hits[e];
  }
  const auto cv = w.at("core_vertices").get<std::vector<Vertex>>();
  const auto ce = w.at("core_edges").get<std::vector<EdgeId>>();
  const auto cut = w.at("cut_edges").get<std::vector<EdgeId>>();
  const auto outer = w.at("outer_ends").get<std::vector<Vertex>>();
  if (cv.size() != 6 || ce.size() != 6 || cut.size() != 6 || outer.size() != 6) return v.fail("hexagon lists need 6 entries");
  std::vector<EdgeId> core;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (hits[e] != 1) core.push_back(e);
  }
  auto sorted = ce;
  std::sort(sorted.begin(), sorted.end());
  if (core != sorted) return v.fail("core edges differ from the edges not covered exactly once");
  std::vector<Vertex> distinct = cv;
  std::sort(distinct.begin(), distinct.end());
  if (std::unique(distinct.begin(), distinct.end()) != distinct.end()) return v.fail("hexagon repeats a vertex");
  for (int i = 0; i < 6; ++i) {
    const Edge& e = g.edge(ce[i]);
    const Vertex a = cv[i], b = cv[(i + 1) % 6];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return v.fail("core edge does not join consecutive vertices");
    if (hits[ce[i]] != 0 && hits[ce[i]] != 2) return v.fail("core edge covered once or three times");
    if ((hits[ce[i]] == 0) == (hits[ce[(i + 1) % 6]] == 0)) return v.fail("uncovered edges are not alternate");
    const Edge& f = g.edge(cut[i]);
    if (!f.touches(cv[i]) || f.other(cv[i]) != outer[i]) return v.fail("cut edge does not leave v_i towards u_i");
    if (std::binary_search(distinct.begin(), distinct.end(), outer[i])) return v.fail("hexagon has a chord");
  }
}

inline void check_six_cut(const Graph& g, const json& w, bool has_pm, Verdict& v) {
  const auto side = w.at("side").get<std::vector<Vertex>>();
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : side) in.at(x) = 1;
  int cut = 0;
  for (const Edge& e : g.edges()) cut += in[e.u] != in[e.v] ? 1 : 0;
  if (cut != 6) return v.fail("side does not span a 6-edge-cut");
  if (has_pm) {
    std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
    for (EdgeId e : w.at("matching").get<std::vector<EdgeId>>()) {
      const Edge& x = g.edge(e);
      if (!in[x.u] || !in[x.v] || x.u == x.v) return v.fail("matching edge leaves H");
      ++hits[x.u];
      ++hits[x.v];
    }
    for (Vertex x : side) {
      if (hits[x] != 1) return v.fail("matching is not perfect on H");
    }
    return;
  }
  const auto s = w.at("s").get<std::vector<Vertex>>();
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 1), in_s(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : side) gone[x] = 0;
  for (Vertex x : s) {
    if (!in.at(x)) return v.fail("S leaves H");
    gone[x] = 1;
    in_s[x] = 1;
  }
  std::vector<char> no_edges(static_cast<std::size_t>(g.size()), 0);
  const auto comps = check::components_without(g, gone, no_edges);
  int odd = 0;
  for (const auto& c : comps) {
    odd += static_cast<int>(c.size() % 2);
    std::vector<char> inc(static_cast<std::size_t>(g.order()), 0);
    for (Vertex x : c) inc[x] = 1;
    int d = 0;
    for (const Edge& e : g.edges()) d += inc[e.u] != inc[e.v] ? 1 : 0;
    if (c.size() % 2 == 1 && d != 3) return v.fail("odd component without a 3-edge cut");
  }
  if (odd != static_cast<int>(s.size()) + 2) return v.fail("odd(H - S) != |S| + 2");
  for (const Edge& e : g.edges()) {
    if (in_s[e.u] && in_s[e.v]) return v.fail("S is not independent");
    if (in[e.u] != in[e.v] && (in_s[e.u] || in_s[e.v])) return v.fail("6-cut edge ends in S");
    if (in_s[e.u] != in_s[e.v] && !(in[e.u] && in[e.v])) return v.fail("S vertex not trivalent in H");
  }
}

inline Verdict validate(const json& cert) {
  Verdict v;
  if (cert.contains("error")) {
    v.fail("computation failed");
    return v;
  }
  Graph g;
  try {
    g = parse_cmg_graph(cert.at("graph").get<std::string>());
  } catch (const std::exception& e) {
    v.fail(std::string("graph: ") + e.what());
    return v;
  }
  try {
    const std::string claim = cert.at("claim").get<std::string>();
    const json& w = cert.at("witness");
    const json& value = cert.at("value");
    if (claim == "defect") {
      check_defect_array(g, w, value.get<int>(), v);
      check_defect_lower(g, value.get<int>(), v);
    } else if (claim == "pmi" || claim == "berge-cover" || claim == "theorem1") {
      const auto cover = matchings_from(w.at("cover"));
      if (!check::covers(g, cover)) v.fail("cover is not a set of perfect matchings covering every edge");
      if (static_cast<int>(cover.size()) != value.get<int>()) v.fail("cover size differs from the value");
      if (claim == "pmi") check_cover_lower(g, value.get<int>(), v);
      if (claim != "pmi" && cover.size() > 5) v.fail("more than five matchings");
      if (claim == "theorem1") {
        check_defect_array(g, w, 3, v);
        check_defect_lower(g, 3, v);
      }
    } else if (claim == "hex-core") {
      check_defect_array(g, w, 3, v);
      check_defect_lower(g, 3, v);
      check_hex_core(g, w, v);
    } else if (claim == "six-cut") {
      check_six_cut(g, w, value.get<bool>(), v);
    } else if (claim == "bipartite-index") {
      const auto del = w.at("deleted").get<std::vector<EdgeId>>();
      if (static_cast<int>(del.size()) != value.get<int>()) v.fail("deletion set size differs from the value");
      if (!check::bipartite_after(g, del, w.at("side").get<std::vector<int>>())) v.fail("deletion leaves an edge inside a side");
      if (!check::no_bipartition_below(g, value.get<int>())) v.fail("a smaller deletion set exists");
    } else if (claim == "oddness") {
      const auto pm = w.at("matching").get<std::vector<EdgeId>>();
      if (!check::perfect_matching(g, pm)) return v.fail("witness is not a perfect matching"), v;
      if (check::odd_circuits_of_complement(g, pm) != value.get<int>()) v.fail("odd circuit count differs");
      auto pms = check::all_perfect_matchings(g, kCheckPmLimit);
      if (!pms) {
        v.fail("too many perfect matchings to check minimality");
      } else {
        for (const auto& m : *pms) {
          if (check::odd_circuits_of_complement(g, m) < value.get<int>()) {
            v.fail("a 2-factor with fewer odd circuits exists");
            break;
          }
        }
      }
    } else if (claim == "cyclic-connectivity") {
      const int k = value.get<int>();
      const int rank = g.size() - g.order() + 1;
      if (w.at("cycle_rank").get<int>() != rank) v.fail("cycle rank mismatch");
      if (w.contains("cut")) {
        const auto cut = w.at("cut").get<std::vector<EdgeId>>();
        if (static_cast<int>(cut.size()) != k || !check::cycle_separating(g, cut)) v.fail("cut is not cycle-separating of the claimed size");
      } else if (k != rank) {
        v.fail("no cut given and value differs from the cycle rank");
      }
      const auto lower = check::no_cycle_separating_below(g, k);
      if (!lower) {
        v.fail("too many edge subsets to check minimality");
      } else if (!*lower) {
        v.fail("a smaller cycle-separating edge set exists");
      }
    } else if (claim == "theorem2") {
      const std::string verdict = value.get<std::string>();
      check_defect_array(g, w, 3, v);
      check_defect_lower(g, 3, v);
      if (const auto lower = check::no_cycle_separating_below(g, 4); !lower || !*lower) {
        v.fail("graph is not cyclically 4-edge-connected");
      }
      if (verdict == "four-cover") {
        const auto cover = matchings_from(w.at("cover"));
        if (cover.size() != 4 || !check::covers(g, cover)) v.fail("not a 4-cover");
      } else if (verdict == "petersen") {
        if (!check::isomorphism(g, petersen(), w.at("isomorphism").get<std::vector<Vertex>>())) {
          v.fail("isomorphism to the Petersen graph fails");
        }
      } else {
        v.fail("verdict " + verdict);
      }
    } else {
      v.fail("unknown claim " + claim);
    }
  } catch (const std::exception& e) {
    v.fail(std::string("malformed witness: ") + e.what());
  }
  return v;
}

inline json certify(const std::string& command, const std::string& claim, const CubicGraph& g, const Options& o) {
  json cert;
  cert["schema"] = 1;
  cert["tool_version"] = kToolVersion;
  cert["graph"] = write_cmg(g);
  cert["claim"] = claim;
  cert["value"] = nullptr;
  cert["witness"] = json::object();
  const auto start = std::chrono::steady_clock::now();
  try {
    compute(command, g, o, cert);
  } catch (const Error& e) {
    cert["value"] = nullptr;
    cert["witness"] = json::object();
    cert["error"] = {{"kind", e.kind()}, {"message", e.what()}};
  } catch (const std::logic_error& e) {
    cert["value"] = nullptr;
    cert["witness"] = json::object();
    cert["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
  }
  const Verdict v = validate(cert);
  cert["verified"] = v.ok;
  if (!v.ok && !cert.contains("error")) cert["note"] = v.note;
  if (o.timing) {
    cert["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return cert;
}

inline std::string value_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline std::string render(const json& cert, const Options& o, std::size_t index) {
  if (o.format == "tsv") {
    return std::to_string(index) + "\t" + cert.at("claim").get<std::string>() + "\t" + value_text(cert.at("value")) +
           "\t" + (cert.at("verified").get<bool>() ? "true" : "false") + "\n";
  }
  return cert.dump() + "\n";
}

inline std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline CubicGraph named_graph(const std::string& name) {
  if (name == "petersen") return petersen();
  if (name == "k4") return k4();
  if (name == "k33") return k33();
  if (name == "dipole3") return dipole3();
  if (name == "q3" || name == "cube_q3") return cube_q3();
  if (name == "prism3") return prism3();
  if (name == "heawood") return heawood();
  throw BadParameter("unknown graph " + name);
}

inline std::vector<CubicGraph> generate(const Options& o) {
  std::vector<CubicGraph> out;
  const std::string& f = o.family;
  if (f == "flower") {
    out.push_back(flower_snark(o.k));
  } else if (f == "section7") {
    if (o.pairing.size() != 3) throw BadParameter("pairing needs three digits");
    std::array<int, 3> p{o.pairing[0] - '0', o.pairing[1] - '0', o.pairing[2] - '0'};
    out.push_back(section7(named_graph(o.base), o.u, o.v, p).graph);
  } else if (f == "blanusa") {
    out.push_back(blanusa(o.variant));
  } else if (f == "random" || f == "bipartite" || f == "almost-bipartite") {
    for (int i = 0; i < o.count; ++i) {
      const std::uint64_t s = o.seed + static_cast<std::uint64_t>(i);
      if (f == "random") out.push_back(random_bridgeless_cubic(o.n, s));
      if (f == "bipartite") out.push_back(random_bipartite_cubic(o.n, s));
      if (f == "almost-bipartite") out.push_back(random_almost_bipartite(o.n, s).graph);
    }
  } else {
    out.push_back(named_graph(f));
  }
  return out;
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Perfect matching invariants of bridgeless cubic graphs", "cubicpm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "input file (default: stdin)");
    sub->add_option("--pm-cap", o.pm_cap, "maximum number of perfect matchings to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", o.timing, "add runtime_ms to certificates");
  };
  for (const auto& [cmd, claim] : claim_names()) {
    auto* sub = app.add_subcommand(cmd, "certify the " + claim + " claim");
    add_common(sub);
    if (cmd == "six-cut") sub->add_option("--side", o.side, "comma-separated vertices of H");
    sub->callback([&o, c = cmd] { o.command = c; });
  }
  auto* gen = app.add_subcommand("gen", "generate graphs");
  gen->add_option("family", o.family, "petersen|k4|k33|dipole3|q3|prism3|heawood|flower|section7|blanusa|random|bipartite|almost-bipartite")->required();
  gen->add_option("--n", o.n, "order for random families");
  gen->add_option("--k", o.k, "flower snark parameter");
  gen->add_option("--count", o.count, "number of random graphs");
  gen->add_option("--seed", o.seed, "first seed");
  gen->add_option("--base", o.base, "bipartite base graph for section7");
  gen->add_option("--u", o.u, "vertex removed from the base");
  gen->add_option("--v", o.v, "vertex removed from the Petersen graph");
  gen->add_option("--pairing", o.pairing, "permutation of the base side, e.g. 021");
  gen->add_option("--variant", o.variant, "Blanusa variant (1 or 2)");
  gen->add_option("--out", o.out, "output format")->check(CLI::IsMember({"cmg", "graph6", "sparse6"}));
  gen->callback([&o] { o.command = "gen"; });
  auto* ver = app.add_subcommand("verify", "re-check certificates");
  ver->add_option("input", o.input, "certificate file (JSON lines; default: stdin)");
  ver->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  ver->callback([&o] { o.command = "verify"; });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.command == "gen") {
    try {
      bool first = true;
      for (const auto& g : generate(o)) {
        if (o.out == "graph6") {
          out << write_graph6(g) << "\n";
        } else if (o.out == "sparse6") {
          out << write_sparse6(g) << "\n";
        } else {
          out << (first ? "" : "\n") << write_cmg(g);
        }
        first = false;
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    return 0;
  }

  std::string text;
  if (o.input.empty() || o.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(o.input);
    if (!f) {
      err << "error: cannot open " << o.input << "\n";
      return 1;
    }
    text = read_all(f);
  }

  if (o.command == "verify") {
    bool all = true;
    std::size_t index = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (detail::trim(line).empty()) continue;
      json cert;
      try {
        cert = json::parse(line);
      } catch (const json::exception& e) {
        err << "error: certificate " << index << ": " << e.what() << "\n";
        return 1;
      }
      const Verdict v = validate(cert);
      cert["verified"] = v.ok;
      cert.erase("note");
      if (!v.ok && !cert.contains("error")) cert["note"] = v.note;
      all = all && v.ok;
      out << render(cert, o, index++);
    }
    return all ? 0 : 2;
  }

  std::vector<CubicGraph> graphs;
  const auto records = split_records(text);
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      graphs.push_back(parse_record(records[i]));
    } catch (const std::exception& e) {
      err << "error: record " << i << ": " << e.what() << "\n";
      return 1;
    }
  }
  std::string claim;
  for (const auto& [cmd, c] : claim_names()) {
    if (cmd == o.command) claim = c;
  }
  std::vector<json> certs(graphs.size());
  parallel_for(graphs.size(), o.jobs, [&](std::size_t i) { certs[i] = certify(o.command, claim, graphs[i], o); });
  bool all = true;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    all = all && certs[i].at("verified").get<bool>();
    out << render(certs[i], o, i);
  }
  return all ? 0 : 2;
}

}  // namespace cubicpm::cli

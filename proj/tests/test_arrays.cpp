#include <gtest/gtest.h>

#include "cubicpm/cubicpm.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace cubicpm;

namespace {

// An optimal Petersen array whose core is the hexagon 0-1-2-3-8-5.
ThreeArray petersen_hexagon_array() {
  const auto p = petersen();
  const auto pms = enumerate_perfect_matchings(p, 100);
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (std::size_t j = i; j < pms.size(); ++j) {
      for (std::size_t k = j; k < pms.size(); ++k) {
        const ThreeArray a{{pms[i], pms[j], pms[k]}};
        if (core_of(p, a).subgraph.vertices == std::vector<Vertex>{0, 1, 2, 3, 5, 8}) return a;
      }
    }
  }
  throw std::runtime_error("no such array");
}

}  // namespace

TEST(Arrays, PetersenHexagonArray) {
  const auto p = petersen();
  const auto a = petersen_hexagon_array();
  const auto core = core_of(p, a);
  EXPECT_EQ(core.subgraph.edges.size(), 6u);
  EXPECT_EQ(core.uncovered.size(), 3u);
  EXPECT_EQ(core.doubly.size(), 3u);
  EXPECT_TRUE(core.triply.empty());
  const auto r = check_no_triply(p, a);
  EXPECT_TRUE(r.no_triply && r.phi_proper && r.chi_nowhere_zero);
  const auto rep = check_core_structure(p, a);
  ASSERT_EQ(rep.components.size(), 1u);
  EXPECT_EQ(rep.components[0].shape, CoreComponentInfo::Shape::EvenCircuit);
  EXPECT_EQ(rep.components[0].edges, 6);
}

TEST(Arrays, DisjointArrayHasEmptyCore) {
  const auto k = k4();
  const auto pms = enumerate_perfect_matchings(k, 10);
  const ThreeArray a{{pms[0], pms[1], pms[2]}};
  const auto core = core_of(k, a);
  EXPECT_TRUE(core.subgraph.edges.empty());
  const auto phi = phi_of(k, a);
  for (EdgeId e = 0; e < k.size(); ++e) EXPECT_EQ(phi.weight(e), 1);
  EXPECT_TRUE(check_core_structure(k, a).components.empty());
}

TEST(Arrays, RepeatedMatching) {
  const auto p = petersen();
  const auto pm = *has_perfect_matching(p);
  const ThreeArray a{{pm, pm, pm}};
  const auto phi = phi_of(p, a);
  for (EdgeId e = 0; e < p.size(); ++e) EXPECT_TRUE(phi.weight(e) == 0 || phi.weight(e) == 3);
  EXPECT_EQ(core_of(p, a).subgraph.edges.size(), 15u);
  const auto r = check_no_triply(p, a);
  EXPECT_FALSE(r.no_triply || r.phi_proper || r.chi_nowhere_zero);
}

TEST(Arrays, PhiChiDualityAndKirchhoff) {
  for (const auto& [name, g] : named_corpus()) {
    const auto pms = enumerate_perfect_matchings(g, 100000);
    for (std::size_t i = 0; i < std::min<std::size_t>(pms.size(), 6); ++i) {
      for (std::size_t j = 0; j < std::min<std::size_t>(pms.size(), 6); ++j) {
        const ThreeArray a{{pms[i], pms[j], pms[(i + j) % pms.size()]}};
        const auto phi = phi_of(g, a);
        const auto chi = chi_of(g, a);
        EXPECT_EQ(phi_from_chi(chi).mask, phi.mask);
        EXPECT_EQ(chi_from_phi(phi).value, chi.value);
        EXPECT_TRUE(satisfies_kirchhoff(g, chi)) << name;
        const auto r = check_no_triply(g, a);
        EXPECT_TRUE(r.equivalent());
      }
    }
  }
}

TEST(Defect, Examples) {
  EXPECT_EQ(defect(k33()).value, 0);
  const auto p = defect(petersen());
  EXPECT_EQ(p.value, 3);
  EXPECT_EQ(p.uncovered.size(), 3u);
  EXPECT_EQ(uncovered_count(petersen(), p.witness), 3);
  EXPECT_EQ(defect(flower_snark(5)).value, oracle::defect(flower_snark(5)));
  EXPECT_THROW(defect(petersen(), 3), CapExceeded);
}

TEST(Defect, ZeroIffColourableAndSnarksHaveAtLeastThree) {
  for (const auto& [name, g] : full_corpus()) {
    const auto d = defect(g);
    const bool colourable = find_3_edge_colouring(g).has_value();
    EXPECT_EQ(d.value == 0, colourable) << name;
    if (!colourable) {
      EXPECT_GE(d.value, 3) << name;
    }
    EXPECT_EQ(static_cast<int>(d.uncovered.size()), d.value);
    const auto rep = check_core_structure(g, d);
    for (const auto& c : rep.components) {
      if (c.shape == CoreComponentInfo::Shape::EvenCircuit) {
        EXPECT_EQ(c.uncovered * 2, c.edges) << name;
      }
    }
  }
}

TEST(Defect, MatchesOracleOnSmallGraphs) {
  for (const auto& [name, g] : full_corpus()) {
    if (g.order() > 16) continue;
    EXPECT_EQ(defect(g).value, oracle::defect(g)) << name;
  }
}

TEST(CoreStructure, RejectsNonOptimalArrays) {
  // (M1, M1, M2) on K4 leaves a 4-circuit as core
  const auto g = k4();
  const auto pms = enumerate_perfect_matchings(g, 10);
  EXPECT_THROW(check_core_structure(g, ThreeArray{{pms[0], pms[0], pms[1]}}), NotOptimalEvidence);
}

TEST(HexCore, Petersen) {
  const auto p = petersen();
  const auto c = hexagonal_core_certificate(p);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(hex_certificate_violation(p, *c), "");
  EXPECT_TRUE(hexagonal_boundary_colouring_exists(p, *c));
  EXPECT_EQ(canonical_type(colour_vector_of(c->colouring, c->cut_edges)).cls, TypeClass::P);
  const auto rep = check_lemma_3_5(p, *c);
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.triangles + rep.quadrilaterals, 0);
  EXPECT_FALSE(hexagonal_core_certificate(k33()).has_value());
}

TEST(HexCore, ChosenHexagon) {
  const auto p = petersen();
  const auto c = hex_certificate_from(p, petersen_hexagon_array());
  std::vector<Vertex> v(c.core_vertices.begin(), c.core_vertices.end());
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<Vertex>{0, 1, 2, 3, 5, 8}));
  EXPECT_EQ(hex_certificate_violation(p, c), "");
}

TEST(HexCore, ValidatorCatchesTampering) {
  const auto p = petersen();
  auto c = *hexagonal_core_certificate(p);
  auto bad = c;
  std::swap(bad.core_edges[0], bad.core_edges[1]);
  EXPECT_NE(hex_certificate_violation(p, bad), "");
  bad = c;
  bad.colouring.colour[bad.cut_edges[0]] = bad.colouring.colour[bad.cut_edges[2]];
  EXPECT_NE(hex_certificate_violation(p, bad), "");
  bad = c;
  bad.outer_ends[0] = bad.core_vertices[2];
  EXPECT_NE(hex_certificate_violation(p, bad), "");
}

TEST(HexCore, Section7CoreStaysInPetersenPart) {
  const auto s = section7(k33(), 0);
  const auto c = hexagonal_core_certificate(s.graph);
  ASSERT_TRUE(c.has_value());
  for (Vertex v : c->core_vertices) EXPECT_LT(v, s.petersen_order);
  const auto rep = check_lemma_3_5(s.graph, *c);
  EXPECT_TRUE(rep.holds);
  EXPECT_GT(rep.quadrilaterals, 0);
}

TEST(HexCore, EveryDefectThreeCorpusGraph) {
  for (const auto& [name, g] : named_corpus()) {
    const auto d = defect(g);
    if (d.value != 3) continue;
    const auto c = hexagonal_core_certificate(g, d);
    ASSERT_TRUE(c.has_value()) << name;
    EXPECT_EQ(hex_certificate_violation(g, *c), "") << name;
    EXPECT_TRUE(hexagonal_boundary_colouring_exists(g, *c)) << name;
    EXPECT_TRUE(check_lemma_3_5(g, *c).holds) << name;
  }
}

TEST(AdmissibleTypes, PetersenAndCoreSide) {
  const auto p = petersen();
  const auto c = *hexagonal_core_certificate(p);
  const auto types = admissible_types(p, c);
  std::set<std::string> got, want, core_side, want_c;
  for (const auto& t : types) got.insert(t.canonical);
  for (const auto& t : enumerate_types()) {
    if (t.cls == TypeClass::P) want.insert(t.canonical);
    if (t.cls == TypeClass::C) want_c.insert(t.canonical);
  }
  EXPECT_EQ(got, want);
  for (const auto& t : admissible_types_core_side()) {
    if (t.cls != TypeClass::MissingColour) core_side.insert(t.canonical);
  }
  EXPECT_EQ(core_side, want_c);
}

TEST(AdmissibleTypes, SnarksAvoidCoreSideTypes) {
  for (const auto& [name, g] : named_corpus()) {
    const auto d = defect(g);
    if (d.value != 3) continue;
    const auto c = *hexagonal_core_certificate(g, d);
    // a colour missing on the cut would give a 4-cover
    const bool no_four_cover = pmi(g).value > 4;
    const bool strong = no_four_cover && cyclic_edge_connectivity(g).value >= 4;
    for (const auto& t : admissible_types(g, c)) {
      EXPECT_NE(t.cls, TypeClass::C) << name << " " << t.canonical;
      if (no_four_cover) {
        EXPECT_NE(t.cls, TypeClass::MissingColour) << name << " " << t.canonical;
      }
      if (strong) {
        EXPECT_EQ(t.cls, TypeClass::P) << name << " " << t.canonical;
      }
    }
  }
}

TEST(HexCore, NotEveryOutsideColouringIsHexagonal) {
  // Around the Petersen hexagon each claw leaf meets two opposite hexagon
  // vertices; swapping the two colours at one leaf breaks the 1,1,2,2,3,3
  // pattern, so only existence of such a colouring can be asserted.
  const auto p = petersen();
  const auto c = *hexagonal_core_certificate(p);
  int hexagonal = 0, other = 0;
  for (const auto& v : realisable_vectors(outside_core(p, c), c.cut_edges)) {
    const auto t = canonical_type(v).canonical;
    bool pattern = false;
    for (int r = 0; r < 2; ++r) {
      pattern = pattern || (v[r] == v[r + 1] && v[r + 2] == v[(r + 3) % 6] && v[(r + 4) % 6] == v[(r + 5) % 6]);
    }
    (pattern ? hexagonal : other)++;
    EXPECT_EQ(pattern, t == "112233" || t == "122331") << v.str();
  }
  EXPECT_GT(hexagonal, 0);
  EXPECT_GT(other, 0);
}

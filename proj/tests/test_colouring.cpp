#include <gtest/gtest.h>

#include <random>

#include "cubicpm/cubicpm.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace cubicpm;

TEST(Colouring, Examples) {
  const auto k = k33();
  const auto c = find_3_edge_colouring(k);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_proper(k, *c));
  EXPECT_FALSE(find_3_edge_colouring(petersen()).has_value());
  EXPECT_FALSE(find_3_edge_colouring(flower_snark(5)).has_value());
}

TEST(Colouring, MatchesOracle) {
  for (const auto& [name, g] : full_corpus()) {
    if (g.size() > 30) continue;
    EXPECT_EQ(find_3_edge_colouring(g).has_value(), oracle::colourable(g)) << name;
  }
}

TEST(Colouring, ConstraintsAndConflicts) {
  const auto k = k4();
  std::map<EdgeId, Colour> fixed{{0, 1}, {5, 2}};
  // edges 0 = 01 and 5 = 23 are opposite, so they must share a colour
  EXPECT_FALSE(find_3_edge_colouring(whole(k), fixed).has_value());
  fixed[5] = 1;
  const auto c = find_3_edge_colouring(whole(k), fixed);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->colour[5], 1);
  EXPECT_THROW(find_3_edge_colouring(whole(k), {{0, 1}, {1, 1}}), ConstraintConflict);
}

TEST(Colouring, PetersenOutsideHexagonWithBoundaryPattern) {
  const auto p = petersen();
  const auto cert = hexagonal_core_certificate(p);
  ASSERT_TRUE(cert.has_value());
  const auto outside = outside_core(p, *cert);
  bool found = false;
  for (int r = 0; r < 2; ++r) {
    std::map<EdgeId, Colour> fixed;
    const Colour pattern[6] = {1, 1, 2, 2, 3, 3};
    for (int i = 0; i < 6; ++i) fixed[cert->cut_edges[(i + r) % 6]] = pattern[i];
    if (auto c = find_3_edge_colouring(outside, fixed)) {
      EXPECT_TRUE(is_proper_colouring_of(outside, *c));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Parity, Examples) {
  const auto k = k33();
  const auto c = *find_3_edge_colouring(k);
  EXPECT_TRUE(parity_check(c, edge_cut(k, {0})));
  EdgeColouring3 fake;
  fake.colour = {1, 1, 2, 2, 3, 3, 1, 2, 3};
  EXPECT_TRUE(parity_check(fake, std::vector<EdgeId>{0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(parity_check(fake, std::vector<EdgeId>{0, 1, 2, 3, 4, 6}));
  fake.colour[0] = 0;
  EXPECT_THROW(parity_check(fake, std::vector<EdgeId>{0, 1}), UncolouredEdgeInCut);
}

TEST(Kempe, K4ChainIsFourCycle) {
  const auto k = k4();
  const auto c = *find_3_edge_colouring(k);
  for (EdgeId e = 0; e < k.size(); ++e) {
    if (c.colour[e] != 1) continue;
    const auto ch = kempe_chain(k, c, e, 1, 2);
    EXPECT_EQ(ch.kind, KempeChain::Kind::Circuit);
    EXPECT_EQ(ch.edges.size(), 4u);
  }
  EXPECT_THROW(kempe_chain(k, c, 0, c.colour[0] == 1 ? 2 : 1, 3), StartColourMismatch);
}

TEST(Kempe, SingleEdgePath) {
  Graph g(2);
  g.add_edge(0, 1);
  EdgeColouring3 c;
  c.colour = {2};
  const auto ch = kempe_chain(g, c, 0, 1, 2);
  EXPECT_EQ(ch.kind, KempeChain::Kind::Path);
  EXPECT_EQ(ch.edges, std::vector<EdgeId>{0});
}

TEST(Kempe, SwitchIsAnInvolutionAndStaysProper) {
  std::mt19937_64 rng(3);
  for (const auto& [name, g] : full_corpus()) {
    const auto c = find_3_edge_colouring(g);
    if (!c) continue;
    for (int t = 0; t < 10; ++t) {
      const EdgeId e = static_cast<EdgeId>(rng() % g.size());
      const Colour other = static_cast<Colour>(1 + (c->colour[e] + rng() % 2) % 3);
      const auto ch = kempe_chain(g, *c, e, c->colour[e], other);
      const auto s = kempe_switch(g, *c, ch);
      EXPECT_TRUE(is_proper(g, s)) << name;
      for (EdgeId x = 0; x < g.size(); ++x) {
        const bool on = std::find(ch.edges.begin(), ch.edges.end(), x) != ch.edges.end();
        EXPECT_EQ(s.colour[x] != c->colour[x], on) << name;
      }
      EXPECT_EQ(kempe_switch(g, s, kempe_chain(g, s, e, c->colour[e], other)).colour, c->colour) << name;
    }
  }
}

TEST(Kempe, StaleChain) {
  const auto k = k4();
  const auto c = *find_3_edge_colouring(k);
  auto ch = kempe_chain(k, c, 0, c.colour[0], c.colour[0] == 1 ? 2 : 1);
  ch.edges.pop_back();
  EXPECT_THROW(kempe_switch(k, c, ch), StaleChain);
}

// Terminals t0..t5 carry the pendant edges f0..f5; x joins f0, f3 and y;
// y joins f2, f5 and x; f1 and f4 hang between their terminal and a free end.
TEST(Kempe, SwitchTurnsVector121323Into321123) {
  Graph g(16);
  const Vertex x = 6, y = 7;
  std::array<EdgeId, 6> f{};
  f[0] = g.add_edge(0, x);
  f[1] = g.add_edge(1, 8);
  f[2] = g.add_edge(2, y);
  f[3] = g.add_edge(3, x);
  f[4] = g.add_edge(4, 9);
  f[5] = g.add_edge(5, y);
  const EdgeId xy = g.add_edge(x, y);
  EdgeColouring3 c;
  c.colour.assign(static_cast<std::size_t>(g.size()), 0);
  const std::string start = "121323";
  for (int i = 0; i < 6; ++i) c.colour[f[i]] = static_cast<Colour>(start[i] - '0');
  c.colour[xy] = 2;
  ASSERT_TRUE(is_proper(g, c));
  EXPECT_EQ(colour_vector_of(c, f).str(), "121323");
  const auto ch = kempe_chain(g, c, f[0], 1, 3);
  EXPECT_EQ(ch.kind, KempeChain::Kind::Path);
  EXPECT_EQ(ch.edges.size(), 2u);
  EXPECT_TRUE(std::find(ch.edges.begin(), ch.edges.end(), f[3]) != ch.edges.end());
  EXPECT_EQ(colour_vector_of(kempe_switch(g, c, ch), f).str(), "321123");
}

TEST(Kempe, ChainFromBoundaryOfPetersenHexagonEndsOnBoundary) {
  const auto p = petersen();
  const auto cert = *hexagonal_core_certificate(p);
  const auto& col = cert.colouring;
  const EdgeId f1 = cert.cut_edges[1];
  const Colour a = col.colour[f1];
  for (Colour b = 1; b <= 3; ++b) {
    if (b == a) continue;
    const auto ch = kempe_chain(p, col, f1, a, b);
    ASSERT_EQ(ch.kind, KempeChain::Kind::Path);
    const EdgeId first = ch.edges.front(), last = ch.edges.back();
    const EdgeId end = first == f1 ? last : first;
    EXPECT_NE(end, f1);
    EXPECT_TRUE(std::find(cert.cut_edges.begin(), cert.cut_edges.end(), end) != cert.cut_edges.end());
    EXPECT_TRUE(col.colour[end] == a || col.colour[end] == b);
  }
}

TEST(ColourVectors, ParityAndTypes) {
  EXPECT_NO_THROW(ColourVector::from_string("111111"));
  EXPECT_NO_THROW(ColourVector::from_string("112233"));
  EXPECT_THROW(ColourVector::from_string("112223"), ParityViolation);
  EXPECT_THROW(ColourVector::from_string("123"), ParityViolation);
  EXPECT_EQ(canonical_type(ColourVector::from_string("112233")).canonical, "112233");
  EXPECT_EQ(canonical_type(ColourVector::from_string("112233")).cls, TypeClass::P);
  EXPECT_EQ(canonical_type(ColourVector::from_string("332211")).canonical, "112233");
  const auto t = canonical_type(ColourVector::from_string("231321"));
  EXPECT_EQ(t.canonical, "123213");
  EXPECT_EQ(t.cls, TypeClass::B);
  EXPECT_EQ(canonical_type(ColourVector::from_string("111111")).cls, TypeClass::MissingColour);
}

TEST(ColourVectors, CanonicalTypeIsPermutationInvariant) {
  for (const auto& v : all_colour_vectors()) {
    const auto t = canonical_type(v);
    for (const auto& perm : kColourPermutations) EXPECT_EQ(canonical_type(permute(v, perm)).canonical, t.canonical);
  }
}

TEST(ColourVectors, TableOfFifteenTypes) {
  const auto types = enumerate_types();
  ASSERT_EQ(types.size(), 15u);
  EXPECT_EQ(types[0].canonical, "112233");
  EXPECT_EQ(types[0].cls, TypeClass::P);
  EXPECT_EQ(types[4].canonical, "121323");
  EXPECT_EQ(types[4].cls, TypeClass::B);
  int counts[3] = {0, 0, 0};
  for (const auto& t : types) ++counts[static_cast<int>(t.cls)];
  EXPECT_EQ(counts[0], 3);
  EXPECT_EQ(counts[1], 4);
  EXPECT_EQ(counts[2], 8);
}

TEST(ColourVectors, RealisableOnColourableCut) {
  const auto q3 = cube_q3();
  const auto side = std::vector<Vertex>{2, 5};
  const auto cut = boundary(q3, side);
  ASSERT_EQ(cut.size(), 6u);
  std::array<EdgeId, 6> ordered{};
  std::copy(cut.begin(), cut.end(), ordered.begin());
  // keep the cut edges as pendant edges of the hexagon side
  Subgraph plus = whole(q3);
  plus.edges.clear();
  for (EdgeId e = 0; e < q3.size(); ++e) {
    if (!(std::binary_search(side.begin(), side.end(), q3.edge(e).u) && std::binary_search(side.begin(), side.end(), q3.edge(e).v))) {
      plus.edges.push_back(e);
    }
  }
  EXPECT_FALSE(realisable_vectors(plus, ordered).empty());
}

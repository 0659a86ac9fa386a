#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wogsym/errors.hpp"
#include "wogsym/fixtures.hpp"
#include "wogsym/symbolic.hpp"
#include "wogsym/text.hpp"
#include "wogsym/wog.hpp"

using namespace wogsym;
namespace fx = wogsym::fixtures;

TEST(Graph, ParseAndFormat) {
  auto d = parse_graph("# c\nvertices 3\nweights 1 2 1\nedge 1 2\n\nedge 2 3\n");
  EXPECT_EQ(d, fx::path_heavy_middle());
  EXPECT_EQ(parse_graph(format_graph(d)), d);
  EXPECT_EQ(parse_graph("vertices 2\nedge 1 2\n").weights(), (std::vector<Exponent>{1, 1}));
}

TEST(Graph, RejectsBadInput) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("vertices 2\nedge 1 1\n"), 2u);
  EXPECT_EQ(line_of("vertices 2\nedge 1 2\nedge 2 1\n"), 3u);
  EXPECT_EQ(line_of("vertices 2\nweights 1\n"), 2u);
  EXPECT_EQ(line_of("vertices 2\nedge 1 3\n"), 2u);
  EXPECT_EQ(line_of("edge 1 2\n"), 1u);
  EXPECT_EQ(line_of("vertices 2\nweights 1 0\n"), 2u);
  EXPECT_THROW(WeightedOrientedGraph(2, {1, 1}, {{1, 2}, {1, 2}}), ValidationError);
}

TEST(Graph, Normalize) {
  WeightedOrientedGraph d(2, {5, 2}, {{1, 2}});
  EXPECT_FALSE(d.is_normalized());
  EXPECT_EQ(normalize(d).weights(), (std::vector<Exponent>{1, 2}));
  EXPECT_EQ(normalize(fx::heavy_directed_triangle()), fx::heavy_directed_triangle());
  EXPECT_EQ(normalize(fx::path_heavy_middle()), fx::path_heavy_middle());
  EXPECT_THROW(vertex_roles(d), DomainError);
}

TEST(Graph, EdgeIdealAndDual) {
  EXPECT_EQ(edge_ideal(fx::four_cycle_heavy_sinks()), parse_ideal("t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2"));
  EXPECT_EQ(edge_ideal(fx::heavy_directed_triangle()), parse_ideal("t1*t2^2, t2*t3^2, t3*t1^2"));
  EXPECT_EQ(edge_ideal(WeightedOrientedGraph(2, {1, 1}, {{1, 2}})), parse_ideal("t1*t2"));
  EXPECT_EQ(alexander_dual(fx::four_cycle_heavy_sinks()).ideal, parse_ideal("t1*t3, t2^2*t4^2"));
  EXPECT_EQ(alexander_dual(WeightedOrientedGraph(2, {1, 3}, {{1, 2}})).ideal, parse_ideal("t1, t2^3"));
  auto dual = alexander_dual(fx::triangle_heavy_middle());
  const std::vector<MonomialIdeal> parts{parse_ideal("t1, t2^2", 3), parse_ideal("t2, t3", 3),
                                         parse_ideal("t1, t3", 3)};
  EXPECT_EQ(dual.ideal, intersect(parts));
  EXPECT_EQ(dual.components.components.size(), 3u);
  EXPECT_THROW(alexander_dual(WeightedOrientedGraph(2, {1, 1}, {})), DomainError);
}

TEST(Graph, Roles) {
  auto r = vertex_roles(fx::four_cycle_heavy_sinks());
  EXPECT_EQ(r.vPlus, (VertexSet{2, 4}));
  EXPECT_TRUE(r.allVPlusSinks);
  r = vertex_roles(fx::triangle_heavy_middle());
  EXPECT_EQ(r.vPlus, (VertexSet{2}));
  EXPECT_FALSE(r.allVPlusSinks);
  r = vertex_roles(WeightedOrientedGraph(3, {1, 1, 1}, {}));
  EXPECT_EQ(r.sinks, (VertexSet{1, 2, 3}));
  EXPECT_EQ(r.sources, (VertexSet{1, 2, 3}));
  EXPECT_TRUE(r.vPlus.empty());
  // An isolated vertex is a source, so a heavy one is not normalized.
  EXPECT_FALSE(WeightedOrientedGraph(3, {1, 2, 1}, {}).is_normalized());
}

TEST(Graph, UnderlyingProps) {
  auto p = underlying_props(fx::four_cycle_heavy_sinks());
  EXPECT_TRUE(p.isBipartite);
  EXPECT_FALSE(p.hasTriangle);
  EXPECT_FALSE(p.oddGirth);
  for (const auto& d : {fx::heavy_directed_triangle(), fx::triangle_heavy_middle(), fx::triangle_heavy_sink()}) {
    EXPECT_TRUE(underlying_props(d).hasTriangle);
    EXPECT_EQ(underlying_props(d).oddGirth, 3u);
  }
  EXPECT_TRUE(underlying_props(fx::path_heavy_middle()).isBipartite);
  auto c5 = underlying_props(fx::directed_cycle(5));
  EXPECT_FALSE(c5.isBipartite || c5.hasTriangle);
  EXPECT_EQ(c5.oddGirth, 5u);
  EXPECT_EQ(underlying_props(fx::directed_cycle(7)).oddGirth, 7u);
}

TEST(Covers, Partition) {
  auto p = cover_partition(fx::triangle_heavy_middle(), {2, 3});
  EXPECT_TRUE(p.l1.empty());
  EXPECT_EQ(p.l2, (VertexSet{2, 3}));
  EXPECT_TRUE(p.l3.empty());
  p = cover_partition(fx::triangle_heavy_middle(), {1, 2, 3});
  EXPECT_TRUE(p.l1.empty() && p.l2.empty());
  EXPECT_EQ(p.l3, (VertexSet{1, 2, 3}));
  p = cover_partition(WeightedOrientedGraph(2, {1, 1}, {{1, 2}}), {2});
  EXPECT_TRUE(p.l1.empty() && p.l3.empty());
  EXPECT_EQ(p.l2, (VertexSet{2}));
  EXPECT_THROW(cover_partition(fx::triangle_heavy_middle(), {1}), DomainError);
}

TEST(Covers, Strong) {
  EXPECT_TRUE(is_strong_cover(fx::heavy_directed_triangle(), {1, 2, 3}));
  EXPECT_FALSE(is_strong_cover(fx::triangle_heavy_middle(), {1, 2, 3}));
  EXPECT_TRUE(is_strong_cover(fx::four_cycle_heavy_sinks(), {2, 4}));
  EXPECT_EQ(cover_ideal(fx::triangle_heavy_middle(), {2, 3}).to_ideal(), parse_ideal("t2^2, t3", 3));
  EXPECT_EQ(cover_ideal(fx::four_cycle_heavy_sinks(), {2, 4}).to_ideal(), parse_ideal("t2^2, t4^2", 4));
  EXPECT_EQ(cover_ideal(fx::heavy_directed_triangle(), {1, 2, 3}).to_ideal(), parse_ideal("t1^2, t2^2, t3^2"));
  EXPECT_THROW(cover_ideal(fx::triangle_heavy_middle(), {1, 2, 3}), DomainError);
}

TEST(Covers, MatchDefinitionOracle) {
  oracle::Random rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    auto d = rng.graph(7, 3);
    auto want = oracle::strong_covers(d);
    auto got = strong_covers(d, kDefaultCoverVertexLimit, Exec::Serial);
    std::sort(want.begin(), want.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, want) << format_graph(d);
    EXPECT_EQ(strong_covers(d, kDefaultCoverVertexLimit, Exec::Parallel), got) << format_graph(d);
    for (const auto& c : want) EXPECT_TRUE(is_strong_cover(d, c));
  }
}

TEST(Covers, ResourceLimit) {
  EXPECT_THROW(strong_covers(fx::directed_cycle(7), 6), ResourceError);
  EXPECT_NO_THROW(strong_covers(fx::directed_cycle(7), 7));
}

TEST(Covers, DecompositionMatchesGeneric) {
  oracle::Random rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    auto d = rng.graph(6, 3);
    EXPECT_EQ(decomposition_via_covers(d), irreducible_decomposition(edge_ideal(d))) << format_graph(d);
  }
}

TEST(Classification, Irrelevant) {
  auto r = irrelevant_in_ass(fx::heavy_directed_triangle());
  EXPECT_TRUE(r.value && r.maximalIsAssociated && r.fullSetIsStrong && r.outNeighborhoodCovers);
  EXPECT_FALSE(irrelevant_in_ass(fx::four_cycle_heavy_sinks()).value);
  EXPECT_FALSE(irrelevant_in_ass(fx::directed_cycle(4)).value);
  oracle::Random rng(43);
  for (int trial = 0; trial < 100; ++trial) EXPECT_NO_THROW(irrelevant_in_ass(rng.graph(6, 3)));
}

TEST(Classification, Known) {
  auto c = classify(fx::four_cycle_heavy_sinks());
  EXPECT_TRUE(c.square && c.allPowers);
  ASSERT_TRUE(c.ntf);
  EXPECT_TRUE(*c.ntf);
  EXPECT_FALSE(classify(fx::triangle_heavy_sink()).square);
  auto c5 = classify(fx::directed_cycle(5));
  EXPECT_TRUE(c5.square);
  EXPECT_FALSE(c5.allPowers);
  auto i5 = edge_ideal(fx::directed_cycle(5));
  EXPECT_TRUE(compare_powers(i5, 2).equalMin);
  EXPECT_FALSE(compare_powers(i5, 3).equalMin);
}

TEST(Classification, NonSinkWitness) {
  EXPECT_EQ(non_sink_witness(fx::triangle_heavy_middle()), (ExponentVector{1, 2, 1}));
  EXPECT_EQ(non_sink_witness(fx::path_heavy_middle()), (ExponentVector{1, 2, 1}));
  EXPECT_FALSE(non_sink_witness(fx::four_cycle_heavy_sinks()));
  oracle::Random rng(44);
  for (int trial = 0; trial < 80; ++trial) {
    auto d = rng.graph(5, 3);
    auto w = non_sink_witness(d);
    if (!w) continue;
    auto r = compare_powers(edge_ideal(d), 2);
    EXPECT_TRUE(contains_monomial(r.minPower, *w) && !contains_monomial(r.ordinary, *w)) << format_graph(d);
  }
}

TEST(Masks, RoundTrip) {
  EXPECT_EQ(to_mask({1, 3}), 5u);
  EXPECT_EQ(from_mask(5, 4), (VertexSet{1, 3}));
}

#include <gtest/gtest.h>

#include <random>

#include "curtains/chart.hpp"
#include "curtains/error.hpp"
#include "support/chart_fixtures.hpp"
#include "support/generators.hpp"

namespace curtains {
namespace {

using testing::R;

BraidWord w(const std::string& text, int degree) {
  return parse_braid_word(text, degree);
}

TEST(Chart, EmptyChartIsValid) {
  EXPECT_TRUE(validate_chart(empty_chart(3)).ok());
  EXPECT_EQ(empty_chart(3).basepoint(), Point(Rational(0), Rational(1)));
}

TEST(Chart, SevenParallelEdgesReadSigmaOne) {
  const Chart chart = testing::parallel_edges_chart(4, {1, 2, 1, 2, 2, 1, 2}, {-1, -1, -1, 1, 1, 1, 1});
  ASSERT_TRUE(validate_chart(chart).ok()) << validate_chart(chart).to_string();
  PLPath path;
  path.points = {Point(R(-9, 10), R(1, 2)), Point(R(9, 10), R(1, 2))};
  const BraidWord word = intersection_word(chart, path);
  EXPECT_EQ(word, w("s1^-1 s2^-1 s1^-1 s2 s2 s1 s2", 4));
  EXPECT_TRUE(words_equal(word, w("s1", 4)));
  EXPECT_EQ(intersection_word(chart, reversed(path)), invert(word));
}

TEST(Chart, WhiteVertexWithThreeInwardEndsIsValid) {
  const Chart chart = testing::white_vertex_chart({true, true, true, false, false, false});
  const ValidationReport report = validate_chart(chart);
  EXPECT_TRUE(report.ok()) << report.to_string();
  EXPECT_TRUE(words_equal(vertex_reading(chart, *chart.find_vertex("w")), BraidWord(3)));
}

TEST(Chart, WhiteVertexWithWrongOrientationIsRejected) {
  const Chart chart = testing::white_vertex_chart({true, true, false, false, false, true});
  EXPECT_TRUE(validate_chart(chart).ok());
  const Chart bad = testing::white_vertex_chart({true, false, true, false, false, false});
  const ValidationReport report = validate_chart(bad);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.to_string().find("exactly three consecutive inward"), std::string::npos) << report.to_string();
}

TEST(Chart, CrossingNeedsDistantLabels) {
  EXPECT_TRUE(validate_chart(testing::crossing_chart(1, 3)).ok());
  const ValidationReport report = validate_chart(testing::crossing_chart(1, 2));
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.to_string().find("crossing labels must differ by at least 2"), std::string::npos);
}

TEST(Chart, RejectsEdgesMeetingAwayFromVertices) {
  Chart chart = testing::parallel_edges_chart(3, {1}, {1});
  chart.edges.push_back(testing::closed_square("c", Point(R(0), R(1, 2)), R(1, 4), 2, false));
  const ValidationReport report = validate_chart(chart);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.to_string().find("away from a vertex"), std::string::npos) << report.to_string();
}

TEST(Chart, LabelOutOfRangeIsRejected) {
  const Chart chart = testing::parallel_edges_chart(2, {2}, {1});
  EXPECT_FALSE(validate_chart(chart).ok());
}

TEST(Chart, PathThroughBlackVertexIsRejected) {
  const Chart nest = build_oval_nest({Point(R(0), R(1, 2)), R(1, 2), R(1, 4)}, {BraidWord(3), 1, 1});
  PLPath path;
  path.points = {Point(R(-1, 2), R(1)), Point(R(-1, 2), R(0))};
  EXPECT_THROW(intersection_word(nest, path), ChartError);
}

TEST(OvalNest, MeridianIsTheBandGenerator) {
  const BandGeneratorForm form{w("s2^-1", 3), 1, 1};
  const NestPlacement placement{Point(R(0), R(1, 2)), R(1, 2), R(1, 4)};
  const Chart nest = build_oval_nest(placement, form);
  ASSERT_TRUE(validate_chart(nest).ok());
  EXPECT_EQ(nest.count(VertexKind::black), 2u);
  EXPECT_EQ(nest.edges.size(), 2u);
  const BraidWord word = loop_monodromy(nest, testing::loop_around_left_end(placement, 1));
  EXPECT_TRUE(words_equal(word, w("s2^-1 s1 s2", 3)));
}

TEST(OvalNestProperty, MeridianMatchesIndependentLoop) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const BandGeneratorForm form = testing::random_band_form(rng, d, 6);
    const NestPlacement placement{Point(R(0), R(1, 2)), R(1, 2), R(1, 4)};
    const Chart nest = build_oval_nest(placement, form);
    ASSERT_TRUE(validate_chart(nest).ok());
    const BraidWord expected = band_word(form);
    const auto m = static_cast<int>(form.conjugator.size());
    ASSERT_TRUE(words_equal(loop_monodromy(nest, testing::loop_around_left_end(placement, m)), expected));
    const MeridianSystem system = hurwitz_meridians(nest.black_vertices(), nest.rect, {&nest});
    ASSERT_EQ(system.x.size(), 1u);
    ASSERT_TRUE(words_equal(loop_monodromy(nest, system.x[0]), expected));
  }
}

TEST(Ribbon, MeridianWordsOfTwoNests) {
  const std::vector<BandGeneratorForm> forms{{BraidWord(3), 2, 1}, {w("s2^-1", 3), 1, 1}};
  const Chart ribbon = build_ribbon_chart(forms, 3);
  ASSERT_TRUE(validate_chart(ribbon).ok());
  const MeridianSystem system = hurwitz_meridians(ribbon.black_vertices(), ribbon.rect, {&ribbon});
  const auto loops = system.ordered();
  ASSERT_EQ(loops.size(), 4u);
  EXPECT_TRUE(words_equal(loop_monodromy(ribbon, loops[0]), w("s2", 3)));
  EXPECT_TRUE(words_equal(loop_monodromy(ribbon, loops[1]), w("s2^-1 s1 s2", 3)));
  EXPECT_TRUE(words_equal(loop_monodromy(ribbon, loops[2]), w("s2^-1 s1^-1 s2", 3)));
  EXPECT_TRUE(words_equal(loop_monodromy(ribbon, loops[3]), w("s2^-1", 3)));
}

TEST(Ribbon, OverlappingPlacementsAreRejected) {
  const std::vector<NestPlacement> placements{{Point(R(0), R(1, 2)), R(1, 2), R(1, 4)},
                                              {Point(R(0), R(5, 8)), R(1, 2), R(1, 4)}};
  EXPECT_THROW(build_ribbon_chart(placements, {{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}}, 3), ChartError);
}

TEST(DiskReplacement, InsertsAndRemovesALoop) {
  const Chart ribbon = build_ribbon_chart({{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}}, 3);
  const auto disk = testing::square(Point(R(4, 5), R(1, 2)), R(1, 10));
  const Chart with_loop = apply_disk_replacement(ribbon, disk, testing::loop_chart(ribbon, disk, 2, false));
  ASSERT_TRUE(validate_chart(with_loop).ok());
  EXPECT_EQ(with_loop.edges.size(), ribbon.edges.size() + 1);
  const Chart back = apply_disk_replacement(with_loop, disk, empty_chart(3, ribbon.rect));
  EXPECT_TRUE(geometrically_equal(back, ribbon));
}

TEST(DiskReplacement, ReroutesAnEdgeThroughTheDisk) {
  const Chart nest = build_oval_nest({Point(R(0), R(1, 2)), R(1, 2), R(1, 4)}, {BraidWord(3), 1, 1});
  const auto disk = testing::square(Point(R(0), R(1, 2)), R(1, 8));
  Chart bump = empty_chart(3, nest.rect);
  bump.vertices = {{"a", VertexKind::boundary, Point(R(-1, 8), R(1, 2))},
                   {"b", VertexKind::boundary, Point(R(1, 8), R(1, 2))}};
  ChartEdge e;
  e.id = "bump";
  e.label = 1;
  e.reversed = nest.edges.front().reversed;
  e.polyline = {Point(R(-1, 8), R(1, 2)), Point(R(0), R(9, 16)), Point(R(1, 8), R(1, 2))};
  e.ends = std::array<std::string, 2>{"a", "b"};
  bump.edges.push_back(e);
  const Chart out = apply_disk_replacement(nest, disk, bump);
  ASSERT_TRUE(validate_chart(out).ok());
  std::mt19937 rng(5);
  for (int k = 0; k < 20; ++k) {
    const PLPath loop = testing::random_loop(rng, 3);
    EXPECT_TRUE(words_equal(loop_monodromy(nest, loop), loop_monodromy(out, loop)));
  }
}

TEST(DiskReplacement, BlackVertexInsideDiskIsRejected) {
  const Chart nest = build_oval_nest({Point(R(0), R(1, 2)), R(1, 2), R(1, 4)}, {BraidWord(3), 1, 1});
  const auto disk = testing::square(Point(R(-1, 2), R(1, 2)), R(1, 8));
  EXPECT_THROW(apply_disk_replacement(nest, disk, empty_chart(3, nest.rect)), ChartError);
}

TEST(DiskReplacementProperty, ExternalLoopsUnchanged) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const auto data = testing::random_replacement(rng);
    for (int k = 0; k < 20; ++k) {
      const PLPath loop = testing::random_loop(rng, 3);
      ASSERT_TRUE(words_equal(loop_monodromy(data.before, loop), loop_monodromy(data.after, loop)));
    }
  }
}

TEST(Isotopy, KeyframesMustStayEmbedded) {
  const Chart ribbon = build_ribbon_chart({{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}}, 3);
  ChartCoordinates start = coordinates_of(ribbon);
  ChartCoordinates shifted = start;
  for (auto& p : shifted.vertex_positions) {
    p = Point(p.x + R(1, 8), p.y);
  }
  for (auto& line : shifted.edge_polylines) {
    for (auto& p : line) {
      p = Point(p.x + R(1, 8), p.y);
    }
  }
  EXPECT_EQ(apply_keyframe_isotopy(ribbon, {start, shifted}).size(), 2u);
  ChartCoordinates collapsed = start;
  collapsed.vertex_positions[0] = collapsed.vertex_positions[2];
  collapsed.edge_polylines[0].front() = collapsed.vertex_positions[2];
  EXPECT_THROW(apply_keyframe_isotopy(ribbon, {start, collapsed}), ChartError);
}

}  // namespace
}  // namespace curtains

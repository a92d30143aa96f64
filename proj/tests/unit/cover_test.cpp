#include <gtest/gtest.h>

#include <random>

#include "curtains/cover.hpp"
#include "curtains/error.hpp"
#include "support/chart_fixtures.hpp"
#include "support/generators.hpp"

namespace curtains {
namespace {

BraidWord w(const std::string& text, int degree) {
  return parse_braid_word(text, degree);
}

MonodromyData trefoil(std::vector<BandGeneratorForm> images) {
  MonodromyData data;
  data.degree = 3;
  data.strands = 2;
  data.beta = w("s1 s1 s1", 2);
  data.images = std::move(images);
  return data;
}

TEST(PermutationMonodromy, StandardImages) {
  const auto perms = permutation_monodromy(trefoil({{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}}));
  ASSERT_EQ(perms.size(), 2u);
  EXPECT_EQ(perms[0].cycles(), "(1 2)");
  EXPECT_EQ(perms[1].cycles(), "(2 3)");
}

TEST(PermutationMonodromy, ConjugatedImage) {
  const auto perms = permutation_monodromy(trefoil({{BraidWord(3), 2, 1}, {w("s2^-1", 3), 1, 1}}));
  EXPECT_EQ(perms[0].cycles(), "(2 3)");
  EXPECT_EQ(perms[1].cycles(), "(1 3)");
}

TEST(PermutationMonodromyProperty, BandFormsGiveTranspositions) {
  std::mt19937 rng(40);
  for (int trial = 0; trial < 100; ++trial) {
    MonodromyData data;
    data.degree = 2 + static_cast<int>(rng() % 4);
    data.strands = 1;
    data.beta = BraidWord(1);
    data.images = {testing::random_band_form(rng, data.degree, 5)};
    const auto perms = permutation_monodromy(data);
    ASSERT_EQ(perms.size(), 1u);
    ASSERT_TRUE(perms[0].is_transposition());
    ASSERT_EQ(perms[0], permutation_of(band_word(data.images[0])));
  }
}

TEST(Components, CountsOrbits) {
  EXPECT_EQ(cover_components(3, {Permutation::transposition(3, 1, 2), Permutation::transposition(3, 2, 3)}), 1);
  EXPECT_EQ(cover_components(3, {}), 3);
  EXPECT_EQ(cover_components(4, {Permutation::transposition(4, 1, 2)}), 3);
  EXPECT_EQ(cover_components(trefoil({{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}})), 1);
}

TEST(SliceEuler, DegreeMinusBranchPoints) {
  EXPECT_EQ(slice_euler(empty_chart(3)), 3);
  EXPECT_EQ(slice_euler(build_ribbon_chart({{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}}, 3)), -1);
  EXPECT_EQ(slice_euler(build_ribbon_chart({{BraidWord(2), 1, 1}}, 2)), 0);
}

TEST(Ledger, TrefoilHasTwoOfEach) {
  const MonodromyData data = trefoil({{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}});
  const CoverReport report = analyze_cover(data, build_curtain(data));
  EXPECT_EQ(report.ledger.one_handles, 2);
  EXPECT_EQ(report.ledger.two_handles, 2);
  ASSERT_EQ(report.ledger.one_handle_events.size(), 1u);
  EXPECT_EQ(report.ledger.one_handle_events[0].t, Rational(-1));
  EXPECT_EQ(report.components, 1);
  EXPECT_TRUE(report.closed);
  EXPECT_TRUE(report.ends_trivial);
  ASSERT_FALSE(report.euler.empty());
  EXPECT_EQ(report.euler.front().euler, 3);
  EXPECT_EQ(report.euler.back().euler, 3);
  for (std::size_t k = 1; k + 1 < report.euler.size(); ++k) {
    EXPECT_EQ(report.euler[k].euler, -1);
  }
  EXPECT_EQ(report.heegaard.level, Rational(0));
  EXPECT_EQ(report.heegaard.normalized_level, make_rational(1, 2));
  EXPECT_EQ(report.heegaard.branch_points, 4);
  EXPECT_EQ(report.heegaard.disk_euler, -1);
  EXPECT_EQ(report.heegaard.closed_euler, 2);
  const std::string text = render_text(report);
  EXPECT_NE(text.find("not identified"), std::string::npos);
}

TEST(Ledger, EmptyCurtainHasNoHandles) {
  Curtain cu;
  cu.degree = 2;
  cu.t_start = Rational(-1);
  cu.t_end = Rational(1);
  cu.segments = {{Rational(-1), Rational(1), {empty_chart(2)}}};
  const HandleLedger ledger = handle_ledger(cu);
  EXPECT_EQ(ledger.one_handles, 0);
  EXPECT_EQ(ledger.two_handles, 0);
  EXPECT_EQ(euler_profile(cu).size(), 1u);
}

TEST(CoverProperty, InvariantsOfBuiltCurtains) {
  std::mt19937 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto data = testing::search_admissible(rng, 3, 4);
    if (!data) {
      continue;
    }
    const Curtain cu = build_curtain(*data, {false});
    const CoverReport report = analyze_cover(*data, cu);
    // euler jumps only at free-edge events, by two per edge
    for (std::size_t k = 1; k < report.euler.size(); ++k) {
      const int jump = report.euler[k].euler - report.euler[k - 1].euler;
      int expected = 0;
      for (const auto& e : cu.events) {
        if (e.t == report.euler[k].t0) {
          const int edges = static_cast<int>(e.free_edges.size());
          expected += e.kind == EventKind::insert_free_edges ? -2 * edges
                      : e.kind == EventKind::delete_free_edges ? 2 * edges
                                                               : 0;
        }
      }
      ASSERT_EQ(jump, expected);
    }
    EXPECT_EQ(report.euler.front().euler, data->degree);
    EXPECT_EQ(report.euler.back().euler, data->degree);
    // components depend only on the orbit of the tuple
    const auto words = hurwitz_act(data->beta, image_words(*data));
    std::vector<Permutation> acted;
    for (const auto& word : words) {
      acted.push_back(permutation_of(word));
    }
    EXPECT_EQ(cover_components(data->degree, acted), report.components);
    for (std::size_t i = 0; i < acted.size(); ++i) {
      EXPECT_EQ(acted[i], report.permutations[i]);
    }
    ++checked;
  }
  EXPECT_GT(checked, 15);
}

TEST(CoverProperty, ComponentsInvariantUnderHurwitzMoves) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 4);
    std::vector<BraidWord> tuple;
    std::vector<Permutation> perms;
    for (int k = 0; k < n; ++k) {
      tuple.push_back(band_word(testing::random_band_form(rng, d, 3)));
      perms.push_back(permutation_of(tuple.back()));
    }
    const auto acted = hurwitz_act(testing::random_word(rng, n, 5), tuple);
    std::vector<Permutation> moved;
    for (const auto& word : acted) {
      moved.push_back(permutation_of(word));
    }
    ASSERT_EQ(cover_components(d, perms), cover_components(d, moved));
  }
}

}  // namespace
}  // namespace curtains

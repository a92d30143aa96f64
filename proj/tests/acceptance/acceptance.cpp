// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "curtains/builder.hpp"
#include "curtains/cover.hpp"
#include "curtains/geometry.hpp"
#include "support/chart_fixtures.hpp"
#include "support/generators.hpp"

namespace curtains {
namespace {

using testing::R;

// Thrown by check() with the first mismatch.
struct Mismatch {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) {
    throw Mismatch{what};
  }
}

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

void check_pipeline(const MonodromyData& data, const std::vector<BraidWord>& expected) {
  const Curtain cu = build_curtain(data);
  const ValidationReport report = validate_curtain(cu);
  check(report.ok(), "validate_curtain: " + report.to_string());
  const InternalBoundary boundary = internal_boundary(cu);
  check(boundary.components() == 1, "boundary components " + std::to_string(boundary.components()));
  check(boundary.braid.has_value(), "no braid: " + boundary.braid_problem);
  check(words_equal(*boundary.braid, data.beta), "boundary braid " + to_string(*boundary.braid));
  const auto words = meridian_monodromy(cu);
  check(words.size() == expected.size(), "meridian count");
  for (std::size_t i = 0; i < words.size(); ++i) {
    check(words_equal(words[i], expected[i]), "meridian " + std::to_string(i + 1) + " reads " + to_string(words[i]));
  }
}

void check_meridian_gate(const Curtain& cu) {
  for (const auto& word : meridian_monodromy(cu)) {
    check(permutation_of(word).is_transposition(), "permutation of " + to_string(word));
    check(std::abs(exponent_sum(word)) == 1, "exponent sum of " + to_string(word));
  }
}

void criterion_1() {
  check(words_equal(w("s1^-1 s2^-1 s1^-1 s2 s2 s1 s2", 4), w("s1", 4)), "words differ");
}

void criterion_2() {
  for (int d = 2; d <= 6; ++d) {
    for (int i = 1; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        const BraidWord si = BraidWord::generator(d, i);
        const BraidWord sj = BraidWord::generator(d, j);
        if (j - i >= 2) {
          check(words_equal(compose(si, sj), compose(sj, si)), "commutation fails");
        } else {
          check(words_equal(compose(compose(si, sj), si), compose(compose(sj, si), sj)), "braid relation fails");
        }
      }
    }
  }
  std::mt19937 rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const BraidWord base = testing::random_word(rng, d, 12);
    const BraidWord other = testing::insert_at(base, rng() % (base.size() + 1), testing::random_relator(rng, d));
    check(left_normal_form(base) == left_normal_form(other), "normal form changed for " + to_string(base));
  }
}

void criterion_3() {
  check_pipeline(trefoil({{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}}), {w("s1", 3), w("s2", 3)});
}

// Loops enclosing each free edge; the nest depth of the edge.
std::vector<int> nest_depths(const Chart& chart) {
  std::vector<int> depths;
  for (const auto& edge : chart.edges) {
    if (edge.closed()) {
      continue;
    }
    int depth = 0;
    for (const auto& loop : chart.edges) {
      if (loop.closed()) {
        const std::vector<Point> ring(loop.polyline.begin(), loop.polyline.end() - 1);
        depth += locate_in_polygon(edge.polyline.front(), ring) > 0 ? 1 : 0;
      }
    }
    depths.push_back(depth);
  }
  return depths;
}

void criterion_4() {
  const MonodromyData data = trefoil({{BraidWord(3), 2, 1}, {w("s2^-1", 3), 1, 1}});
  check_pipeline(data, {w("s2", 3), w("s2^-1 s1 s2", 3)});
  const Curtain cu = build_curtain(data);
  const Chart ribbon = slice_at(cu, meridian_reference_time(cu));
  const auto depths = nest_depths(ribbon);
  check(depths.size() == 2, "ribbon has " + std::to_string(depths.size()) + " free edges");
  check(std::count(depths.begin(), depths.end(), 1) == 1, "depth-1 nests");
  check(std::count(depths.begin(), depths.end(), 0) == 1, "depth-0 nests");
  int simple_loops = 0;
  for (const auto& seg : cu.segments) {
    if (seg.t0 >= 1 && seg.keyframes.size() == 1) {
      const Chart& c = seg.keyframes.front();
      simple_loops += (c.vertices.empty() && c.edges.size() == 1 && c.edges[0].closed()) ? 1 : 0;
    }
  }
  check(simple_loops == 1, "outer band has " + std::to_string(simple_loops) + " simple-loop slices");
}

void criterion_5() {
  std::mt19937 rng(5);
  int built = 0;
  for (int attempt = 0; built < 200 && attempt < 2000; ++attempt) {
    const auto data = testing::search_admissible(rng, 3, 4);
    if (!data) {
      continue;
    }
    check(testing::oracle_fixed(data->beta, image_words(*data)), "search produced unfixed data");
    const Curtain cu = build_curtain(*data, {false});
    const std::string problem = roundtrip_problem(*data, cu);
    check(problem.empty(), "beta " + to_string(data->beta) + ": " + problem);
    const auto words = meridian_monodromy(cu);
    for (std::size_t i = 0; i < words.size(); ++i) {
      check(testing::oracle_equal(words[i], band_word(data->images[i])), "oracle disagrees at " + std::to_string(i));
    }
    ++built;
  }
  check(built >= 200, "only " + std::to_string(built) + " admissible data found");
}

void criterion_6() {
  std::mt19937 rng(6);
  const NestPlacement placement{Point(R(0), R(1, 2)), R(1, 2), R(1, 4)};
  for (int trial = 0; trial < 500; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const BandGeneratorForm form = testing::random_band_form(rng, d, 6);
    const Chart nest = build_oval_nest(placement, form);
    const auto m = static_cast<int>(form.conjugator.size());
    const BraidWord word = loop_monodromy(nest, testing::loop_around_left_end(placement, m));
    check(words_equal(word, band_word(form)), "nest for " + to_string(band_word(form)) + " reads " + to_string(word));
  }
}

void criterion_7() {
  check_meridian_gate(build_curtain(trefoil({{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}})));
  check_meridian_gate(build_curtain(trefoil({{BraidWord(3), 2, 1}, {w("s2^-1", 3), 1, 1}})));
  std::mt19937 rng(7);
  int built = 0;
  for (int attempt = 0; built < 100 && attempt < 1000; ++attempt) {
    const auto data = testing::search_admissible(rng, 3, 4);
    if (data) {
      check_meridian_gate(build_curtain(*data, {false}));
      ++built;
    }
  }
  check(built == 100, "too few builder outputs");
}

void criterion_8() {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto replacement = testing::random_replacement(rng);
    for (int k = 0; k < 20; ++k) {
      const PLPath loop = testing::random_loop(rng, 3);
      check(words_equal(loop_monodromy(replacement.before, loop), loop_monodromy(replacement.after, loop)),
            "monodromy changed in trial " + std::to_string(trial));
    }
  }
}

void criterion_9() {
  const MonodromyData data = trefoil({{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}});
  const CoverReport report = analyze_cover(data, build_curtain(data));
  check(report.permutations.size() == 2 && report.permutations[0] == Permutation::transposition(3, 1, 2) &&
            report.permutations[1] == Permutation::transposition(3, 2, 3),
        "permutation images");
  check(report.components == 1, "components " + std::to_string(report.components));
  check(report.ledger.one_handles == 2 && report.ledger.two_handles == 2, "handle ledger");
  check(report.euler.size() >= 3, "euler profile too short");
  std::ostringstream seq;
  for (const auto& s : report.euler) {
    seq << s.euler << " ";
  }
  check(report.euler.front().euler == 3 && report.euler.back().euler == 3, "euler sequence " + seq.str());
  for (std::size_t k = 1; k + 1 < report.euler.size(); ++k) {
    check(report.euler[k].euler == -1, "euler sequence " + seq.str());
  }
}

bool run(int number, const char* name, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    body();
  } catch (const Mismatch& m) {
    ok = false;
    detail = m.what;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && seconds >= 10.0) {
    ok = false;
    detail = "exceeded 10 s";
  }
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number, name, seconds,
              detail.empty() ? "" : " -- ", detail.c_str());
  return ok;
}

}  // namespace
}  // namespace curtains

int main() {
  using namespace curtains;
  bool ok = true;
  ok &= run(1, "four-strand parallel edge reading equals s1", criterion_1);
  ok &= run(2, "presentation relators and 1000 relator insertions", criterion_2);
  ok &= run(3, "trefoil with images (s1, s2) end to end", criterion_3);
  ok &= run(4, "trefoil with images (s2, s2^-1 s1 s2) end to end", criterion_4);
  ok &= run(5, "200 random admissible data round trip", criterion_5);
  ok &= run(6, "500 random oval nests read their band word", criterion_6);
  ok &= run(7, "meridian words are band generators", criterion_7);
  ok &= run(8, "100 disk replacements keep external monodromy", criterion_8);
  ok &= run(9, "cover invariants of the trefoil example", criterion_9);
  return ok ? 0 : 1;
}

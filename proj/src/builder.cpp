#include "curtains/builder.hpp"

#include "curtains/error.hpp"
#include "curtains/pl_motion.hpp"

namespace curtains {

std::vector<BraidWord> image_words(const MonodromyData& data) {
  std::vector<BraidWord> out;
  for (const auto& f : data.images) {
    out.push_back(band_word(f));
  }
  return out;
}

ValidationReport validate_monodromy_data(const MonodromyData& data) {
  ValidationReport report;
  if (data.degree < 2) {
    report.add("degree", "cover degree must be at least 2");
  }
  if (data.strands < 1) {
    report.add("strands", "braid degree must be at least 1");
  }
  if (data.beta.degree() != data.strands) {
    report.add("beta", "beta has degree " + std::to_string(data.beta.degree()) + ", expected " +
                           std::to_string(data.strands));
  }
  if (static_cast<int>(data.images.size()) != data.strands) {
    report.add("images", "expected " + std::to_string(data.strands) + " images, got " +
                             std::to_string(data.images.size()));
  }
  for (std::size_t i = 0; i < data.images.size(); ++i) {
    const auto& f = data.images[i];
    const std::string subject = "images/" + std::to_string(i + 1);
    if (f.degree() != data.degree) {
      report.add(subject, "image has degree " + std::to_string(f.degree()));
      continue;
    }
    if (auto problem = band_form_problem(f); !problem.empty()) {
      report.add(subject, problem);
    }
  }
  if (!report.ok()) {
    return report;
  }
  const std::vector<BraidWord> images = image_words(data);
  const std::vector<BraidWord> moved = hurwitz_act(data.beta, images);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!words_equal(images[i], moved[i])) {
      report.add("images/" + std::to_string(i + 1), "Hurwitz fixedness failed at index " + std::to_string(i + 1));
    }
  }
  return report;
}

namespace {

long total_loops(const MonodromyData& data) {
  long k = 0;
  for (const auto& f : data.images) {
    k += static_cast<long>(f.conjugator.size());
  }
  return k;
}

}  // namespace

BuildPlan plan_build(const MonodromyData& data) {
  BuildPlan plan;
  const Rational one(1), half(1, 2), quarter(1, 4);
  const long loops = total_loops(data);
  for (long k = 1; k <= loops; ++k) {
    plan.loop_removals.push_back(make_rational(3, 2) + make_rational(k, 2 * (loops + 1)));
  }
  const long letters = static_cast<long>(data.beta.size());
  for (long k = 1; k <= letters; ++k) {
    plan.drag_letters.push_back(make_rational(letters - k, 2 * letters));
  }
  plan.has_certified = letters > 0;
  plan.certified_time = -quarter;
  plan.stages = {
      {"outer cap", Rational(-2), -one},
      {"ribbon", -one, -half},
      {"certified transition", -half, Rational(0)},
      {"braid drag", Rational(0), half},
      {"ribbon", half, one},
      {"outer cap", one, Rational(2)},
  };
  return plan;
}

namespace {

std::vector<Point> loop_disk(const NestPlacement& p, const Rational& margin) {
  const Rational x0 = p.center.x - p.half_length - margin;
  const Rational x1 = p.center.x + p.half_length + margin;
  const Rational y0 = p.center.y - margin;
  const Rational y1 = p.center.y + margin;
  return {Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)};
}

CurtainSegment static_segment(const Rational& t0, const Rational& t1, const Chart& chart) {
  return CurtainSegment{t0, t1, {chart}};
}

}  // namespace

Curtain build_curtain(const MonodromyData& data, const BuildOptions& options) {
  const ValidationReport report = validate_monodromy_data(data);
  if (!report.ok()) {
    throw BuildError(report.to_string());
  }
  const BuildPlan plan = plan_build(data);
  const int d = data.degree;
  const std::size_t n = data.images.size();
  const std::vector<NestPlacement> layout = ribbon_layout(n);
  const Chart ribbon = build_ribbon_chart(layout, data.images, d);
  const std::vector<FreeEdge> free_edges = free_edges_of(ribbon);

  // loop removals: nest by nest, innermost first
  std::vector<Chart> loop_charts{remove_free_edges(ribbon, free_edges)};
  std::vector<DiskReplacement> removals;
  for (std::size_t i = 0; i < n; ++i) {
    const long m = static_cast<long>(data.images[i].conjugator.size());
    for (long j = m; j >= 1; --j) {
      const Rational margin = layout[i].radius * make_rational(m - j + 1, m);
      const Rational gap = layout[i].radius / m;
      const std::vector<Point> disk = loop_disk(layout[i], margin + gap / 2);
      const std::string loop_id = "n" + std::to_string(i + 1) + ".loop" + std::to_string(j);
      Chart loop_only = empty_chart(d);
      loop_only.edges.push_back(*loop_charts.back().find_edge(loop_id));
      loop_charts.push_back(apply_disk_replacement(loop_charts.back(), disk, empty_chart(d)));
      removals.push_back({disk, loop_only});
    }
  }

  // braid drag, letters applied in order starting from the ribbon chart
  const Rational h = make_rational(1, static_cast<long>(n) + 1);
  const Rational half(1, 2), one(1), two(2);
  std::vector<CurtainSegment> drag;
  Chart current = ribbon;
  const long letter_count = static_cast<long>(data.beta.size());
  for (long k = 0; k < letter_count; ++k) {
    const BraidLetter& letter = data.beta.letters()[static_cast<std::size_t>(k)];
    const Point center(half, h * letter.index + h / 2);
    const PLMotion motion = half_twist(center, h, letter.sign);
    if (!is_isotopy(motion)) {
      throw BuildError("half twist for letter " + std::to_string(k + 1) + " is not an isotopy");
    }
    std::vector<Chart> frames = move_chart(current, motion);
    if (options.verify) {
      std::vector<ChartCoordinates> coords;
      for (const auto& f : frames) coords.push_back(coordinates_of(f));
      try {
        apply_keyframe_isotopy(frames.front(), coords);
      } catch (const ChartError& e) {
        throw BuildError("drag keyframes for letter " + std::to_string(k + 1) + ": " + e.what());
      }
    }
    current = canonicalize(frames.back());
    std::reverse(frames.begin(), frames.end());
    drag.push_back({make_rational(letter_count - k - 1, 2 * letter_count),
                    make_rational(letter_count - k, 2 * letter_count), std::move(frames)});
  }
  const Chart& c0 = current;

  Curtain cu;
  cu.degree = d;
  cu.t_start = -two;
  cu.t_end = two;
  const auto& tau = plan.loop_removals;
  const std::size_t loops = tau.size();

  // negative side: loops inserted in the reverse of the removal order
  cu.segments.push_back(static_segment(-two, loops ? Rational(-tau[loops - 1]) : -one, loop_charts[loops]));
  for (std::size_t k = loops; k >= 1; --k) {
    cu.events.push_back({-tau[k - 1], EventKind::disk_replacement, removals[k - 1], {}, std::nullopt});
    cu.segments.push_back(static_segment(-tau[k - 1], k > 1 ? Rational(-tau[k - 2]) : -one, loop_charts[k - 1]));
  }
  cu.events.push_back({-one, EventKind::insert_free_edges, std::nullopt, free_edges, std::nullopt});
  cu.segments.push_back(static_segment(-one, -half, ribbon));
  if (plan.has_certified) {
    const Rational& tc = plan.certified_time;
    cu.segments.push_back(static_segment(-half, tc, ribbon));
    TransitionCertificate cert = certify_transition(ribbon, c0, transition_meridians(ribbon, c0));
    cu.events.push_back({tc, EventKind::certified_transition, std::nullopt, {}, std::move(cert)});
    cu.segments.push_back(static_segment(tc, Rational(0), c0));
    for (auto it = drag.rbegin(); it != drag.rend(); ++it) {
      cu.segments.push_back(std::move(*it));
    }
  } else {
    cu.segments.push_back(static_segment(-half, Rational(0), ribbon));
    cu.segments.push_back(static_segment(Rational(0), half, ribbon));
  }
  cu.segments.push_back(static_segment(half, one, ribbon));
  cu.events.push_back({one, EventKind::delete_free_edges, std::nullopt, free_edges, std::nullopt});
  for (std::size_t k = 0; k <= loops; ++k) {
    const Rational t0 = k == 0 ? one : tau[k - 1];
    const Rational t1 = k == loops ? two : tau[k];
    cu.segments.push_back(static_segment(t0, t1, loop_charts[k]));
    if (k < loops) {
      cu.events.push_back({tau[k], EventKind::disk_replacement, DiskReplacement{removals[k].disk, empty_chart(d)},
                           {}, std::nullopt});
    }
  }

  if (options.verify) {
    if (auto problem = roundtrip_problem(data, cu); !problem.empty()) {
      throw BuildError(problem);
    }
  }
  return cu;
}

std::string roundtrip_problem(const MonodromyData& data, const Curtain& curtain) {
  try {
    const ValidationReport report = validate_curtain(curtain);
    if (!report.ok()) {
      return "curtain invalid: " + report.to_string();
    }
    const InternalBoundary boundary = internal_boundary(curtain);
    if (boundary.open_arcs != 0) {
      return "internal boundary has open arcs";
    }
    if (!boundary.braid) {
      return "curtain is not in braid position: " + boundary.braid_problem;
    }
    if (!(*boundary.braid == data.beta)) {
      return "traced braid " + to_string(*boundary.braid) + " differs from beta " + to_string(data.beta);
    }
    const Permutation perm = permutation_of(data.beta);
    std::size_t cycles = 0;
    std::vector<bool> seen(static_cast<std::size_t>(perm.degree()) + 1, false);
    for (int start = 1; start <= perm.degree(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++cycles;
      for (int x = start; !seen[static_cast<std::size_t>(x)]; x = perm(x)) seen[static_cast<std::size_t>(x)] = true;
    }
    if (boundary.components() != cycles) {
      return "internal boundary has " + std::to_string(boundary.components()) + " components, closure of beta has " +
             std::to_string(cycles);
    }
    const std::vector<BraidWord> words = meridian_monodromy(curtain);
    const std::vector<BraidWord> images = image_words(data);
    if (words.size() != images.size()) {
      return "meridian count differs from the data";
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (!words_equal(words[i], images[i])) {
        return "meridian " + std::to_string(i + 1) + " reads " + to_string(words[i]);
      }
    }
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace curtains

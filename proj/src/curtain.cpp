#include "curtains/curtain.hpp"

#include <algorithm>
#include <set>

#include "curtains/error.hpp"

namespace curtains {

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::disk_replacement:
      return "disk_replacement";
    case EventKind::insert_free_edges:
      return "insert_free_edges";
    case EventKind::delete_free_edges:
      return "delete_free_edges";
    case EventKind::certified_transition:
      return "certified_transition";
  }
  return "disk_replacement";
}

EventKind parse_event_kind(const std::string& text) {
  if (text == "disk_replacement") return EventKind::disk_replacement;
  if (text == "insert_free_edges") return EventKind::insert_free_edges;
  if (text == "delete_free_edges") return EventKind::delete_free_edges;
  if (text == "certified_transition") return EventKind::certified_transition;
  throw CurtainError("unknown event kind '" + text + "'");
}

namespace {

std::vector<Point> oriented_simplified(const std::vector<Point>& polyline, bool reversed) {
  std::vector<Point> pts = simplify_polyline(polyline, false);
  if (reversed) {
    std::reverse(pts.begin(), pts.end());
  }
  return pts;
}

}  // namespace

Chart add_free_edges(const Chart& chart, const std::vector<FreeEdge>& edges, const std::string& id_prefix) {
  Chart out = chart;
  std::set<std::string> taken;
  for (const auto& v : chart.vertices) taken.insert("v:" + v.id);
  for (const auto& e : chart.edges) taken.insert("e:" + e.id);
  auto fresh = [&taken](const std::string& kind, const std::string& base) {
    std::string id = base;
    for (int k = 1; !taken.insert(kind + id).second; ++k) {
      id = base + "." + std::to_string(k);
    }
    return id;
  };
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const FreeEdge& fe = edges[k];
    if (fe.polyline.size() < 2) {
      throw CurtainError("free edge needs at least two points");
    }
    const std::string base = id_prefix + std::to_string(k + 1);
    ChartEdge e;
    e.id = fresh("e:", base);
    e.label = fe.label;
    e.reversed = fe.reversed;
    e.polyline = fe.polyline;
    const std::string a = fresh("v:", base + ".a");
    const std::string b = fresh("v:", base + ".b");
    e.ends = std::array<std::string, 2>{a, b};
    out.vertices.push_back({a, VertexKind::black, fe.polyline.front()});
    out.vertices.push_back({b, VertexKind::black, fe.polyline.back()});
    out.edges.push_back(std::move(e));
  }
  return out;
}

std::vector<FreeEdge> free_edges_of(const Chart& chart) {
  std::vector<FreeEdge> out;
  for (const auto& e : chart.edges) {
    if (e.closed()) {
      continue;
    }
    const ChartVertex* a = chart.find_vertex((*e.ends)[0]);
    const ChartVertex* b = chart.find_vertex((*e.ends)[1]);
    if (a && b && a->kind == VertexKind::black && b->kind == VertexKind::black) {
      out.push_back({e.polyline, e.label, e.reversed});
    }
  }
  return out;
}

Chart remove_free_edges(const Chart& chart, const std::vector<FreeEdge>& edges) {
  Chart out = chart;
  for (const auto& fe : edges) {
    const auto target = oriented_simplified(fe.polyline, fe.reversed);
    auto it = std::find_if(out.edges.begin(), out.edges.end(), [&](const ChartEdge& e) {
      if (e.closed() || e.label != fe.label) return false;
      const ChartVertex* a = out.find_vertex((*e.ends)[0]);
      const ChartVertex* b = out.find_vertex((*e.ends)[1]);
      return a && b && a->kind == VertexKind::black && b->kind == VertexKind::black &&
             oriented_simplified(e.polyline, e.reversed) == target;
    });
    if (it == out.edges.end()) {
      throw CurtainError("free edge to delete is not in the chart");
    }
    const std::array<std::string, 2> ends = *it->ends;
    out.edges.erase(it);
    out.vertices.erase(std::remove_if(out.vertices.begin(), out.vertices.end(),
                                      [&](const ChartVertex& v) { return v.id == ends[0] || v.id == ends[1]; }),
                       out.vertices.end());
  }
  return out;
}

std::vector<PLPath> transition_meridians(const Chart& before, const Chart& after) {
  return hurwitz_meridians(before.black_vertices(), before.rect, {&before, &after}).ordered();
}

TransitionCertificate certify_transition(const Chart& before, const Chart& after,
                                         const std::vector<PLPath>& meridians) {
  if (before.degree != after.degree) {
    throw TransitionError("charts have different degrees");
  }
  if (before.black_vertices() != after.black_vertices()) {
    throw TransitionError("black vertex sets differ");
  }
  TransitionCertificate cert{before, after, meridians, {}, {}};
  for (std::size_t i = 0; i < meridians.size(); ++i) {
    cert.before_words.push_back(loop_monodromy(before, meridians[i]));
    cert.after_words.push_back(loop_monodromy(after, meridians[i]));
    if (!words_equal(cert.before_words.back(), cert.after_words.back())) {
      throw TransitionError("tuples differ at index " + std::to_string(i + 1));
    }
  }
  return cert;
}

std::string certificate_problem(const TransitionCertificate& cert) {
  try {
    const TransitionCertificate fresh = certify_transition(cert.before, cert.after, cert.meridians);
    if (fresh.before_words != cert.before_words || fresh.after_words != cert.after_words) {
      return "recorded words do not match the charts";
    }
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

bool is_event_time(const Curtain& curtain, const Rational& t) {
  return std::any_of(curtain.events.begin(), curtain.events.end(), [&t](const CurtainEvent& e) { return e.t == t; });
}

namespace {

Chart keyframe_at(const CurtainSegment& seg, const Rational& t) {
  const auto& frames = seg.keyframes;
  if (frames.size() == 1 || t == seg.t0) {
    return frames.front();
  }
  if (t == seg.t1) {
    return frames.back();
  }
  const Rational pos = (t - seg.t0) / (seg.t1 - seg.t0) * static_cast<long>(frames.size() - 1);
  mpz_class whole = pos.get_num() / pos.get_den();
  const std::size_t k = whole.get_ui();
  const Rational frac = pos - Rational(whole);
  if (frac == 0) {
    return frames[k];
  }
  return with_coordinates(frames[k], interpolate(coordinates_of(frames[k]), coordinates_of(frames[k + 1]), frac));
}

void check_event(const CurtainEvent& event, const Chart& before, const Chart& after, const CurtainOptions& options,
                 const std::string& subject, ValidationReport& report) {
  try {
    switch (event.kind) {
      case EventKind::insert_free_edges:
        if (event.free_edges.empty()) {
          report.add(subject, "insertion without free edges");
        }
        if (!geometrically_equal(add_free_edges(before, event.free_edges, "ins."), after)) {
          report.add(subject, "slice after insertion does not match the payload");
        }
        break;
      case EventKind::delete_free_edges:
        if (event.free_edges.empty()) {
          report.add(subject, "deletion without free edges");
        }
        if (!geometrically_equal(add_free_edges(after, event.free_edges, "del."), before)) {
          report.add(subject, "slice after deletion does not match the payload");
        }
        break;
      case EventKind::disk_replacement:
        if (!event.replacement) {
          report.add(subject, "disk replacement without payload");
        } else if (!geometrically_equal(
                       apply_disk_replacement(before, event.replacement->disk, event.replacement->replacement),
                       after)) {
          report.add(subject, "slice after disk replacement does not match the payload");
        }
        break;
      case EventKind::certified_transition:
        if (options.reject_certified) {
          report.add(subject, "certified transition rejected in strict mode");
        }
        if (!event.certificate) {
          report.add(subject, "certified transition without certificate");
          break;
        }
        if (!geometrically_equal(event.certificate->before, before) ||
            !geometrically_equal(event.certificate->after, after)) {
          report.add(subject, "certificate charts do not match the adjacent slices");
        }
        if (auto problem = certificate_problem(*event.certificate); !problem.empty()) {
          report.add(subject, "certificate fails: " + problem);
        }
        break;
    }
  } catch (const Error& e) {
    report.add(subject, e.what());
  }
}

}  // namespace

ValidationReport validate_curtain(const Curtain& curtain, const CurtainOptions& options) {
  ValidationReport report;
  if (curtain.degree < 1) {
    report.add("", "degree must be at least 1");
  }
  if (!(curtain.t_start < curtain.t_end)) {
    report.add("", "time range is empty");
    return report;
  }
  const auto& segs = curtain.segments;
  if (segs.empty()) {
    report.add("", "curtain has no segments");
    return report;
  }
  if (segs.front().t0 != curtain.t_start || segs.back().t1 != curtain.t_end) {
    report.add("", "segments do not span the time range");
  }
  const Rational half(1, 2);
  std::vector<const Chart*> validated;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& seg = segs[k];
    const std::string subject = "segment " + std::to_string(k);
    if (!(seg.t0 < seg.t1)) {
      report.add(subject, "empty time interval");
    }
    if (k > 0 && segs[k - 1].t1 != seg.t0) {
      report.add(subject, "not contiguous with the previous segment");
    }
    if (seg.keyframes.empty()) {
      report.add(subject, "no keyframes");
      continue;
    }
    for (std::size_t j = 0; j < seg.keyframes.size(); ++j) {
      const Chart& frame = seg.keyframes[j];
      const std::string fsub = subject + " keyframe " + std::to_string(j) + " ";
      if (frame.degree != curtain.degree) {
        report.add(fsub, "degree differs from the curtain");
      }
      // Static slices repeat across segments; validate each distinct chart once.
      const bool seen = std::any_of(validated.begin(), validated.end(), [&frame](const Chart* c) { return *c == frame; });
      if (!seen) {
        const ValidationReport frame_report = validate_chart(frame);
        if (frame_report.ok()) {
          validated.push_back(&frame);
        }
        report.merge(frame_report, fsub);
      }
      if (j > 0) {
        if (!same_combinatorics(seg.keyframes[j - 1], frame)) {
          report.add(fsub, "combinatorics change inside a segment");
          continue;
        }
        const Chart mid = with_coordinates(
            frame, interpolate(coordinates_of(seg.keyframes[j - 1]), coordinates_of(frame), half));
        report.merge(validate_chart(mid), fsub + "midpoint ");
      }
    }
  }
  if (!report.ok()) {
    return report;
  }
  std::size_t next_event = 0;
  for (std::size_t k = 0; k < curtain.events.size(); ++k) {
    if (k > 0 && !(curtain.events[k - 1].t < curtain.events[k].t)) {
      report.add("event " + std::to_string(k), "event times must increase strictly");
    }
  }
  for (std::size_t k = 0; k + 1 < segs.size(); ++k) {
    const Rational& t = segs[k].t1;
    const Chart& before = segs[k].keyframes.back();
    const Chart& after = segs[k + 1].keyframes.front();
    while (next_event < curtain.events.size() && curtain.events[next_event].t < t) {
      report.add("event " + std::to_string(next_event), "event is not at a segment boundary");
      ++next_event;
    }
    if (next_event < curtain.events.size() && curtain.events[next_event].t == t) {
      check_event(curtain.events[next_event], before, after, options, "event " + std::to_string(next_event),
                  report);
      ++next_event;
    } else if (!geometrically_equal(before, after)) {
      report.add("segment " + std::to_string(k + 1), "slice jumps at t = " + t.get_str() + " without an event");
    }
  }
  for (; next_event < curtain.events.size(); ++next_event) {
    report.add("event " + std::to_string(next_event), "event is not at a segment boundary");
  }
  return report;
}

Chart slice_at(const Curtain& curtain, const Rational& t) {
  if (t < curtain.t_start || t > curtain.t_end) {
    throw CurtainError("time " + t.get_str() + " is outside the curtain");
  }
  if (is_event_time(curtain, t)) {
    throw CurtainError("time " + t.get_str() + " is an event time");
  }
  for (const auto& seg : curtain.segments) {
    if (seg.t0 <= t && t <= seg.t1) {
      return keyframe_at(seg, t);
    }
  }
  throw CurtainError("no segment covers time " + t.get_str());
}

std::vector<BraidWord> meridian_monodromy(const Curtain& curtain) {
  const Rational t = meridian_reference_time(curtain);
  const Chart chart = slice_at(curtain, t);
  const MeridianSystem sys = hurwitz_meridians(chart.black_vertices(), chart.rect, {&chart});
  std::vector<BraidWord> out;
  for (const auto& loop : sys.x) {
    out.push_back(loop_monodromy(chart, loop));
  }
  return out;
}

Rational meridian_reference_time(const Curtain& curtain) {
  for (auto it = curtain.segments.rbegin(); it != curtain.segments.rend(); ++it) {
    if (it->keyframes.size() != 1) {
      continue;
    }
    const Chart& chart = it->keyframes.front();
    const std::vector<Point> blacks = chart.black_vertices();
    if (blacks.empty()) {
      continue;
    }
    const Rational mid = chart.basepoint().x;
    std::set<Point> set(blacks.begin(), blacks.end());
    bool paired = true;
    for (const auto& p : blacks) {
      paired = paired && p.x != mid && set.count(Point(2 * mid - p.x, p.y)) > 0;
    }
    if (!paired) {
      continue;
    }
    return (it->t0 + it->t1) / 2;
  }
  throw CurtainError("no regular reference level with paired black vertices");
}

}  // namespace curtains

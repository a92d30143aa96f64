#include <algorithm>
#include <optional>

#include "curtains/chart.hpp"
#include "curtains/error.hpp"

namespace curtains {

namespace {

struct Hit {
  Rational s;
  BraidLetter letter;
};

// Letters along the path, or nullopt when the path is not transverse.
std::optional<std::vector<BraidLetter>> read_path(const Chart& chart, const std::vector<Point>& pts) {
  std::vector<BraidLetter> letters;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Point& p = pts[k];
    const Point& q = pts[k + 1];
    if (p == q) {
      continue;
    }
    const Rational lo_x = std::min(p.x, q.x), hi_x = std::max(p.x, q.x);
    const Rational lo_y = std::min(p.y, q.y), hi_y = std::max(p.y, q.y);
    std::vector<Hit> hits;
    for (const auto& e : chart.edges) {
      const auto& poly = e.polyline;
      for (std::size_t j = 0; j + 1 < poly.size(); ++j) {
        const Point& a = poly[j];
        const Point& b = poly[j + 1];
        if (std::max(a.x, b.x) < lo_x || std::min(a.x, b.x) > hi_x || std::max(a.y, b.y) < lo_y ||
            std::min(a.y, b.y) > hi_y) {
          continue;
        }
        const SegmentContact contact = classify_segments(p, q, a, b);
        if (contact == SegmentContact::none) {
          continue;
        }
        if (contact != SegmentContact::proper) {
          return std::nullopt;
        }
        Point dir = b - a;
        if (e.reversed) {
          dir = Rational(-1) * dir;
        }
        hits.push_back({crossing_parameter(p, q, a, b), {e.label, sgn(cross(q - p, dir))}});
      }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) { return l.s < r.s; });
    for (std::size_t h = 0; h < hits.size(); ++h) {
      if (h > 0 && hits[h].s == hits[h - 1].s) {
        return std::nullopt;
      }
      letters.push_back(hits[h].letter);
    }
  }
  return letters;
}

bool in_hull(const Point& v, const Point& p, const Point& q, const Point& p2, const Point& q2) {
  // conservative: inside either triangle covering the swept quadrilateral
  const std::vector<std::vector<Point>> tris = {{p, q, q2}, {p, q2, p2}, {p, q, p2}, {q, q2, p2}};
  for (const auto& tri : tris) {
    if (orientation(tri[0], tri[1], tri[2]) == 0) {
      if (point_on_segment(v, tri[0], tri[1]) || point_on_segment(v, tri[1], tri[2]) ||
          point_on_segment(v, tri[0], tri[2])) {
        return true;
      }
      continue;
    }
    if (locate_in_polygon(v, tri) >= 0) {
      return true;
    }
  }
  return false;
}

std::vector<Point> perturbed(const std::vector<Point>& pts, int attempt) {
  Rational delta(1, 1);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(6 + 3 * attempt));
  delta /= scale;
  std::vector<Point> out = pts;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const long a = static_cast<long>((k * 7 + static_cast<std::size_t>(attempt) * 3) % 13) + 1;
    const long b = static_cast<long>((k * 11 + static_cast<std::size_t>(attempt) * 5) % 17) + 1;
    const long sx = (k + static_cast<std::size_t>(attempt)) % 2 == 0 ? 1 : -1;
    const long sy = (k / 2 + static_cast<std::size_t>(attempt)) % 2 == 0 ? 1 : -1;
    out[k].x += delta * make_rational(sx * a, 13);
    out[k].y += delta * make_rational(sy * b, 17);
  }
  return out;
}

}  // namespace

BraidWord intersection_word(const Chart& chart, const PLPath& path) {
  std::vector<Point> blacks;
  for (const auto& v : chart.vertices) {
    if (v.kind == VertexKind::black) {
      blacks.push_back(v.pos);
    }
  }
  const auto& pts = path.points;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    for (const auto& v : blacks) {
      if (point_on_segment(v, pts[k], pts[k + 1])) {
        throw ChartError("path touches black vertex at " + to_string(v));
      }
    }
  }
  if (auto letters = read_path(chart, pts)) {
    return BraidWord(chart.degree, std::move(*letters));
  }
  for (int attempt = 1; attempt <= 3; ++attempt) {
    std::vector<Point> moved = perturbed(pts, attempt);
    bool safe = true;
    for (std::size_t k = 0; k + 1 < pts.size() && safe; ++k) {
      for (const auto& v : blacks) {
        if (in_hull(v, pts[k], pts[k + 1], moved[k], moved[k + 1])) {
          safe = false;
          break;
        }
      }
    }
    if (!safe) {
      continue;
    }
    if (auto letters = read_path(chart, moved)) {
      return BraidWord(chart.degree, std::move(*letters));
    }
  }
  throw ChartError("path is not in general position with the chart");
}

BraidWord loop_monodromy(const Chart& chart, const PLPath& loop) {
  if (loop.points.empty() || loop.points.front() != chart.basepoint() || loop.points.back() != chart.basepoint()) {
    throw ChartError("loop must start and end at the basepoint " + to_string(chart.basepoint()));
  }
  return intersection_word(chart, loop);
}

std::vector<PLPath> MeridianSystem::ordered() const {
  std::vector<PLPath> out = x;
  out.insert(out.end(), y.rbegin(), y.rend());
  return out;
}

namespace {

std::vector<Point> square_around(const Point& c, const Rational& r) {
  return {Point(c.x - r, c.y - r), Point(c.x + r, c.y - r), Point(c.x + r, c.y + r), Point(c.x - r, c.y + r)};
}

bool square_is_clear(const Chart& chart, const Point& center, const Rational& r) {
  const std::vector<Point> sq = square_around(center, r);
  std::optional<std::string> vertex_id;
  for (const auto& v : chart.vertices) {
    if (v.pos == center) {
      vertex_id = v.id;
    } else if (locate_in_polygon(v.pos, sq) >= 0) {
      return false;
    }
  }
  int incident_crossings = 0;
  for (const auto& e : chart.edges) {
    const auto& poly = e.polyline;
    for (std::size_t j = 0; j + 1 < poly.size(); ++j) {
      const bool incident = vertex_id && !e.closed() &&
                            ((j == 0 && (*e.ends)[0] == *vertex_id) ||
                             (j + 2 == poly.size() && (*e.ends)[1] == *vertex_id));
      if (!incident && (locate_in_polygon(poly[j], sq) >= 0 || locate_in_polygon(poly[j + 1], sq) >= 0)) {
        return false;
      }
      for (std::size_t s = 0; s < 4; ++s) {
        const SegmentContact contact = classify_segments(sq[s], sq[(s + 1) % 4], poly[j], poly[j + 1]);
        if (contact == SegmentContact::none) {
          continue;
        }
        if (!incident || contact != SegmentContact::proper) {
          return false;
        }
        ++incident_crossings;
      }
    }
  }
  return incident_crossings <= 1;
}

PLPath meridian_loop(const Point& base, const Point& channel_top, const Point& channel_bottom, const Point& puncture,
                     const Rational& r, bool left) {
  PLPath path;
  auto& p = path.points;
  p.push_back(base);
  p.push_back(channel_top);
  p.push_back(channel_bottom);
  const Point& c = puncture;
  if (left) {
    p.push_back(Point(c.x - r, c.y));
    p.push_back(Point(c.x - r, c.y - r));
    p.push_back(Point(c.x + r, c.y - r));
    p.push_back(Point(c.x + r, c.y + r));
    p.push_back(Point(c.x - r, c.y + r));
    p.push_back(Point(c.x - r, c.y));
  } else {
    p.push_back(Point(c.x + r, c.y));
    p.push_back(Point(c.x + r, c.y + r));
    p.push_back(Point(c.x - r, c.y + r));
    p.push_back(Point(c.x - r, c.y - r));
    p.push_back(Point(c.x + r, c.y - r));
    p.push_back(Point(c.x + r, c.y));
  }
  p.push_back(channel_bottom);
  p.push_back(channel_top);
  p.push_back(base);
  path.closed = true;
  return path;
}

}  // namespace

MeridianSystem hurwitz_meridians(const std::vector<Point>& punctures, const Rect& rect,
                                 const std::vector<const Chart*>& clearance) {
  MeridianSystem sys;
  const Point base = rect.top_midpoint();
  for (const auto& p : punctures) {
    if (!rect.strictly_contains(p)) {
      throw GeometryError("puncture " + to_string(p) + " is not interior");
    }
    (p.x < base.x ? sys.left : sys.right).push_back(p);
  }
  auto by_height = [](const Point& a, const Point& b) { return a.y < b.y; };
  std::sort(sys.left.begin(), sys.left.end(), by_height);
  std::sort(sys.right.begin(), sys.right.end(), by_height);
  if (punctures.empty()) {
    return sys;
  }

  Rational top = punctures.front().y;
  Rational radius = rect.x1 - rect.x0;
  for (std::size_t i = 0; i < punctures.size(); ++i) {
    const Point& p = punctures[i];
    top = std::max(top, p.y);
    for (const Rational& gap : {Rational(p.x - rect.x0), Rational(rect.x1 - p.x), Rational(p.y - rect.y0), Rational(rect.y1 - p.y)}) {
      radius = std::min<Rational>(radius, gap / 2);
    }
    for (std::size_t j = i + 1; j < punctures.size(); ++j) {
      const Rational dist = linf_distance(p, punctures[j]);
      if (dist == 0) {
        throw GeometryError("duplicate puncture " + to_string(p));
      }
      radius = std::min<Rational>(radius, dist / 4);
    }
  }
  for (const auto* side : {&sys.left, &sys.right}) {
    for (std::size_t j = 1; j < side->size(); ++j) {
      const Rational dy = (*side)[j].y - (*side)[j - 1].y;
      if (dy == 0) {
        throw GeometryError("two punctures on one side share the height " + (*side)[j].y.get_str());
      }
      radius = std::min<Rational>(radius, dy / 4);
    }
  }
  Rational left_gap, right_gap;
  if (!sys.left.empty()) {
    Rational lo = sys.left.front().x;
    for (const auto& p : sys.left) lo = std::min(lo, p.x);
    left_gap = (lo - rect.x0) / static_cast<long>(sys.left.size() + 1);
    radius = std::min<Rational>(radius, left_gap / 2);
  }
  if (!sys.right.empty()) {
    Rational hi = sys.right.front().x;
    for (const auto& p : sys.right) hi = std::max(hi, p.x);
    right_gap = (rect.x1 - hi) / static_cast<long>(sys.right.size() + 1);
    radius = std::min<Rational>(radius, right_gap / 2);
  }
  for (const Chart* chart : clearance) {
    for (const auto& p : punctures) {
      int guard = 0;
      while (!square_is_clear(*chart, p, radius)) {
        radius /= 2;
        if (++guard > 64) {
          throw GeometryError("no clear circle around puncture " + to_string(p));
        }
      }
    }
  }

  const Rational level = (top + rect.y1) / 2;
  if (!sys.left.empty()) {
    Rational lo = sys.left.front().x;
    for (const auto& p : sys.left) lo = std::min(lo, p.x);
    const long count = static_cast<long>(sys.left.size());
    for (long r = 0; r < count; ++r) {
      const Point& p = sys.left[static_cast<std::size_t>(r)];
      const Rational channel = lo - left_gap * (count - r);
      sys.x.push_back(meridian_loop(base, Point(channel, level), Point(channel, p.y), p, radius, true));
    }
  }
  if (!sys.right.empty()) {
    Rational hi = sys.right.front().x;
    for (const auto& p : sys.right) hi = std::max(hi, p.x);
    const long count = static_cast<long>(sys.right.size());
    for (long r = 0; r < count; ++r) {
      const Point& p = sys.right[static_cast<std::size_t>(r)];
      const Rational channel = hi + right_gap * (count - r);
      sys.y.push_back(meridian_loop(base, Point(channel, level), Point(channel, p.y), p, radius, false));
    }
  }
  return sys;
}

Chart build_oval_nest(const NestPlacement& placement, const BandGeneratorForm& form, const std::string& id_prefix,
                      const Rect& rect) {
  const std::string problem = band_form_problem(form);
  if (!problem.empty()) {
    throw ChartError("invalid band generator form: " + problem);
  }
  if (placement.half_length <= 0 || placement.radius <= 0) {
    throw ChartError("nest placement needs positive half length and radius");
  }
  const int degree = form.degree();
  Chart nest = empty_chart(degree, rect);
  const Point& c = placement.center;
  const Point left(c.x - placement.half_length, c.y);
  const Point right(c.x + placement.half_length, c.y);
  nest.vertices.push_back({id_prefix + "l", VertexKind::black, left});
  nest.vertices.push_back({id_prefix + "r", VertexKind::black, right});
  ChartEdge free_edge;
  free_edge.id = id_prefix + "free";
  free_edge.label = form.target_index;
  // oriented right to left for a positive letter
  free_edge.reversed = form.sign > 0;
  free_edge.polyline = {left, right};
  free_edge.ends = std::array<std::string, 2>{id_prefix + "l", id_prefix + "r"};
  nest.edges.push_back(free_edge);

  const auto& letters = form.conjugator.letters();
  const long m = static_cast<long>(letters.size());
  for (long j = 0; j < m; ++j) {
    const Rational margin = placement.radius * make_rational(m - j, m);
    const Rational x0 = left.x - margin, x1 = right.x + margin;
    const Rational y0 = c.y - margin, y1 = c.y + margin;
    ChartEdge loop;
    loop.id = id_prefix + "loop" + std::to_string(j + 1);
    loop.label = letters[static_cast<std::size_t>(j)].index;
    // clockwise polyline: the left side runs upward
    loop.polyline = {Point(x0, y0), Point(x0, y1), Point(x1, y1), Point(x1, y0), Point(x0, y0)};
    loop.reversed = letters[static_cast<std::size_t>(j)].sign < 0;
    nest.edges.push_back(loop);
  }
  const Rational r = placement.radius;
  if (!(rect.strictly_contains(Point(left.x - r, c.y - r)) && rect.strictly_contains(Point(right.x + r, c.y + r)))) {
    throw ChartError("nest placement leaves the domain");
  }
  return nest;
}

std::vector<NestPlacement> ribbon_layout(std::size_t n) {
  std::vector<NestPlacement> out;
  const long count = static_cast<long>(n);
  for (long i = 1; i <= count; ++i) {
    out.push_back({Point(Rational(0), make_rational(i, count + 1)), Rational(1, 2), make_rational(1, 4 * (count + 1))});
  }
  return out;
}

Chart build_ribbon_chart(const std::vector<NestPlacement>& placements, const std::vector<BandGeneratorForm>& forms,
                         int degree) {
  if (placements.size() != forms.size()) {
    throw ChartError("need one placement per band generator form");
  }
  for (std::size_t i = 0; i < placements.size(); ++i) {
    const auto& a = placements[i];
    for (std::size_t j = i + 1; j < placements.size(); ++j) {
      const auto& b = placements[j];
      const bool apart_x = a.center.x + a.half_length + a.radius < b.center.x - b.half_length - b.radius ||
                           b.center.x + b.half_length + b.radius < a.center.x - a.half_length - a.radius;
      const bool apart_y =
          a.center.y + a.radius < b.center.y - b.radius || b.center.y + b.radius < a.center.y - a.radius;
      if (!apart_x && !apart_y) {
        throw ChartError("nest placements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
      }
    }
  }
  Chart chart = empty_chart(degree);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].degree() != degree) {
      throw ChartError("band generator form degree does not match the chart");
    }
    chart = merge_charts(chart, build_oval_nest(placements[i], forms[i], "n" + std::to_string(i + 1) + "."));
  }
  return chart;
}

Chart build_ribbon_chart(const std::vector<BandGeneratorForm>& forms, int degree) {
  return build_ribbon_chart(ribbon_layout(forms.size()), forms, degree);
}

}  // namespace curtains

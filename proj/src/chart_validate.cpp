#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "curtains/chart.hpp"

namespace curtains {

namespace {

struct Segment {
  std::size_t edge;
  std::size_t index;
  Point a, b;
  Rational min_x, max_x, min_y, max_y;
};

struct EdgeEnd {
  std::size_t edge;
  bool at_front;
  Point direction;  // pointing away from the vertex
  bool inward;
};

std::vector<Segment> collect_segments(const Chart& chart) {
  std::vector<Segment> segs;
  for (std::size_t e = 0; e < chart.edges.size(); ++e) {
    const auto& pts = chart.edges[e].polyline;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      Segment s{e, k, pts[k], pts[k + 1], {}, {}, {}, {}};
      s.min_x = std::min(s.a.x, s.b.x);
      s.max_x = std::max(s.a.x, s.b.x);
      s.min_y = std::min(s.a.y, s.b.y);
      s.max_y = std::max(s.a.y, s.b.y);
      segs.push_back(std::move(s));
    }
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& l, const Segment& r) { return l.min_x < r.min_x; });
  return segs;
}

// Vertex id at point p if p is a polyline end of the segment's edge.
std::optional<std::string> end_vertex(const Chart& chart, const Segment& s, const Point& p) {
  const ChartEdge& e = chart.edges[s.edge];
  if (e.closed()) {
    return std::nullopt;
  }
  if (s.index == 0 && p == e.polyline.front()) {
    return (*e.ends)[0];
  }
  if (s.index + 2 == e.polyline.size() && p == e.polyline.back()) {
    return (*e.ends)[1];
  }
  return std::nullopt;
}

bool touch_allowed(const Chart& chart, const Segment& s, const Segment& t) {
  std::vector<Point> shared;
  for (const Point* p : {&s.a, &s.b}) {
    if (*p == t.a || *p == t.b) {
      shared.push_back(*p);
    }
  }
  if (shared.size() != 1) {
    return false;
  }
  const Point& p = shared.front();
  if (s.edge == t.edge) {
    const ChartEdge& e = chart.edges[s.edge];
    const std::size_t last = e.polyline.size() - 2;
    const std::size_t lo = std::min(s.index, t.index);
    const std::size_t hi = std::max(s.index, t.index);
    if (hi == lo + 1 && e.polyline[hi] == p) {
      return true;
    }
    if (e.closed() && lo == 0 && hi == last && e.polyline.front() == p) {
      return true;
    }
  }
  auto vs = end_vertex(chart, s, p);
  auto vt = end_vertex(chart, t, p);
  return vs && vt && *vs == *vt;
}

std::vector<EdgeEnd> ends_at(const Chart& chart, const std::string& vertex_id) {
  std::vector<EdgeEnd> ends;
  for (std::size_t e = 0; e < chart.edges.size(); ++e) {
    const ChartEdge& edge = chart.edges[e];
    if (edge.closed() || edge.polyline.size() < 2) {
      continue;
    }
    const auto& pts = edge.polyline;
    if ((*edge.ends)[0] == vertex_id) {
      ends.push_back({e, true, pts[1] - pts[0], edge.reversed});
    }
    if ((*edge.ends)[1] == vertex_id) {
      ends.push_back({e, false, pts[pts.size() - 2] - pts.back(), !edge.reversed});
    }
  }
  std::stable_sort(ends.begin(), ends.end(),
                   [](const EdgeEnd& l, const EdgeEnd& r) { return angle_less(l.direction, r.direction); });
  return ends;
}

std::size_t expected_valence(VertexKind kind) {
  switch (kind) {
    case VertexKind::black:
    case VertexKind::boundary:
      return 1;
    case VertexKind::crossing:
      return 4;
    case VertexKind::white:
      return 6;
  }
  return 1;
}

void check_local_structure(const Chart& chart, const ChartVertex& v, const std::vector<EdgeEnd>& ends,
                           ValidationReport& report) {
  std::vector<int> labels;
  std::vector<bool> inward;
  for (const auto& end : ends) {
    labels.push_back(chart.edges[end.edge].label);
    inward.push_back(end.inward);
  }
  const std::size_t n = ends.size();
  if (v.kind == VertexKind::crossing) {
    if (labels[0] != labels[2] || labels[1] != labels[3]) {
      report.add(v.id, "crossing labels must alternate i, j, i, j");
    } else if (std::abs(labels[0] - labels[1]) < 2) {
      report.add(v.id, "crossing labels must differ by at least 2");
    }
    if (inward[0] == inward[2] || inward[1] == inward[3]) {
      report.add(v.id, "crossing edges must pass straight through");
    }
  } else {
    bool alternate = true;
    for (std::size_t k = 0; k < n; ++k) {
      alternate = alternate && labels[k] == labels[(k + 2) % n];
    }
    if (!alternate) {
      report.add(v.id, "white vertex labels must alternate i, j");
    } else if (std::abs(labels[0] - labels[1]) != 1) {
      report.add(v.id, "white vertex labels must differ by 1");
    }
    const auto in_count = std::count(inward.begin(), inward.end(), true);
    bool consecutive = false;
    for (std::size_t start = 0; start < n && in_count == 3; ++start) {
      consecutive = consecutive || (inward[start] && inward[(start + 1) % n] && inward[(start + 2) % n]);
    }
    if (!consecutive) {
      report.add(v.id, "white vertex needs exactly three consecutive inward edges");
    }
  }
  if (!words_equal(vertex_reading(chart, v), BraidWord(chart.degree))) {
    report.add(v.id, "reading around the vertex is not trivial");
  }
}

}  // namespace

BraidWord vertex_reading(const Chart& chart, const ChartVertex& vertex) {
  std::vector<BraidLetter> letters;
  for (const auto& end : ends_at(chart, vertex.id)) {
    letters.push_back({chart.edges[end.edge].label, end.inward ? 1 : -1});
  }
  return BraidWord(chart.degree, std::move(letters));
}

ValidationReport validate_embedding(const Chart& chart) {
  ValidationReport report;
  const std::vector<Segment> segs = collect_segments(chart);
  std::set<std::pair<std::size_t, std::size_t>> reported;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    for (std::size_t j = i + 1; j < segs.size() && segs[j].min_x <= s.max_x; ++j) {
      const Segment& t = segs[j];
      if (t.min_y > s.max_y || t.max_y < s.min_y) {
        continue;
      }
      const SegmentContact contact = classify_segments(s.a, s.b, t.a, t.b);
      if (contact == SegmentContact::none) {
        continue;
      }
      if (contact == SegmentContact::touch && touch_allowed(chart, s, t)) {
        continue;
      }
      const auto key = std::minmax(s.edge, t.edge);
      if (reported.insert(key).second) {
        const std::string& a = chart.edges[key.first].id;
        const std::string& b = chart.edges[key.second].id;
        report.add(a, a == b ? "edge intersects itself" : "edge meets edge '" + b + "' away from a vertex");
      }
    }
  }
  return report;
}

ValidationReport validate_chart(const Chart& chart) {
  ValidationReport report;
  if (chart.degree < 1) {
    report.add("", "degree must be at least 1");
  }
  if (!(chart.rect.x0 < chart.rect.x1 && chart.rect.y0 < chart.rect.y1)) {
    report.add("", "domain rectangle is degenerate");
    return report;
  }
  std::map<std::string, const ChartVertex*> vertex_by_id;
  for (const auto& v : chart.vertices) {
    if (v.id.empty() || !vertex_by_id.emplace(v.id, &v).second) {
      report.add(v.id, "vertex id is empty or duplicated");
    }
  }
  std::set<std::string> edge_ids;
  std::map<std::string, std::size_t> valence;
  bool geometry_ok = true;
  for (const auto& e : chart.edges) {
    if (e.id.empty() || !edge_ids.insert(e.id).second) {
      report.add(e.id, "edge id is empty or duplicated");
    }
    if (e.label < 1 || e.label > chart.degree - 1) {
      report.add(e.id, "label " + std::to_string(e.label) + " out of range");
    }
    const auto& pts = e.polyline;
    if (pts.size() < 2) {
      report.add(e.id, "polyline needs at least two points");
      geometry_ok = false;
      continue;
    }
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      if (pts[k] == pts[k + 1]) {
        report.add(e.id, "polyline has a zero-length segment");
        geometry_ok = false;
        break;
      }
    }
    if (e.closed()) {
      if (pts.front() != pts.back() || pts.size() < 4) {
        report.add(e.id, "closed loop must return to its first point and have three corners");
        geometry_ok = false;
      }
    } else {
      for (int side = 0; side < 2; ++side) {
        const std::string& vid = (*e.ends)[side];
        const Point& p = side == 0 ? pts.front() : pts.back();
        auto it = vertex_by_id.find(vid);
        if (it == vertex_by_id.end()) {
          report.add(e.id, "unknown end vertex '" + vid + "'");
          geometry_ok = false;
          continue;
        }
        ++valence[vid];
        if (it->second->pos != p) {
          report.add(e.id, "polyline end does not sit on vertex '" + vid + "'");
          geometry_ok = false;
        }
      }
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const bool is_end = !e.closed() && (k == 0 || k + 1 == pts.size());
      bool boundary_end = false;
      if (is_end) {
        auto it = vertex_by_id.find((*e.ends)[k == 0 ? 0 : 1]);
        boundary_end = it != vertex_by_id.end() && it->second->kind == VertexKind::boundary;
      }
      if (boundary_end ? !chart.rect.contains(pts[k]) : !chart.rect.strictly_contains(pts[k])) {
        report.add(e.id, "polyline leaves the interior of the domain");
        break;
      }
    }
  }
  for (const auto& v : chart.vertices) {
    const std::size_t val = valence.count(v.id) ? valence[v.id] : 0;
    if (val != expected_valence(v.kind)) {
      report.add(v.id, to_string(v.kind) + " vertex has valence " + std::to_string(val) + ", expected " +
                           std::to_string(expected_valence(v.kind)));
      geometry_ok = false;
    }
    if (v.kind == VertexKind::boundary) {
      if (!chart.rect.on_boundary(v.pos)) {
        report.add(v.id, "boundary vertex must lie on the domain boundary");
      }
    } else if (!chart.rect.strictly_contains(v.pos)) {
      report.add(v.id, to_string(v.kind) + " vertex must lie in the interior");
    }
  }
  if (!geometry_ok) {
    return report;
  }
  ValidationReport embedding = validate_embedding(chart);
  report.merge(embedding);
  if (!embedding.ok()) {
    return report;
  }
  for (const auto& v : chart.vertices) {
    if (v.kind == VertexKind::crossing || v.kind == VertexKind::white) {
      check_local_structure(chart, v, ends_at(chart, v.id), report);
    }
  }
  return report;
}

}  // namespace curtains

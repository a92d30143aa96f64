#include "curtains/chart.hpp"

#include <algorithm>
#include <set>

#include "curtains/error.hpp"

namespace curtains {

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::black:
      return "black";
    case VertexKind::crossing:
      return "crossing";
    case VertexKind::white:
      return "white";
    case VertexKind::boundary:
      return "boundary";
  }
  return "black";
}

VertexKind parse_vertex_kind(const std::string& text) {
  if (text == "black") return VertexKind::black;
  if (text == "crossing") return VertexKind::crossing;
  if (text == "white") return VertexKind::white;
  if (text == "boundary") return VertexKind::boundary;
  throw ChartError("unknown vertex kind '" + text + "'");
}

const ChartVertex* Chart::find_vertex(const std::string& id) const {
  for (const auto& v : vertices) {
    if (v.id == id) {
      return &v;
    }
  }
  return nullptr;
}

const ChartEdge* Chart::find_edge(const std::string& id) const {
  for (const auto& e : edges) {
    if (e.id == id) {
      return &e;
    }
  }
  return nullptr;
}

std::vector<Point> Chart::black_vertices() const {
  std::vector<Point> out;
  for (const auto& v : vertices) {
    if (v.kind == VertexKind::black) {
      out.push_back(v.pos);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Chart::count(VertexKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [kind](const ChartVertex& v) { return v.kind == kind; }));
}

Rect standard_domain() { return Rect{Rational(-1), Rational(0), Rational(1), Rational(1)}; }

Chart empty_chart(int degree, const Rect& rect) {
  Chart c;
  c.degree = degree;
  c.rect = rect;
  return c;
}

std::vector<Point> oriented_polyline(const ChartEdge& edge) {
  std::vector<Point> pts = edge.polyline;
  if (edge.reversed) {
    std::reverse(pts.begin(), pts.end());
  }
  return pts;
}

namespace {

std::vector<Point> cyclic_simplify(std::vector<Point> ring) {
  // ring has no repeated closing point
  bool changed = true;
  while (changed && ring.size() > 3) {
    changed = false;
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const Point& prev = ring[(k + ring.size() - 1) % ring.size()];
      const Point& next = ring[(k + 1) % ring.size()];
      const Point& cur = ring[k];
      if (cur == prev || (orientation(prev, cur, next) == 0 && dot(cur - prev, next - cur) > 0)) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
    }
  }
  return ring;
}

std::string points_key(const std::vector<Point>& pts) {
  std::string out;
  for (const auto& p : pts) {
    out += to_string(p);
  }
  return out;
}

}  // namespace

std::string geometric_signature(const Chart& chart) {
  std::vector<std::string> items;
  for (const auto& v : chart.vertices) {
    items.push_back("V" + to_string(v.kind) + to_string(v.pos));
  }
  for (const auto& e : chart.edges) {
    std::vector<Point> pts = oriented_polyline(e);
    std::string key = "E" + std::to_string(e.label) + (e.closed() ? "c" : "o");
    if (e.closed()) {
      pts.pop_back();
      pts = cyclic_simplify(pts);
      auto first = std::min_element(pts.begin(), pts.end());
      std::rotate(pts.begin(), first, pts.end());
    } else {
      pts = simplify_polyline(pts, false);
    }
    items.push_back(key + points_key(pts));
  }
  std::sort(items.begin(), items.end());
  std::string out = "d" + std::to_string(chart.degree);
  for (const auto& item : items) {
    out += "|" + item;
  }
  return out;
}

bool geometrically_equal(const Chart& a, const Chart& b) {
  return a.degree == b.degree && geometric_signature(a) == geometric_signature(b);
}

Chart canonicalize(const Chart& chart) {
  Chart out = chart;
  for (auto& e : out.edges) {
    e.polyline = simplify_polyline(e.polyline, e.closed());
  }
  return out;
}

Chart merge_charts(const Chart& a, const Chart& b) {
  if (a.degree != b.degree) {
    throw ChartError("cannot merge charts of different degree");
  }
  std::set<std::string> ids;
  Chart out = a;
  for (const auto& v : a.vertices) ids.insert("v:" + v.id);
  for (const auto& e : a.edges) ids.insert("e:" + e.id);
  for (const auto& v : b.vertices) {
    if (!ids.insert("v:" + v.id).second) {
      throw ChartError("vertex id collision '" + v.id + "'");
    }
    out.vertices.push_back(v);
  }
  for (const auto& e : b.edges) {
    if (!ids.insert("e:" + e.id).second) {
      throw ChartError("edge id collision '" + e.id + "'");
    }
    out.edges.push_back(e);
  }
  return out;
}

ChartCoordinates coordinates_of(const Chart& chart) {
  ChartCoordinates c;
  for (const auto& v : chart.vertices) c.vertex_positions.push_back(v.pos);
  for (const auto& e : chart.edges) c.edge_polylines.push_back(e.polyline);
  return c;
}

Chart with_coordinates(const Chart& chart, const ChartCoordinates& coords) {
  if (coords.vertex_positions.size() != chart.vertices.size() ||
      coords.edge_polylines.size() != chart.edges.size()) {
    throw ChartError("coordinate assignment does not match the chart");
  }
  Chart out = chart;
  for (std::size_t k = 0; k < out.vertices.size(); ++k) {
    out.vertices[k].pos = coords.vertex_positions[k];
  }
  for (std::size_t k = 0; k < out.edges.size(); ++k) {
    if (coords.edge_polylines[k].size() != chart.edges[k].polyline.size()) {
      throw ChartError("polyline length mismatch on edge '" + chart.edges[k].id + "'");
    }
    out.edges[k].polyline = coords.edge_polylines[k];
  }
  return out;
}

ChartCoordinates interpolate(const ChartCoordinates& a, const ChartCoordinates& b, const Rational& s) {
  if (a.vertex_positions.size() != b.vertex_positions.size() ||
      a.edge_polylines.size() != b.edge_polylines.size()) {
    throw ChartError("keyframes have different shapes");
  }
  ChartCoordinates out;
  for (std::size_t k = 0; k < a.vertex_positions.size(); ++k) {
    out.vertex_positions.push_back(lerp(a.vertex_positions[k], b.vertex_positions[k], s));
  }
  for (std::size_t k = 0; k < a.edge_polylines.size(); ++k) {
    const auto& pa = a.edge_polylines[k];
    const auto& pb = b.edge_polylines[k];
    if (pa.size() != pb.size()) {
      throw ChartError("keyframes have different polyline lengths");
    }
    std::vector<Point> pts;
    pts.reserve(pa.size());
    for (std::size_t j = 0; j < pa.size(); ++j) {
      pts.push_back(lerp(pa[j], pb[j], s));
    }
    out.edge_polylines.push_back(std::move(pts));
  }
  return out;
}

bool same_combinatorics(const Chart& a, const Chart& b) {
  if (a.degree != b.degree || a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.vertices.size(); ++k) {
    if (a.vertices[k].id != b.vertices[k].id || a.vertices[k].kind != b.vertices[k].kind) {
      return false;
    }
  }
  for (std::size_t k = 0; k < a.edges.size(); ++k) {
    const auto& ea = a.edges[k];
    const auto& eb = b.edges[k];
    if (ea.id != eb.id || ea.label != eb.label || ea.reversed != eb.reversed || ea.ends != eb.ends ||
        ea.polyline.size() != eb.polyline.size()) {
      return false;
    }
  }
  return true;
}

std::vector<Chart> apply_keyframe_isotopy(const Chart& chart, const std::vector<ChartCoordinates>& keyframes) {
  std::vector<Chart> snapshots;
  const Rational half(1, 2);
  for (std::size_t k = 0; k < keyframes.size(); ++k) {
    Chart snap = with_coordinates(chart, keyframes[k]);
    for (std::size_t v = 0; v < chart.vertices.size(); ++v) {
      if (chart.vertices[v].kind == VertexKind::boundary && snap.vertices[v].pos != chart.vertices[v].pos) {
        throw ChartError("boundary vertex '" + chart.vertices[v].id + "' moves");
      }
    }
    ValidationReport report = validate_chart(snap);
    if (!report.ok()) {
      throw ChartError("keyframe " + std::to_string(k) + " invalid: " + report.to_string());
    }
    if (k > 0) {
      Chart mid = with_coordinates(chart, interpolate(keyframes[k - 1], keyframes[k], half));
      ValidationReport mid_report = validate_chart(mid);
      if (!mid_report.ok()) {
        throw ChartError("interpolation between keyframes " + std::to_string(k - 1) + " and " +
                         std::to_string(k) + " invalid: " + mid_report.to_string());
      }
    }
    snapshots.push_back(std::move(snap));
  }
  return snapshots;
}

}  // namespace curtains

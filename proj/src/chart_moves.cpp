#include <algorithm>
#include <map>
#include <set>

#include "curtains/chart.hpp"
#include "curtains/error.hpp"

namespace curtains {

namespace {

struct Marker {
  Point p;
  bool crossing;
};

struct BoundaryDatum {
  Point p;
  int label;
  bool inward;

  bool operator<(const BoundaryDatum& o) const { return p < o.p; }
  bool operator==(const BoundaryDatum& o) const { return p == o.p && label == o.label && inward == o.inward; }
};

// A piece of an edge, already oriented along the edge's orientation. A
// terminal is a vertex id, or empty for a junction on the disk boundary.
struct Piece {
  std::string source;  // edge id the piece came from
  int label;
  std::vector<Point> points;
  std::string from;
  std::string to;
};

bool on_polygon(const Point& p, const std::vector<Point>& poly) {
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (point_on_segment(p, poly[k], poly[(k + 1) % poly.size()])) {
      return true;
    }
  }
  return false;
}

std::vector<Point> checked_disk(const Chart& chart, std::vector<Point> disk) {
  const std::size_t n = disk.size();
  if (n < 3) {
    throw ChartError("disk polygon needs at least three corners");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!chart.rect.strictly_contains(disk[i])) {
      throw ChartError("disk polygon leaves the domain interior");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const SegmentContact c = classify_segments(disk[i], disk[(i + 1) % n], disk[j], disk[(j + 1) % n]);
      if (c == SegmentContact::none || (adjacent && c == SegmentContact::touch)) {
        continue;
      }
      throw ChartError("disk polygon is not simple");
    }
  }
  Rational area2 = 0;
  for (std::size_t k = 0; k < n; ++k) {
    area2 += cross(disk[k], disk[(k + 1) % n]);
  }
  if (area2 < 0) {
    std::reverse(disk.begin(), disk.end());
  }
  return disk;
}

// Polyline points interleaved with disk-boundary crossings, in polyline order.
std::vector<Marker> markers_along(const ChartEdge& edge, const std::vector<Point>& disk) {
  std::vector<Marker> out;
  const auto& pts = edge.polyline;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    out.push_back({pts[k], false});
    std::vector<std::pair<Rational, Point>> hits;
    for (std::size_t s = 0; s < disk.size(); ++s) {
      const Point& a = disk[s];
      const Point& b = disk[(s + 1) % disk.size()];
      const SegmentContact c = classify_segments(pts[k], pts[k + 1], a, b);
      if (c == SegmentContact::none) {
        continue;
      }
      if (c != SegmentContact::proper) {
        throw ChartError("edge '" + edge.id + "' is not transverse to the disk boundary");
      }
      const Rational t = crossing_parameter(pts[k], pts[k + 1], a, b);
      hits.emplace_back(t, lerp(pts[k], pts[k + 1], t));
    }
    std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& h : hits) {
      out.push_back({h.second, true});
    }
  }
  out.push_back({pts.back(), false});
  return out;
}

bool piece_inside(const std::vector<Point>& pts, const std::vector<Point>& disk) {
  const Point mid = lerp(pts[0], pts[1], Rational(1, 2));
  return locate_in_polygon(mid, disk) > 0;
}

Piece oriented_piece(const ChartEdge& edge, std::vector<Point> pts, std::string from, std::string to) {
  if (edge.reversed) {
    std::reverse(pts.begin(), pts.end());
    std::swap(from, to);
  }
  return Piece{edge.id, edge.label, std::move(pts), std::move(from), std::move(to)};
}

}  // namespace

Chart apply_disk_replacement(const Chart& chart, const std::vector<Point>& disk_in, const Chart& replacement) {
  if (replacement.degree != chart.degree) {
    throw ChartError("replacement degree does not match the chart");
  }
  const std::vector<Point> disk = checked_disk(chart, disk_in);

  std::set<std::string> dropped_vertices;
  for (const auto& v : chart.vertices) {
    if (on_polygon(v.pos, disk)) {
      throw ChartError("vertex '" + v.id + "' lies on the disk boundary");
    }
    if (locate_in_polygon(v.pos, disk) > 0) {
      if (v.kind == VertexKind::black || v.kind == VertexKind::boundary) {
        throw ChartError(to_string(v.kind) + " vertex '" + v.id + "' inside the disk");
      }
      dropped_vertices.insert(v.id);
    }
  }

  Chart result = empty_chart(chart.degree, chart.rect);
  for (const auto& v : chart.vertices) {
    if (!dropped_vertices.count(v.id)) {
      result.vertices.push_back(v);
    }
  }

  std::vector<BoundaryDatum> outer_data;
  std::vector<Piece> pieces;
  for (const auto& edge : chart.edges) {
    std::vector<Marker> marks = markers_along(edge, disk);
    const auto crossing_count = std::count_if(marks.begin(), marks.end(), [](const Marker& m) { return m.crossing; });
    if (crossing_count == 0) {
      std::vector<Point> probe = edge.polyline;
      if (!piece_inside(probe, disk)) {
        result.edges.push_back(edge);
      }
      continue;
    }
    std::string front_end, back_end;
    if (edge.closed()) {
      marks.pop_back();
      auto first = std::find_if(marks.begin(), marks.end(), [](const Marker& m) { return m.crossing; });
      std::rotate(marks.begin(), first, marks.end());
      marks.push_back(marks.front());
    } else {
      front_end = (*edge.ends)[0];
      back_end = (*edge.ends)[1];
    }
    std::vector<Point> current{marks.front().p};
    std::string current_from = marks.front().crossing ? std::string() : front_end;
    for (std::size_t k = 1; k < marks.size(); ++k) {
      current.push_back(marks[k].p);
      const bool last = k + 1 == marks.size();
      if (!marks[k].crossing && !last) {
        continue;
      }
      const std::string to = marks[k].crossing ? std::string() : back_end;
      const bool inside = piece_inside(current, disk);
      if (marks[k].crossing) {
        // direction of the polyline at this crossing: into the disk iff the
        // piece ending here lies outside
        const bool along_inward = !inside;
        outer_data.push_back({marks[k].p, edge.label, edge.reversed ? !along_inward : along_inward});
      }
      if (!inside) {
        pieces.push_back(oriented_piece(edge, current, current_from, to));
      }
      current = {marks[k].p};
      current_from = std::string();
    }
  }

  // replacement side
  std::map<std::string, std::string> renamed;
  std::set<std::string> taken;
  for (const auto& v : result.vertices) taken.insert("v:" + v.id);
  for (const auto& e : result.edges) taken.insert("e:" + e.id);
  auto fresh = [&taken](const std::string& kind, const std::string& base) {
    std::string id = base;
    for (int k = 1; !taken.insert(kind + id).second; ++k) {
      id = base + "." + std::to_string(k);
    }
    return id;
  };
  std::set<std::string> boundary_ids;
  std::vector<BoundaryDatum> inner_data;
  for (const auto& v : replacement.vertices) {
    if (v.kind == VertexKind::black) {
      throw ChartError("replacement contains a black vertex");
    }
    if (v.kind == VertexKind::boundary) {
      if (!on_polygon(v.pos, disk)) {
        throw ChartError("replacement boundary vertex '" + v.id + "' is off the disk boundary");
      }
      boundary_ids.insert(v.id);
      continue;
    }
    if (locate_in_polygon(v.pos, disk) <= 0) {
      throw ChartError("replacement vertex '" + v.id + "' is outside the disk");
    }
    renamed[v.id] = fresh("v:", "r." + v.id);
    result.vertices.push_back({renamed[v.id], v.kind, v.pos});
  }
  for (const auto& edge : replacement.edges) {
    for (std::size_t k = 0; k < edge.polyline.size(); ++k) {
      const bool end_point = !edge.closed() && (k == 0 || k + 1 == edge.polyline.size());
      const bool at_boundary = end_point && boundary_ids.count((*edge.ends)[k == 0 ? 0 : 1]);
      if (!at_boundary && locate_in_polygon(edge.polyline[k], disk) <= 0) {
        throw ChartError("replacement edge '" + edge.id + "' leaves the disk");
      }
    }
    if (edge.closed()) {
      ChartEdge copy = edge;
      copy.id = fresh("e:", "r." + edge.id);
      result.edges.push_back(copy);
      continue;
    }
    std::string from = (*edge.ends)[0];
    std::string to = (*edge.ends)[1];
    const bool front_boundary = boundary_ids.count(from) > 0;
    const bool back_boundary = boundary_ids.count(to) > 0;
    if (front_boundary) {
      inner_data.push_back({edge.polyline.front(), edge.label, !edge.reversed});
    }
    if (back_boundary) {
      inner_data.push_back({edge.polyline.back(), edge.label, edge.reversed});
    }
    auto resolve = [&](const std::string& id, bool boundary) -> std::string {
      if (boundary) return std::string();
      auto it = renamed.find(id);
      if (it == renamed.end()) throw ChartError("replacement edge '" + edge.id + "' has an unknown end");
      return it->second;
    };
    from = resolve(from, front_boundary);
    to = resolve(to, back_boundary);
    if (!front_boundary && !back_boundary) {
      ChartEdge copy = edge;
      copy.id = fresh("e:", "r." + edge.id);
      copy.ends = std::array<std::string, 2>{from, to};
      result.edges.push_back(copy);
      continue;
    }
    ChartEdge tagged = edge;
    tagged.id = "r." + edge.id;
    pieces.push_back(oriented_piece(tagged, edge.polyline, from, to));
  }

  std::sort(outer_data.begin(), outer_data.end());
  std::sort(inner_data.begin(), inner_data.end());
  if (outer_data != inner_data) {
    throw ChartError("boundary data of the replacement does not match the chart");
  }

  // glue pieces through the junction points
  std::map<Point, std::size_t> starting_at;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (pieces[k].from.empty()) {
      starting_at[pieces[k].points.front()] = k;
    }
  }
  std::vector<bool> used(pieces.size(), false);
  auto chain_from = [&](std::size_t start) {
    ChartEdge edge;
    edge.label = pieces[start].label;
    std::string name;
    std::size_t k = start;
    std::string first_end = pieces[start].from;
    while (true) {
      used[k] = true;
      const Piece& piece = pieces[k];
      if (name.empty() && piece.source.rfind("r.", 0) != 0) {
        name = piece.source;
      }
      auto first = piece.points.begin();
      if (!edge.polyline.empty()) {
        ++first;
      }
      edge.polyline.insert(edge.polyline.end(), first, piece.points.end());
      if (!piece.to.empty()) {
        edge.ends = std::array<std::string, 2>{first_end, piece.to};
        break;
      }
      const std::size_t next = starting_at.at(piece.points.back());
      if (used[next]) {
        break;  // closed up
      }
      k = next;
    }
    edge.id = fresh("e:", name.empty() ? pieces[start].source : name);
    return edge;
  };
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (!used[k] && !pieces[k].from.empty()) {
      result.edges.push_back(chain_from(k));
    }
  }
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (!used[k]) {
      result.edges.push_back(chain_from(k));
    }
  }

  const ValidationReport report = validate_chart(result);
  if (!report.ok()) {
    throw ChartError("replacement produces an invalid chart: " + report.to_string());
  }
  return result;
}

}  // namespace curtains

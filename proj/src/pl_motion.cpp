#include "curtains/pl_motion.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "curtains/error.hpp"

namespace curtains {

namespace {

Rational orient2(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a); }

// min over s in [0,1] of a quadratic through (0, o0), (1/2, oh), (1, o1) is > 0
bool stays_positive(const Rational& o0, const Rational& oh, const Rational& o1) {
  if (o0 <= 0 || o1 <= 0) {
    return false;
  }
  const Rational a = 2 * (o1 - 2 * oh + o0);
  const Rational b = o1 - o0 - a;
  if (a <= 0) {
    return true;  // concave or linear: minimum at an end
  }
  const Rational s = -b / (2 * a);
  if (s <= 0 || s >= 1) {
    return true;
  }
  return o0 - b * b / (4 * a) > 0;
}

std::optional<std::array<Rational, 3>> barycentric(const Point& a, const Point& b, const Point& c, const Point& p) {
  const Rational d = orient2(a, b, c);
  const Rational lb = orient2(a, p, c) / d;
  const Rational lc = orient2(a, b, p) / d;
  const Rational la = 1 - lb - lc;
  if (la < 0 || lb < 0 || lc < 0) {
    return std::nullopt;
  }
  return std::array<Rational, 3>{la, lb, lc};
}

std::vector<std::pair<std::size_t, std::size_t>> mesh_edges(const Triangulation& mesh) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      edges.insert(std::minmax(t[k], t[(k + 1) % 3]));
    }
  }
  return {edges.begin(), edges.end()};
}

Rational parameter_on(const Point& a, const Point& b, const Point& p) {
  return a.x != b.x ? (p.x - a.x) / (b.x - a.x) : (p.y - a.y) / (b.y - a.y);
}

}  // namespace

bool is_isotopy(const PLMotion& motion) {
  const auto& mesh = motion.mesh;
  if (motion.keyframes.empty() || motion.keyframes.front() != mesh.vertices) {
    return false;
  }
  std::map<std::pair<std::size_t, std::size_t>, int> uses;
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      ++uses[std::minmax(t[k], t[(k + 1) % 3])];
    }
  }
  for (const auto& [edge, count] : uses) {
    if (count == 1) {
      for (const auto& frame : motion.keyframes) {
        if (frame[edge.first] != mesh.vertices[edge.first] || frame[edge.second] != mesh.vertices[edge.second]) {
          return false;
        }
      }
    }
  }
  const Rational half(1, 2);
  for (std::size_t k = 0; k + 1 < motion.keyframes.size(); ++k) {
    const auto& f0 = motion.keyframes[k];
    const auto& f1 = motion.keyframes[k + 1];
    for (const auto& t : mesh.triangles) {
      const Rational o0 = orient2(f0[t[0]], f0[t[1]], f0[t[2]]);
      const Rational o1 = orient2(f1[t[0]], f1[t[1]], f1[t[2]]);
      const Rational oh = orient2(lerp(f0[t[0]], f1[t[0]], half), lerp(f0[t[1]], f1[t[1]], half),
                                  lerp(f0[t[2]], f1[t[2]], half));
      if (!stays_positive(o0, oh, o1)) {
        return false;
      }
    }
  }
  return true;
}

Point map_point(const PLMotion& motion, std::size_t keyframe, const Point& p) {
  const auto& rest = motion.mesh.vertices;
  const auto& frame = motion.keyframes.at(keyframe);
  auto outside_box = [&p](const Point& a, const Point& b, const Point& c) {
    return (p.x < a.x && p.x < b.x && p.x < c.x) || (p.x > a.x && p.x > b.x && p.x > c.x) ||
           (p.y < a.y && p.y < b.y && p.y < c.y) || (p.y > a.y && p.y > b.y && p.y > c.y);
  };
  for (const auto& t : motion.mesh.triangles) {
    if (outside_box(rest[t[0]], rest[t[1]], rest[t[2]])) {
      continue;
    }
    if (auto bary = barycentric(rest[t[0]], rest[t[1]], rest[t[2]], p)) {
      const auto& l = *bary;
      return Point(l[0] * frame[t[0]].x + l[1] * frame[t[1]].x + l[2] * frame[t[2]].x,
                   l[0] * frame[t[0]].y + l[1] * frame[t[1]].y + l[2] * frame[t[2]].y);
    }
  }
  return p;
}

PLMotion half_twist(const Point& center, const Rational& h, int direction) {
  if (direction != 1 && direction != -1) {
    throw GeometryError("twist direction must be +1 or -1");
  }
  const std::array<Rational, 3> sizes = {h * make_rational(7, 8), h, h * make_rational(9, 8)};
  const std::array<std::pair<int, int>, 4> corner_signs = {{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};
  auto corner = [&](int ring, int position) {
    const auto& s = corner_signs[static_cast<std::size_t>(((position % 4) + 4) % 4)];
    const Rational& a = sizes[static_cast<std::size_t>(ring)];
    return Point(center.x + s.first * a, center.y + s.second * a);
  };
  auto index = [](int ring, int j) { return static_cast<std::size_t>(1 + 4 * ring + ((j % 4) + 4) % 4); };

  PLMotion motion;
  auto& mesh = motion.mesh;
  mesh.vertices.push_back(center);
  for (int ring = 0; ring < 3; ++ring) {
    for (int j = 0; j < 4; ++j) {
      mesh.vertices.push_back(corner(ring, j));
    }
  }
  for (int j = 0; j < 4; ++j) {
    mesh.triangles.push_back({0, index(0, j), index(0, j + 1)});
  }
  for (int ring = 0; ring < 2; ++ring) {
    for (int j = 0; j < 4; ++j) {
      const std::size_t in0 = index(ring, j), in1 = index(ring, j + 1);
      const std::size_t out0 = index(ring + 1, j), out1 = index(ring + 1, j + 1);
      if (direction > 0) {
        mesh.triangles.push_back({in0, out0, out1});
        mesh.triangles.push_back({in0, out1, in1});
      } else {
        mesh.triangles.push_back({in0, out0, in1});
        mesh.triangles.push_back({in1, out0, out1});
      }
    }
  }
  // stage 1 turns rings 0 and 1 a quarter; stage 2 turns ring 0 another quarter
  const std::array<std::array<int, 3>, 3> steps = {{{0, 0, 0}, {1, 1, 0}, {2, 1, 0}}};
  for (const auto& step : steps) {
    std::vector<Point> frame{center};
    for (int ring = 0; ring < 3; ++ring) {
      for (int j = 0; j < 4; ++j) {
        frame.push_back(corner(ring, j + direction * step[static_cast<std::size_t>(ring)]));
      }
    }
    motion.keyframes.push_back(std::move(frame));
  }
  return motion;
}

Chart subdivide(const Chart& chart, const Triangulation& mesh) {
  const auto edges = mesh_edges(mesh);
  Chart out = chart;
  for (auto& e : out.edges) {
    std::vector<Point> pts{e.polyline.front()};
    for (std::size_t k = 0; k + 1 < e.polyline.size(); ++k) {
      const Point& a = e.polyline[k];
      const Point& b = e.polyline[k + 1];
      std::vector<Rational> cuts;
      for (const auto& [u, v] : edges) {
        const Point& p = mesh.vertices[u];
        const Point& q = mesh.vertices[v];
        const SegmentContact contact = classify_segments(a, b, p, q);
        if (contact == SegmentContact::proper) {
          cuts.push_back(crossing_parameter(a, b, p, q));
        } else if (contact != SegmentContact::none) {
          for (const Point* m : {&p, &q}) {
            if (point_on_segment(*m, a, b)) {
              cuts.push_back(parameter_on(a, b, *m));
            }
          }
        }
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (const auto& s : cuts) {
        if (s > 0 && s < 1) {
          pts.push_back(lerp(a, b, s));
        }
      }
      pts.push_back(b);
    }
    e.polyline = std::move(pts);
  }
  return out;
}

std::vector<Chart> move_chart(const Chart& chart, const PLMotion& motion) {
  const Chart base = subdivide(chart, motion.mesh);
  std::vector<Chart> frames;
  for (std::size_t k = 0; k < motion.keyframes.size(); ++k) {
    Chart frame = base;
    for (auto& v : frame.vertices) {
      v.pos = map_point(motion, k, v.pos);
    }
    for (auto& e : frame.edges) {
      for (auto& p : e.polyline) {
        p = map_point(motion, k, p);
      }
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace curtains

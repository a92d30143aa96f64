#pragma once

#include <random>
#include <string>
#include <vector>

#include "curtains/chart.hpp"
#include "curtains/geometry.hpp"
#include "support/generators.hpp"

namespace curtains::testing {

inline Rational R(long num, long den = 1) {
  return make_rational(num, den);
}

inline std::vector<Point> square(const Point& center, const Rational& half) {
  return {Point(center.x - half, center.y - half), Point(center.x + half, center.y - half),
          Point(center.x + half, center.y + half), Point(center.x - half, center.y + half)};
}

inline ChartEdge closed_square(const std::string& id, const Point& center, const Rational& half, int label,
                               bool reversed) {
  ChartEdge e;
  e.id = id;
  e.label = label;
  e.reversed = reversed;
  e.polyline = square(center, half);
  e.polyline.push_back(e.polyline.front());
  return e;
}

// Vertical edges between boundary vertices on the bottom and top sides;
// sign +1 orients an edge upward.
inline Chart parallel_edges_chart(int degree, const std::vector<int>& labels, const std::vector<int>& signs) {
  Chart chart = empty_chart(degree);
  const long n = static_cast<long>(labels.size());
  for (long k = 1; k <= n; ++k) {
    const Rational x = R(2 * k - n - 1, n + 1) + R(1, 4 * (n + 1));
    const std::string id = std::to_string(k);
    chart.vertices.push_back({"b" + id, VertexKind::boundary, Point(x, Rational(0))});
    chart.vertices.push_back({"t" + id, VertexKind::boundary, Point(x, Rational(1))});
    ChartEdge e;
    e.id = "e" + id;
    e.label = labels[static_cast<std::size_t>(k - 1)];
    e.reversed = signs[static_cast<std::size_t>(k - 1)] < 0;
    e.polyline = {Point(x, Rational(0)), Point(x, Rational(1))};
    e.ends = std::array<std::string, 2>{"b" + id, "t" + id};
    chart.edges.push_back(e);
  }
  return chart;
}

// Star of edges from `center_id` at (0, 1/2) to boundary vertices, listed
// counterclockwise; inward[k] orients edge k towards the center.
inline Chart star_chart(int degree, VertexKind kind, const std::vector<Point>& ends, const std::vector<int>& labels,
                        const std::vector<bool>& inward) {
  Chart chart = empty_chart(degree);
  const Point center(Rational(0), R(1, 2));
  chart.vertices.push_back({"w", kind, center});
  for (std::size_t k = 0; k < ends.size(); ++k) {
    const std::string id = std::to_string(k);
    chart.vertices.push_back({"b" + id, VertexKind::boundary, ends[k]});
    ChartEdge e;
    e.id = "e" + id;
    e.label = labels[k];
    e.reversed = inward[k];
    e.polyline = {center, ends[k]};
    e.ends = std::array<std::string, 2>{"w", "b" + id};
    chart.edges.push_back(e);
  }
  return chart;
}

inline Chart white_vertex_chart(const std::vector<bool>& inward) {
  const std::vector<Point> ends{Point(R(1), R(1, 2)),  Point(R(1, 2), R(1)),  Point(R(-1, 2), R(1)),
                                Point(R(-1), R(1, 2)), Point(R(-1, 2), R(0)), Point(R(1, 2), R(0))};
  return star_chart(3, VertexKind::white, ends, {1, 2, 1, 2, 1, 2}, inward);
}

// Label a passes right to left, label b passes upward.
inline Chart crossing_chart(int a, int b) {
  const std::vector<Point> ends{Point(R(1), R(1, 2)), Point(R(1, 4), R(1)), Point(R(-1), R(1, 2)),
                                Point(R(-1, 4), R(0))};
  return star_chart(5, VertexKind::crossing, ends, {a, b, a, b}, {true, false, false, true});
}

// Concentric closed loops inside `disk`, a square around its centroid.
inline Chart loop_chart(const Chart& like, const std::vector<Point>& disk, int label, bool reversed,
                        int count = 1) {
  Chart chart = empty_chart(like.degree, like.rect);
  const Point center((disk[0].x + disk[2].x) / 2, (disk[0].y + disk[2].y) / 2);
  const Rational half = (disk[2].x - disk[0].x) / 2;
  for (int k = 1; k <= count; ++k) {
    chart.edges.push_back(closed_square("ins" + std::to_string(k), center, half * R(k, count + 1), label, reversed));
  }
  return chart;
}

// Loop from the basepoint of [-1,1] x [0,1] around the left black vertex
// of a nest with m loops, counterclockwise.
inline PLPath loop_around_left_end(const NestPlacement& placement, int m) {
  const Rational delta = placement.radius / (4 * std::max(m, 1));
  const Rational xl = placement.center.x - placement.half_length;
  const Rational cy = placement.center.y;
  const Rational top = 1 - R(1, 64);
  PLPath p;
  p.closed = true;
  p.points = {Point(R(0), R(1)),           Point(R(0), top),
              Point(xl + delta, top),      Point(xl + delta, cy + delta),
              Point(xl - delta, cy + delta), Point(xl - delta, cy - delta),
              Point(xl + delta, cy - delta), Point(xl + delta, cy + delta),
              Point(xl + delta, top),      Point(R(0), top),
              Point(R(0), R(1))};
  return p;
}

struct Replacement {
  Chart before;
  Chart after;
  std::vector<Point> disk;
};

// A random ribbon chart and a random insertion or removal of trivial loops
// in an empty disk beside the nests.
inline Replacement random_replacement(std::mt19937& rng) {
  const int degree = 2 + static_cast<int>(rng() % 3);
  const int n = 1 + static_cast<int>(rng() % 3);
  std::vector<BandGeneratorForm> forms;
  for (int k = 0; k < n; ++k) {
    forms.push_back(random_band_form(rng, degree, 3));
  }
  const Chart ribbon = build_ribbon_chart(forms, degree);
  const long side = rng() % 2 ? 1 : -1;
  const Point center(R(side * static_cast<long>(14 + rng() % 4), 20), R(static_cast<long>(2 + rng() % 17), 20));
  const auto disk = square(center, R(1, 20));
  const int label = 1 + static_cast<int>(rng() % static_cast<unsigned>(degree - 1));
  const Chart loops = loop_chart(ribbon, disk, label, rng() % 2, 1 + static_cast<int>(rng() % 3));
  const Chart with_loops = apply_disk_replacement(ribbon, disk, loops);
  if (rng() % 2) {
    return {ribbon, with_loops, disk};
  }
  return {with_loops, apply_disk_replacement(with_loops, disk, empty_chart(degree, ribbon.rect)), disk};
}

}  // namespace curtains::testing

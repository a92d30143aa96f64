#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curtains {

// Exact rational scalar for all planar geometry.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
// Parses "p" or "p/q" (arbitrary precision).
Rational parse_rational(const std::string& text);
double to_double(const Rational& value);

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

  bool operator==(const Point& rhs) const { return x == rhs.x && y == rhs.y; }
  bool operator!=(const Point& rhs) const { return !(*this == rhs); }
  bool operator<(const Point& rhs) const { return x < rhs.x || (x == rhs.x && y < rhs.y); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);
Point lerp(const Point& a, const Point& b, const Rational& s);
Rational cross(const Point& a, const Point& b);
Rational dot(const Point& a, const Point& b);
// Sign of cross(b - a, c - a): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);
Rational linf_distance(const Point& a, const Point& b);

// Total order on nonzero direction vectors by angle in [0, 2pi).
bool angle_less(const Point& u, const Point& v);

struct Rect {
  Rational x0, y0, x1, y1;

  bool contains(const Point& p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
  bool strictly_contains(const Point& p) const {
    return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1;
  }
  bool on_boundary(const Point& p) const { return contains(p) && !strictly_contains(p); }
  Point top_midpoint() const { return Point((x0 + x1) / 2, y1); }
  bool operator==(const Rect& rhs) const { return x0 == rhs.x0 && y0 == rhs.y0 && x1 == rhs.x1 && y1 == rhs.y1; }
};

enum class SegmentContact {
  none,
  proper,   // single crossing interior to both segments
  touch,    // single common point that is an endpoint of at least one
  overlap,  // collinear with a common sub-segment of positive length
};

SegmentContact classify_segments(const Point& a, const Point& b, const Point& c, const Point& d);
// Parameter s in (0,1) along ab of the crossing with cd; requires a proper or
// touch contact that is not collinear.
Rational crossing_parameter(const Point& a, const Point& b, const Point& c, const Point& d);
bool point_on_segment(const Point& p, const Point& a, const Point& b);

// A PL path: open polyline or closed loop (first == last point).
struct PLPath {
  std::vector<Point> points;
  bool closed = false;

  bool operator==(const PLPath& rhs) const = default;
};

PLPath reversed(const PLPath& path);
// Joins two loops based at the same point.
PLPath concatenate(const PLPath& first, const PLPath& second);

// Point-in-polygon for a simple polygon given by its vertices (no repeat).
// Returns +1 inside, 0 on boundary, -1 outside.
int locate_in_polygon(const Point& p, const std::vector<Point>& polygon);

// Drops interior vertices that are collinear with and between their
// neighbours. Closed polylines keep their first point.
std::vector<Point> simplify_polyline(const std::vector<Point>& points, bool closed);

std::string to_string(const Point& p);

}  // namespace curtains

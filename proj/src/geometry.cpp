#include "curtains/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "curtains/error.hpp"

namespace curtains {

Rational make_rational(long num, long den) {
  if (den == 0) {
    throw GeometryError("zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw GeometryError("malformed rational '" + text + "'");
  }
  if (r.get_den() == 0) {
    throw GeometryError("zero denominator in '" + text + "'");
  }
  r.canonicalize();
  return r;
}

double to_double(const Rational& value) { return value.get_d(); }

Point operator+(const Point& a, const Point& b) { return Point(a.x + b.x, a.y + b.y); }
Point operator-(const Point& a, const Point& b) { return Point(a.x - b.x, a.y - b.y); }
Point operator*(const Rational& s, const Point& p) { return Point(s * p.x, s * p.y); }

Point lerp(const Point& a, const Point& b, const Rational& s) {
  return Point(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y));
}

namespace {

int cmp_sign(const Rational& u, const Rational& v) {
  const int c = cmp(u, v);
  return (c > 0) - (c < 0);
}

}  // namespace

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

int orientation(const Point& a, const Point& b, const Point& c) {
  // Axis-parallel ab needs comparisons only.
  if (a.y == b.y) {
    return cmp_sign(b.x, a.x) * cmp_sign(c.y, a.y);
  }
  if (a.x == b.x) {
    return -cmp_sign(b.y, a.y) * cmp_sign(c.x, a.x);
  }
  // Floating-point filter; the exact computation settles near-degenerate cases.
  const double ax = a.x.get_d(), ay = a.y.get_d();
  const double fx1 = b.x.get_d() - ax, fy1 = b.y.get_d() - ay;
  const double fx2 = c.x.get_d() - ax, fy2 = c.y.get_d() - ay;
  const double det = fx1 * fy2 - fy1 * fx2;
  const double scale = std::max({std::abs(ax), std::abs(ay), std::abs(fx1), std::abs(fy1), std::abs(fx2),
                                 std::abs(fy2), 1.0});
  if (std::abs(det) > 1e-12 * scale * scale) {
    return det > 0 ? 1 : -1;
  }
  thread_local Rational dx1, dy1, dx2, dy2, lhs, rhs;
  mpq_sub(dx1.get_mpq_t(), b.x.get_mpq_t(), a.x.get_mpq_t());
  mpq_sub(dy1.get_mpq_t(), b.y.get_mpq_t(), a.y.get_mpq_t());
  mpq_sub(dx2.get_mpq_t(), c.x.get_mpq_t(), a.x.get_mpq_t());
  mpq_sub(dy2.get_mpq_t(), c.y.get_mpq_t(), a.y.get_mpq_t());
  mpq_mul(lhs.get_mpq_t(), dx1.get_mpq_t(), dy2.get_mpq_t());
  mpq_mul(rhs.get_mpq_t(), dy1.get_mpq_t(), dx2.get_mpq_t());
  return mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t()) > 0 ? 1 : (mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t()) < 0 ? -1 : 0);
}

Rational linf_distance(const Point& a, const Point& b) {
  Rational dx = abs(a.x - b.x);
  Rational dy = abs(a.y - b.y);
  return dx > dy ? dx : dy;
}

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi)
int half_plane(const Point& u) { return (u.y > 0 || (u.y == 0 && u.x > 0)) ? 0 : 1; }

bool in_box(const Point& p, const Point& a, const Point& b) {
  return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) && p.y >= std::min(a.y, b.y) &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool angle_less(const Point& u, const Point& v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) {
    return hu < hv;
  }
  return sgn(cross(u, v)) > 0;
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  return orientation(a, b, p) == 0 && in_box(p, a, b);
}

SegmentContact classify_segments(const Point& a, const Point& b, const Point& c, const Point& d) {
  // bounding boxes first
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) {
    return SegmentContact::none;
  }
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 == 0 && o2 == 0) {
    // collinear: project onto the dominant axis
    const bool use_x = a.x != b.x || c.x != d.x;
    auto key = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    Rational lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    Rational lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) {
      return SegmentContact::none;
    }
    if (lo == hi) {
      return SegmentContact::touch;
    }
    return SegmentContact::overlap;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    return SegmentContact::proper;
  }
  if ((o1 == 0 && in_box(c, a, b)) || (o2 == 0 && in_box(d, a, b)) || (o3 == 0 && in_box(a, c, d)) ||
      (o4 == 0 && in_box(b, c, d))) {
    return SegmentContact::touch;
  }
  return SegmentContact::none;
}

Rational crossing_parameter(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point r = b - a;
  const Point s = d - c;
  const Rational denom = cross(r, s);
  if (denom == 0) {
    throw GeometryError("crossing parameter of parallel segments");
  }
  return cross(c - a, s) / denom;
}

PLPath reversed(const PLPath& path) {
  PLPath out = path;
  std::reverse(out.points.begin(), out.points.end());
  return out;
}

PLPath concatenate(const PLPath& first, const PLPath& second) {
  if (first.points.empty()) {
    return second;
  }
  if (second.points.empty()) {
    return first;
  }
  if (first.points.back() != second.points.front()) {
    throw GeometryError("concatenated paths do not share an endpoint");
  }
  PLPath out = first;
  out.points.insert(out.points.end(), second.points.begin() + 1, second.points.end());
  out.closed = out.points.front() == out.points.back();
  return out;
}

int locate_in_polygon(const Point& p, const std::vector<Point>& polygon) {
  const std::size_t n = polygon.size();
  bool inside = false;
  for (std::size_t k = 0; k < n; ++k) {
    const Point& a = polygon[k];
    const Point& b = polygon[(k + 1) % n];
    if (point_on_segment(p, a, b)) {
      return 0;
    }
    // half-open crossing rule on the upward ray
    if ((a.y > p.y) != (b.y > p.y)) {
      const int o = orientation(a, b, p);
      if ((b.y > a.y && o > 0) || (b.y < a.y && o < 0)) {
        inside = !inside;
      }
    }
  }
  return inside ? 1 : -1;
}

std::vector<Point> simplify_polyline(const std::vector<Point>& points, bool closed) {
  if (points.size() < 3) {
    return points;
  }
  std::vector<Point> out;
  out.reserve(points.size());
  out.push_back(points.front());
  for (std::size_t k = 1; k + 1 < points.size(); ++k) {
    const Point& prev = out.back();
    const Point& cur = points[k];
    const Point& next = points[k + 1];
    if (cur == prev) {
      continue;
    }
    const bool straight = orientation(prev, cur, next) == 0 && dot(cur - prev, next - cur) > 0;
    if (!straight) {
      out.push_back(cur);
    }
  }
  out.push_back(points.back());
  (void)closed;
  return out;
}

std::string to_string(const Point& p) { return "(" + p.x.get_str() + ", " + p.y.get_str() + ")"; }

}  // namespace curtains

#pragma once

#include <array>
#include <vector>

#include "curtains/chart.hpp"
#include "curtains/geometry.hpp"

namespace curtains {

struct Triangulation {
  std::vector<Point> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;  // counterclockwise
};

// A piecewise-linear motion of the plane: mesh vertices move linearly between
// keyframes, points inside a triangle keep their barycentric coordinates and
// everything outside the mesh stays put. keyframes[0] is the rest position.
struct PLMotion {
  Triangulation mesh;
  std::vector<std::vector<Point>> keyframes;
};

// True iff the outer boundary of the mesh never moves and every triangle
// stays positively oriented at every time of every linear stage (checked
// exactly). Such a motion is an ambient isotopy supported in the mesh.
bool is_isotopy(const PLMotion& motion);

Point map_point(const PLMotion& motion, std::size_t keyframe, const Point& p);

// Half twist exchanging center +- (0, h/2) inside a square of half size 9h/8.
// direction +1 turns counterclockwise, -1 clockwise. Three keyframes.
PLMotion half_twist(const Point& center, const Rational& h, int direction);

// Splits chart polylines wherever they meet a mesh edge, so that each
// piece stays inside one mesh triangle.
Chart subdivide(const Chart& chart, const Triangulation& mesh);

// One chart per keyframe, all with identical combinatorics.
std::vector<Chart> move_chart(const Chart& chart, const PLMotion& motion);

}  // namespace curtains

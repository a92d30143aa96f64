#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curtains/braid.hpp"
#include "curtains/geometry.hpp"
#include "curtains/validation.hpp"

namespace curtains {

enum class VertexKind { black, crossing, white, boundary };

std::string to_string(VertexKind kind);
VertexKind parse_vertex_kind(const std::string& text);

struct ChartVertex {
  std::string id;
  VertexKind kind = VertexKind::black;
  Point pos;

  bool operator==(const ChartVertex&) const = default;
};

// An oriented labeled edge. The orientation runs along the polyline unless
// `reversed` is set. `ends` holds the vertex ids at polyline front and back;
// closed loops have no ends and repeat their first point at the back.
struct ChartEdge {
  std::string id;
  int label = 1;
  bool reversed = false;
  std::vector<Point> polyline;
  std::optional<std::array<std::string, 2>> ends;

  bool closed() const { return !ends.has_value(); }
  bool operator==(const ChartEdge&) const = default;
};

struct Chart {
  int degree = 2;
  Rect rect;
  std::vector<ChartVertex> vertices;
  std::vector<ChartEdge> edges;

  // q0*: midpoint of the top side of the domain.
  Point basepoint() const { return rect.top_midpoint(); }
  const ChartVertex* find_vertex(const std::string& id) const;
  const ChartEdge* find_edge(const std::string& id) const;
  std::vector<Point> black_vertices() const;
  std::size_t count(VertexKind kind) const;

  bool operator==(const Chart&) const = default;
};

// [-1,1] x [0,1], the domain used throughout.
Rect standard_domain();
Chart empty_chart(int degree, const Rect& rect = standard_domain());

// Direction in which the edge is oriented, segment by segment.
std::vector<Point> oriented_polyline(const ChartEdge& edge);

// Order-insensitive geometric fingerprint: equal iff the charts have the
// same vertices (kind, position) and the same oriented labeled point sets for
// their edges, ignoring ids and redundant collinear polyline points.
std::string geometric_signature(const Chart& chart);
bool geometrically_equal(const Chart& a, const Chart& b);
// Drops redundant collinear polyline points on every edge.
Chart canonicalize(const Chart& chart);

// Disjoint union; ids must not collide. Throws ChartError.
Chart merge_charts(const Chart& a, const Chart& b);

// ---- validation ------------------------------------------------------------

// Word read counterclockwise around a small circle about the vertex: s_label
// for an end oriented into the vertex, s_label^-1 for one oriented out.
BraidWord vertex_reading(const Chart& chart, const ChartVertex& vertex);

ValidationReport validate_chart(const Chart& chart);
// Only the embeddedness part (pairwise edge disjointness).
ValidationReport validate_embedding(const Chart& chart);

// ---- reading paths ---------------------------------------------------------

// Crossing sign: +1 when (path tangent, edge direction) is a positive frame.
// Non-transverse paths are perturbed (interior points only) up to three
// times; a path through a black vertex is rejected outright.
BraidWord intersection_word(const Chart& chart, const PLPath& path);
// The loop must be closed and based at q0*.
BraidWord loop_monodromy(const Chart& chart, const PLPath& loop);

// Hurwitz meridian system for a set of punctures. Punctures left of the
// vertical midline get x-meridians, the others y-meridians; each side is
// indexed by increasing height. Each loop runs from q0* along an arc that
// leaves through a channel outside that side's punctures, circles the
// puncture counterclockwise and returns along the same arc.
struct MeridianSystem {
  std::vector<Point> left;   // sorted by height
  std::vector<Point> right;  // sorted by height
  std::vector<PLPath> x;
  std::vector<PLPath> y;

  // (x_1, ..., x_p, y_q, ..., y_1)
  std::vector<PLPath> ordered() const;
};

// `clearance` charts bound the size of the small circles: each circle may
// only meet the edge incident to its puncture, once.
MeridianSystem hurwitz_meridians(const std::vector<Point>& punctures, const Rect& rect,
                                 const std::vector<const Chart*>& clearance = {});

// ---- synthesis -------------------------------------------------------------

// Free edge from center - (half_length, 0) to center + (half_length, 0),
// surrounded by one rectangular loop per conjugator letter at margins
// radius * j / |w|; the outermost loop carries the first letter.
struct NestPlacement {
  Point center;
  Rational half_length;
  Rational radius;
};

Chart build_oval_nest(const NestPlacement& placement, const BandGeneratorForm& form,
                      const std::string& id_prefix = "", const Rect& rect = standard_domain());

// Nest i centered at (0, i/(n+1)) with half length 1/2 and radius 1/(4(n+1)).
std::vector<NestPlacement> ribbon_layout(std::size_t n);
Chart build_ribbon_chart(const std::vector<NestPlacement>& placements,
                         const std::vector<BandGeneratorForm>& forms, int degree);
Chart build_ribbon_chart(const std::vector<BandGeneratorForm>& forms, int degree);

// ---- moves -----------------------------------------------------------------

// Replaces the part of `chart` inside the simple polygon `disk` by
// `replacement`, whose boundary-kind vertices must sit exactly where the
// chart crosses the disk boundary with matching labels and orientations.
Chart apply_disk_replacement(const Chart& chart, const std::vector<Point>& disk,
                             const Chart& replacement);

// Coordinates for every vertex and every edge polyline, parallel to the
// chart's vertex and edge lists.
struct ChartCoordinates {
  std::vector<Point> vertex_positions;
  std::vector<std::vector<Point>> edge_polylines;

  bool operator==(const ChartCoordinates&) const = default;
};

ChartCoordinates coordinates_of(const Chart& chart);
Chart with_coordinates(const Chart& chart, const ChartCoordinates& coords);
// Pointwise linear interpolation between two coordinate assignments.
ChartCoordinates interpolate(const ChartCoordinates& a, const ChartCoordinates& b, const Rational& s);
bool same_combinatorics(const Chart& a, const Chart& b);

// Returns one snapshot per keyframe after checking every keyframe and every
// interpolation midpoint. Throws ChartError on failure.
std::vector<Chart> apply_keyframe_isotopy(const Chart& chart,
                                          const std::vector<ChartCoordinates>& keyframes);

}  // namespace curtains

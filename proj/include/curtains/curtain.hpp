#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curtains/braid.hpp"
#include "curtains/chart.hpp"
#include "curtains/geometry.hpp"
#include "curtains/validation.hpp"

namespace curtains {

enum class EventKind { disk_replacement, insert_free_edges, delete_free_edges, certified_transition };

std::string to_string(EventKind kind);
EventKind parse_event_kind(const std::string& text);

// A free edge together with its two black end vertices.
struct FreeEdge {
  std::vector<Point> polyline;
  int label = 1;
  bool reversed = false;

  bool operator==(const FreeEdge&) const = default;
};

struct DiskReplacement {
  std::vector<Point> disk;
  Chart replacement;

  bool operator==(const DiskReplacement&) const = default;
};

// Two charts with the same black vertices whose monodromy agrees on a
// meridian generating system. Words are recorded as read.
struct TransitionCertificate {
  Chart before;
  Chart after;
  std::vector<PLPath> meridians;
  std::vector<BraidWord> before_words;
  std::vector<BraidWord> after_words;

  bool operator==(const TransitionCertificate&) const = default;
};

struct CurtainEvent {
  Rational t;
  EventKind kind = EventKind::disk_replacement;
  std::optional<DiskReplacement> replacement;     // disk_replacement
  std::vector<FreeEdge> free_edges;               // insert / delete
  std::optional<TransitionCertificate> certificate;  // certified_transition

  bool operator==(const CurtainEvent&) const = default;
};

// Keyframes sit at uniform parameters across [t0, t1]; one keyframe means a
// static segment.
struct CurtainSegment {
  Rational t0;
  Rational t1;
  std::vector<Chart> keyframes;

  bool operator==(const CurtainSegment&) const = default;
};

struct Curtain {
  int degree = 2;
  Rational t_start;
  Rational t_end;
  std::vector<CurtainSegment> segments;
  std::vector<CurtainEvent> events;

  bool operator==(const Curtain&) const = default;
};

struct CurtainOptions {
  bool reject_certified = false;
};

ValidationReport validate_curtain(const Curtain& curtain, const CurtainOptions& options = {});

bool is_event_time(const Curtain& curtain, const Rational& t);
// Throws CurtainError at event times and outside the time range.
Chart slice_at(const Curtain& curtain, const Rational& t);

Chart add_free_edges(const Chart& chart, const std::vector<FreeEdge>& edges, const std::string& id_prefix);
std::vector<FreeEdge> free_edges_of(const Chart& chart);
// Removes the free edges that match the given ones geometrically.
Chart remove_free_edges(const Chart& chart, const std::vector<FreeEdge>& edges);

// Throws TransitionError when black vertex sets differ or when the two
// monodromy tuples differ at some index.
TransitionCertificate certify_transition(const Chart& before, const Chart& after,
                                         const std::vector<PLPath>& meridians);
// Meridians of the common black vertices, in Hurwitz order.
std::vector<PLPath> transition_meridians(const Chart& before, const Chart& after);
// Re-reads the words and checks them; empty string when sound.
std::string certificate_problem(const TransitionCertificate& certificate);

struct Point3 {
  Rational x;
  Rational y;
  Rational t;

  bool operator==(const Point3&) const = default;
};

struct InternalBoundary {
  std::vector<std::vector<Point3>> curves;  // closed curves repeat their first point
  std::size_t open_arcs = 0;
  std::size_t minima = 0;  // one per inserted free edge
  std::size_t maxima = 0;  // one per deleted free edge
  // Present when the curtain is in braid position: the braid traced by the
  // right-hand black vertices over [0, 1/2], read from t = 1/2 downward.
  std::optional<BraidWord> braid;
  std::string braid_problem;  // why no braid was extracted

  std::size_t components() const { return curves.size(); }
};

InternalBoundary internal_boundary(const Curtain& curtain);

// Reference level: the latest static segment whose black vertices come in mirror
// pairs (-a, y), (a, y). Returns the words of the x-meridians there.
std::vector<BraidWord> meridian_monodromy(const Curtain& curtain);
// Time of that reference level.
Rational meridian_reference_time(const Curtain& curtain);

}  // namespace curtains

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "curtains/curtain.hpp"
#include "curtains/error.hpp"

namespace curtains {

namespace {

struct Arc {
  std::vector<Point3> points;
  // linked node for each end: (arc index, end 0 = start / 1 = finish), plus
  // the slice path joining them for caps
  std::optional<std::pair<std::size_t, int>> link[2];
  std::vector<Point> cap[2];
};

Rational keyframe_time(const CurtainSegment& seg, std::size_t j) {
  if (seg.keyframes.size() == 1) {
    return j == 0 ? seg.t0 : seg.t1;
  }
  return seg.t0 + (seg.t1 - seg.t0) * Rational(static_cast<long>(j)) / static_cast<long>(seg.keyframes.size() - 1);
}

std::vector<std::size_t> black_indices(const Chart& chart) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < chart.vertices.size(); ++v) {
    if (chart.vertices[v].kind == VertexKind::black) {
      out.push_back(v);
    }
  }
  return out;
}

void connect(std::vector<Arc>& arcs, std::pair<std::size_t, int> a, std::pair<std::size_t, int> b,
             const std::vector<Point>& cap = {}) {
  arcs[a.first].link[a.second] = b;
  arcs[b.first].link[b.second] = a;
  arcs[a.first].cap[a.second] = cap;
  std::vector<Point> back(cap.rbegin(), cap.rend());
  arcs[b.first].cap[b.second] = back;
}

// ---- braid position -------------------------------------------------------

struct Strand {
  Point pos;
};

bool within(const CurtainSegment& seg, const Rational& lo, const Rational& hi) {
  return lo <= seg.t0 && seg.t1 <= hi;
}

std::set<Point> black_set(const Chart& chart) {
  auto b = chart.black_vertices();
  return {b.begin(), b.end()};
}

std::optional<BraidWord> extract_braid(const Curtain& cu, std::string& problem) {
  const Rational one(1), half(1, 2), zero(0);
  const CurtainEvent* insert = nullptr;
  const CurtainEvent* remove = nullptr;
  for (const auto& e : cu.events) {
    if (e.kind == EventKind::insert_free_edges) {
      if (insert || e.t != -one) {
        problem = "free edges must be inserted once, at t = -1";
        return std::nullopt;
      }
      insert = &e;
    } else if (e.kind == EventKind::delete_free_edges) {
      if (remove || e.t != one) {
        problem = "free edges must be deleted once, at t = 1";
        return std::nullopt;
      }
      remove = &e;
    }
  }
  if (!insert || !remove) {
    problem = "no free-edge insertion at t = -1 and deletion at t = 1";
    return std::nullopt;
  }
  auto straight_pairs = [&](const std::vector<FreeEdge>& edges, std::set<Point>& out) {
    for (const auto& fe : edges) {
      const auto pts = simplify_polyline(fe.polyline, false);
      if (pts.size() != 2 || pts.front().y != pts.back().y ||
          std::min(pts.front().x, pts.back().x) != -half || std::max(pts.front().x, pts.back().x) != half) {
        return false;
      }
      out.insert(pts.front());
      out.insert(pts.back());
    }
    return true;
  };
  std::set<Point> q_set, q_set_end;
  if (!straight_pairs(insert->free_edges, q_set) || !straight_pairs(remove->free_edges, q_set_end) ||
      q_set != q_set_end || q_set.size() != 2 * insert->free_edges.size()) {
    problem = "inserted and deleted free edges are not the segments between (-1/2, q_i) and (1/2, q_i)";
    return std::nullopt;
  }
  std::set<Point> q_left, q_right;
  for (const auto& p : q_set) {
    (p.x < 0 ? q_left : q_right).insert(p);
  }
  const std::size_t n = q_left.size();

  const std::vector<Rational> marks = {-one, -half, zero, half, one};
  std::vector<const CurtainSegment*> drag;
  for (const auto& seg : cu.segments) {
    for (const auto& m : marks) {
      if (seg.t0 < m && m < seg.t1) {
        problem = "a segment straddles t = " + m.get_str();
        return std::nullopt;
      }
    }
    for (const auto& frame : seg.keyframes) {
      const std::set<Point> blacks = black_set(frame);
      if (seg.t1 <= -one || seg.t0 >= one) {
        if (!blacks.empty()) {
          problem = "black vertices outside |t| <= 1";
          return std::nullopt;
        }
      } else if (!within(seg, zero, half)) {
        if (blacks != q_set) {
          problem = "black vertices leave the points (+-1/2, q_i) outside the drag band";
          return std::nullopt;
        }
      } else {
        std::size_t right = 0;
        for (const auto& p : blacks) {
          if (p.x < 0 && !q_left.count(p)) {
            problem = "left black vertices move during the drag";
            return std::nullopt;
          }
          right += p.x > 0 ? 1 : 0;
        }
        if (right != n || blacks.size() != 2 * n) {
          problem = "right black vertices leave the right half during the drag";
          return std::nullopt;
        }
      }
    }
    if (within(seg, zero, half)) {
      drag.push_back(&seg);
    }
  }

  // strands in reading order: from t = 1/2 down to t = 0
  std::vector<Point> current(q_right.begin(), q_right.end());
  std::vector<BraidLetter> letters;
  auto order_of = [](const std::vector<Point>& pos) {
    std::vector<std::size_t> idx(pos.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&pos](std::size_t a, std::size_t b) { return pos[a].y < pos[b].y; });
    return idx;
  };
  std::vector<std::size_t> order = order_of(current);
  for (auto it = drag.rbegin(); it != drag.rend(); ++it) {
    const CurtainSegment& seg = **it;
    const std::size_t kf = seg.keyframes.size();
    // strand k follows vertex map[k] of this segment
    std::vector<std::size_t> map(n);
    const Chart& top = seg.keyframes.back();
    for (std::size_t k = 0; k < n; ++k) {
      bool found = false;
      for (std::size_t v : black_indices(top)) {
        if (top.vertices[v].pos == current[k]) {
          map[k] = v;
          found = true;
        }
      }
      if (!found) {
        problem = "right traces are discontinuous";
        return std::nullopt;
      }
    }
    for (std::size_t j = kf; j-- > 1;) {
      const Chart& from = seg.keyframes[j];
      const Chart& to = seg.keyframes[j - 1];
      std::vector<Point> a(n), b(n);
      for (std::size_t k = 0; k < n; ++k) {
        a[k] = from.vertices[map[k]].pos;
        b[k] = to.vertices[map[k]].pos;
      }
      // critical parameters where some pair ties in height
      std::set<Rational> crit{Rational(0), Rational(1)};
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t r = p + 1; r < n; ++r) {
          const Rational d0 = a[p].y - a[r].y;
          const Rational d1 = b[p].y - b[r].y;
          if (d0 == 0 && d1 == 0) {
            problem = "two right strands share a height over a whole stage";
            return std::nullopt;
          }
          if (d0 != d1) {
            const Rational u = d0 / (d0 - d1);
            if (u >= 0 && u <= 1) crit.insert(u);
          }
        }
      }
      std::vector<Rational> cs(crit.begin(), crit.end());
      for (std::size_t c = 0; c + 1 < cs.size(); ++c) {
        const Rational sample = (cs[c] + cs[c + 1]) / 2;
        std::vector<Point> pos(n);
        for (std::size_t k = 0; k < n; ++k) pos[k] = lerp(a[k], b[k], sample);
        const std::vector<std::size_t> next = order_of(pos);
        // the moment between the previous sample and this one
        const Rational moment = cs[c];
        std::vector<Point> at(n);
        for (std::size_t k = 0; k < n; ++k) at[k] = lerp(a[k], b[k], moment);
        for (std::size_t i = 0; i < n;) {
          if (order[i] == next[i]) {
            ++i;
            continue;
          }
          if (i + 1 >= n || order[i] != next[i + 1] || order[i + 1] != next[i]) {
            problem = "right strands exchange non-adjacent positions at once";
            return std::nullopt;
          }
          const Point& lower = at[order[i]];
          const Point& upper = at[order[i + 1]];
          if (lower.x == upper.x) {
            problem = "right strands collide";
            return std::nullopt;
          }
          letters.push_back({static_cast<int>(i + 1), lower.x > upper.x ? 1 : -1});
          i += 2;
        }
        order = next;
      }
      for (std::size_t k = 0; k < n; ++k) current[k] = b[k];
    }
  }
  std::set<Point> end(current.begin(), current.end());
  if (end != q_right) {
    problem = "right strands do not return to the points (1/2, q_i)";
    return std::nullopt;
  }
  return BraidWord(static_cast<int>(std::max<std::size_t>(n, 1)), letters);
}

}  // namespace

InternalBoundary internal_boundary(const Curtain& cu) {
  InternalBoundary out;
  std::vector<Arc> arcs;
  // arcs_of[k] maps vertex index -> arc index for segment k
  std::vector<std::map<std::size_t, std::size_t>> arcs_of(cu.segments.size());
  for (std::size_t k = 0; k < cu.segments.size(); ++k) {
    const auto& seg = cu.segments[k];
    if (seg.keyframes.empty()) {
      throw CurtainError("segment without keyframes");
    }
    for (std::size_t v : black_indices(seg.keyframes.front())) {
      Arc arc;
      const std::size_t count = std::max<std::size_t>(seg.keyframes.size(), 2);
      for (std::size_t j = 0; j < count; ++j) {
        const Chart& frame = seg.keyframes[std::min(j, seg.keyframes.size() - 1)];
        const Point& p = frame.vertices[v].pos;
        arc.points.push_back({p.x, p.y, keyframe_time(seg, j)});
      }
      arcs_of[k][v] = arcs.size();
      arcs.push_back(std::move(arc));
    }
  }
  std::size_t event_index = 0;
  for (std::size_t k = 0; k + 1 < cu.segments.size(); ++k) {
    const Rational& t = cu.segments[k].t1;
    const CurtainEvent* event = nullptr;
    while (event_index < cu.events.size() && cu.events[event_index].t <= t) {
      if (cu.events[event_index].t == t) {
        event = &cu.events[event_index];
      }
      ++event_index;
    }
    const Chart& before = cu.segments[k].keyframes.back();
    const Chart& after = cu.segments[k + 1].keyframes.front();
    std::map<Point, std::size_t> ends, starts;
    for (const auto& [v, a] : arcs_of[k]) ends[before.vertices[v].pos] = a;
    for (const auto& [v, a] : arcs_of[k + 1]) starts[after.vertices[v].pos] = a;
    if (event && (event->kind == EventKind::insert_free_edges || event->kind == EventKind::delete_free_edges)) {
      const bool insertion = event->kind == EventKind::insert_free_edges;
      auto& side = insertion ? starts : ends;
      const int end_slot = insertion ? 0 : 1;
      for (const auto& fe : event->free_edges) {
        auto a = side.find(fe.polyline.front());
        auto b = side.find(fe.polyline.back());
        if (a == side.end() || b == side.end()) {
          throw CurtainError("free-edge event at t = " + t.get_str() + " has no matching black vertices");
        }
        connect(arcs, {a->second, end_slot}, {b->second, end_slot}, fe.polyline);
        side.erase(a);
        side.erase(side.find(fe.polyline.back()));
        ++(insertion ? out.minima : out.maxima);
      }
    }
    if (ends.size() != starts.size()) {
      throw CurtainError("black vertex traces are discontinuous at t = " + t.get_str());
    }
    for (const auto& [p, a] : ends) {
      auto it = starts.find(p);
      if (it == starts.end()) {
        throw CurtainError("black vertex trace breaks at " + to_string(p) + ", t = " + t.get_str());
      }
      connect(arcs, {a, 1}, {it->second, 0});
    }
  }

  // walk the traces into curves
  std::vector<bool> used(arcs.size(), false);
  auto walk = [&](std::size_t start, int entry) {
    std::vector<Point3> curve;
    std::size_t arc = start;
    int in = entry;
    bool closed = false;
    while (true) {
      used[arc] = true;
      std::vector<Point3> pts = arcs[arc].points;
      if (in == 1) std::reverse(pts.begin(), pts.end());
      curve.insert(curve.end(), curve.empty() ? pts.begin() : pts.begin() + 1, pts.end());
      const int out_end = 1 - in;
      const auto& link = arcs[arc].link[out_end];
      if (!link) break;
      const Rational t = curve.back().t;
      const auto& cap = arcs[arc].cap[out_end];
      for (std::size_t c = 1; c + 1 < cap.size(); ++c) {
        curve.push_back({cap[c].x, cap[c].y, t});
      }
      if (link->first == start && link->second == entry) {
        closed = true;
        break;
      }
      arc = link->first;
      in = link->second;
      const Point3& entry_point = arcs[arc].points[in == 0 ? 0 : arcs[arc].points.size() - 1];
      if (!(entry_point == curve.back())) {
        curve.push_back(entry_point);
      }
    }
    return std::make_pair(curve, closed);
  };
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (int e = 0; e < 2 && !used[a]; ++e) {
      if (!arcs[a].link[e]) {
        walk(a, e);
        ++out.open_arcs;
      }
    }
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (!used[a]) {
      auto [curve, closed] = walk(a, 0);
      curve.push_back(curve.front());
      out.curves.push_back(std::move(curve));
    }
  }
  out.braid = extract_braid(cu, out.braid_problem);
  return out;
}

}  // namespace curtains

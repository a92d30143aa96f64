#include "curtains/cover.hpp"

#include <numeric>
#include <sstream>

#include "curtains/error.hpp"

namespace curtains {

std::vector<Permutation> permutation_monodromy(const MonodromyData& data) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < data.images.size(); ++i) {
    Permutation p = permutation_of(band_word(data.images[i]));
    if (!p.is_transposition()) {
      throw CoverError("image " + std::to_string(i + 1) + " maps to " + p.cycles() + ", not a transposition");
    }
    out.push_back(std::move(p));
  }
  return out;
}

int cover_components(int degree, const std::vector<Permutation>& permutations) {
  std::vector<int> parent(static_cast<std::size_t>(degree) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (const auto& p : permutations) {
    if (p.degree() != degree) {
      throw CoverError("permutation degree mismatch");
    }
    for (int x = 1; x <= degree; ++x) {
      parent[static_cast<std::size_t>(find(x))] = find(p(x));
    }
  }
  int count = 0;
  for (int x = 1; x <= degree; ++x) {
    count += find(x) == x ? 1 : 0;
  }
  return count;
}

int cover_components(const MonodromyData& data) {
  return cover_components(data.degree, permutation_monodromy(data));
}

int slice_euler(const Chart& chart) {
  return chart.degree - static_cast<int>(chart.count(VertexKind::black));
}

std::vector<SliceEuler> euler_profile(const Curtain& curtain) {
  std::vector<SliceEuler> out;
  for (const auto& seg : curtain.segments) {
    out.push_back({seg.t0, seg.t1, slice_euler(seg.keyframes.front())});
  }
  return out;
}

HandleLedger handle_ledger(const Curtain& curtain) {
  HandleLedger ledger;
  for (const auto& e : curtain.events) {
    const int count = static_cast<int>(e.free_edges.size());
    if (e.kind == EventKind::insert_free_edges) {
      ledger.one_handles += count;
      ledger.one_handle_events.push_back({e.t, count});
    } else if (e.kind == EventKind::delete_free_edges) {
      ledger.two_handles += count;
      ledger.two_handle_events.push_back({e.t, count});
    }
  }
  return ledger;
}

CoverReport analyze_cover(const MonodromyData& data, const Curtain& curtain) {
  CoverReport report;
  report.degree = data.degree;
  report.permutations = permutation_monodromy(data);
  report.components = cover_components(data.degree, report.permutations);
  report.euler = euler_profile(curtain);
  report.ledger = handle_ledger(curtain);
  const Chart& first = curtain.segments.front().keyframes.front();
  const Chart& last = curtain.segments.back().keyframes.back();
  report.closed = first.vertices.empty() && first.edges.empty() && last.vertices.empty() && last.edges.empty();
  report.ends_trivial = report.closed && slice_euler(first) == data.degree && slice_euler(last) == data.degree;

  HeegaardSummary& hs = report.heegaard;
  hs.level = (curtain.t_start + curtain.t_end) / 2;
  hs.normalized_level = Rational(1, 2);
  const Chart middle = slice_at(curtain, hs.level);
  hs.branch_points = static_cast<int>(middle.count(VertexKind::black));
  hs.disk_euler = slice_euler(middle);
  hs.closed_euler = 2 * data.degree - hs.branch_points;
  return report;
}

std::string render_text(const CoverReport& report) {
  std::ostringstream out;
  out << "Combinatorial invariants only: permutation monodromy, connectivity, slice Euler\n"
      << "characteristics and the handle ledger. The covering manifold is not identified.\n\n";
  out << "degree: " << report.degree << "\n";
  out << "meridian permutations:";
  for (const auto& p : report.permutations) {
    out << " " << p.cycles();
  }
  out << "\ncomponents: " << report.components << "\n";
  out << "slice euler characteristics:\n";
  for (const auto& s : report.euler) {
    out << "  [" << s.t0.get_str() << ", " << s.t1.get_str() << "]  " << s.euler << "\n";
  }
  out << "1-handles: " << report.ledger.one_handles;
  for (const auto& e : report.ledger.one_handle_events) {
    out << "  (t=" << e.t.get_str() << ": " << e.count << ")";
  }
  out << "\n2-handles: " << report.ledger.two_handles;
  for (const auto& e : report.ledger.two_handle_events) {
    out << "  (t=" << e.t.get_str() << ": " << e.count << ")";
  }
  out << "\nclosed: " << (report.closed ? "yes" : "no");
  if (report.closed) {
    out << " (end slices are the trivial " << report.degree << "-sheeted braid"
        << (report.ends_trivial ? "" : ", but not trivial") << ")";
  }
  const auto& hs = report.heegaard;
  out << "\nheegaard splitting level: t=" << hs.level.get_str() << " (normalized " << hs.normalized_level.get_str()
      << ")\n";
  out << "  branch points: " << hs.branch_points << ", disk cover euler: " << hs.disk_euler
      << ", closed surface euler: " << hs.closed_euler;
  out << "\n";
  return out.str();
}

}  // namespace curtains

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curtains/braid.hpp"
#include "curtains/builder.hpp"
#include "curtains/chart.hpp"
#include "curtains/curtain.hpp"

namespace curtains {

// Throws CoverError when an image is not a transposition.
std::vector<Permutation> permutation_monodromy(const MonodromyData& data);

// Orbits of the group generated by the permutations on {1..degree}.
int cover_components(int degree, const std::vector<Permutation>& permutations);
int cover_components(const MonodromyData& data);

// Euler characteristic of the branched cover of the disk described by the
// chart: degree minus the number of black vertices.
int slice_euler(const Chart& chart);

struct SliceEuler {
  Rational t0;
  Rational t1;
  int euler = 0;
};

// One entry per curtain segment.
std::vector<SliceEuler> euler_profile(const Curtain& curtain);

struct HandleEvent {
  Rational t;
  int count = 0;
};

// Free-edge insertions add 1-handles and deletions add 2-handles, one per
// edge; chart moves and certified transitions add none.
struct HandleLedger {
  int one_handles = 0;
  int two_handles = 0;
  std::vector<HandleEvent> one_handle_events;
  std::vector<HandleEvent> two_handle_events;
};

HandleLedger handle_ledger(const Curtain& curtain);

// Splitting at the middle of the time range (normalized level 1/2).
struct HeegaardSummary {
  Rational level;
  Rational normalized_level;
  int branch_points = 0;
  int disk_euler = 0;    // cover of the splitting slice over the disk
  int closed_euler = 0;  // cover of the capped-off sphere: 2d - branch points
};

struct CoverReport {
  int degree = 0;
  std::vector<Permutation> permutations;
  int components = 0;
  std::vector<SliceEuler> euler;
  HandleLedger ledger;
  bool closed = false;  // both end slices empty
  bool ends_trivial = false;  // end slices have euler d and no edges
  HeegaardSummary heegaard;
};

CoverReport analyze_cover(const MonodromyData& data, const Curtain& curtain);
std::string render_text(const CoverReport& report);

}  // namespace curtains

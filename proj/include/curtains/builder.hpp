#pragma once

#include <string>
#include <vector>

#include "curtains/braid.hpp"
#include "curtains/curtain.hpp"
#include "curtains/validation.hpp"

namespace curtains {

// A link given as the closure of beta in B_n, and the images in B_d of the
// meridians x_1..x_n as explicit band generator forms.
struct MonodromyData {
  int degree = 2;
  int strands = 1;
  BraidWord beta;
  std::vector<BandGeneratorForm> images;

  bool operator==(const MonodromyData&) const = default;
};

std::vector<BraidWord> image_words(const MonodromyData& data);

// Checks band forms and that hurwitz_act(beta, images) == images entrywise.
ValidationReport validate_monodromy_data(const MonodromyData& data);

struct Stage {
  std::string name;
  Rational t0;
  Rational t1;
};

struct BuildPlan {
  std::vector<Stage> stages;            // ordered by time
  std::vector<Rational> loop_removals;  // positive side; insertions are mirrored
  std::vector<Rational> drag_letters;   // start time of each letter's segment
  Rational certified_time;
  bool has_certified = false;
};

BuildPlan plan_build(const MonodromyData& data);

struct BuildOptions {
  // Re-validate the finished curtain and check its braid and monodromy.
  bool verify = true;
};

// Throws BuildError when the data is inadmissible or a check fails.
Curtain build_curtain(const MonodromyData& data, const BuildOptions& options = {});

// Closed braid, meridian words and validation of a built curtain against
// the data; empty string when everything matches.
std::string roundtrip_problem(const MonodromyData& data, const Curtain& curtain);

}  // namespace curtains

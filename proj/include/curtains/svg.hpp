#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curtains/chart.hpp"
#include "curtains/curtain.hpp"

namespace curtains {

struct SvgOptions {
  int width = 480;   // pixels for the longer side of the rectangle
  int margin = 24;
  bool show_labels = true;
  std::string title;  // rendered above the frame when not empty
};

// Deterministic SVG 1.1: y grows upward in the chart and downward on screen.
std::string render_svg(const Chart& chart, const SvgOptions& options = {});

// k non-event times, one per equal subinterval of the time range: midpoints
// without a seed, otherwise a reproducible dyadic sample in each subinterval.
std::vector<Rational> filmstrip_times(const Curtain& curtain, int k, std::optional<std::uint32_t> seed = {});

// One document per time, in the given order.
std::vector<std::pair<Rational, std::string>> render_filmstrip(const Curtain& curtain,
                                                               const std::vector<Rational>& times,
                                                               const SvgOptions& options = {});

}  // namespace curtains

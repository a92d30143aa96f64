#include "curtains/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "curtains/error.hpp"

namespace curtains {

namespace {

constexpr std::array<const char*, 8> kLabelColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                     "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
constexpr double kVertexRadius = 4.0;
constexpr double kArrowLength = 9.0;
constexpr double kArrowHalfWidth = 4.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") {
    s = "0.00";
  }
  return s;
}

const char* label_color(int label) {
  return kLabelColors[static_cast<std::size_t>(label - 1) % kLabelColors.size()];
}

struct Canvas {
  double x0, y0, scale, margin, width, height, top;

  Canvas(const Rect& rect, const SvgOptions& options, bool titled) {
    x0 = to_double(rect.x0);
    y0 = to_double(rect.y0);
    const double w = to_double(rect.x1) - x0;
    const double h = to_double(rect.y1) - y0;
    scale = options.width / std::max(w, h);
    margin = options.margin;
    top = titled ? margin + 16 : margin;
    width = w * scale + 2 * margin;
    height = h * scale + top + margin;
  }

  std::pair<double, double> map(const Point& p) const {
    const double u = margin + (to_double(p.x) - x0) * scale;
    const double v = height - margin - (to_double(p.y) - y0) * scale;
    return {u, v};
  }
};

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Index of the longest screen segment, where the arrow and label go.
std::size_t longest_segment(const std::vector<std::pair<double, double>>& pts) {
  std::size_t best = 0;
  double best_len = -1;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double len = std::hypot(pts[i + 1].first - pts[i].first, pts[i + 1].second - pts[i].second);
    if (len > best_len + 1e-9) {
      best = i;
      best_len = len;
    }
  }
  return best;
}

void render_edge(std::ostringstream& out, const Canvas& canvas, const ChartEdge& edge, bool show_labels) {
  std::vector<Point> oriented = oriented_polyline(edge);
  if (edge.closed() && !oriented.empty()) {
    oriented.push_back(oriented.front());
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : oriented) {
    pts.push_back(canvas.map(p));
  }
  if (pts.size() < 2) {
    return;
  }
  const char* color = label_color(edge.label);
  out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << (i ? " " : "") << fmt(pts[i].first) << "," << fmt(pts[i].second);
  }
  out << "\"/>\n";

  const std::size_t k = longest_segment(pts);
  const auto [ax, ay] = pts[k];
  const auto [bx, by] = pts[k + 1];
  const double len = std::hypot(bx - ax, by - ay);
  if (len < 1e-9) {
    return;
  }
  const double ux = (bx - ax) / len;
  const double uy = (by - ay) / len;
  const double mx = (ax + bx) / 2;
  const double my = (ay + by) / 2;
  const double tipx = mx + ux * kArrowLength / 2;
  const double tipy = my + uy * kArrowLength / 2;
  const double basex = mx - ux * kArrowLength / 2;
  const double basey = my - uy * kArrowLength / 2;
  out << "  <polygon fill=\"" << color << "\" points=\"" << fmt(tipx) << "," << fmt(tipy) << " "
      << fmt(basex - uy * kArrowHalfWidth) << "," << fmt(basey + ux * kArrowHalfWidth) << " "
      << fmt(basex + uy * kArrowHalfWidth) << "," << fmt(basey - ux * kArrowHalfWidth) << "\"/>\n";
  if (show_labels) {
    // Offset to the left of the direction of travel.
    const double lx = mx + uy * 10;
    const double ly = my - ux * 10;
    out << "  <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly + 4) << "\" font-family=\"sans-serif\" font-size=\"11\" "
        << "text-anchor=\"middle\" fill=\"" << color << "\">" << edge.label << "</text>\n";
  }
}

}  // namespace

std::string render_svg(const Chart& chart, const SvgOptions& options) {
  const Canvas canvas(chart.rect, options, !options.title.empty());
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(canvas.width) << "\" height=\""
      << fmt(canvas.height) << "\" viewBox=\"0 0 " << fmt(canvas.width) << " " << fmt(canvas.height) << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(canvas.width) << "\" height=\"" << fmt(canvas.height)
      << "\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    out << "  <text x=\"" << fmt(canvas.margin) << "\" y=\"" << fmt(canvas.margin + 4)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << escape_xml(options.title) << "</text>\n";
  }
  const auto [fx0, fy1] = canvas.map(Point(chart.rect.x0, chart.rect.y0));
  const auto [fx1, fy0] = canvas.map(Point(chart.rect.x1, chart.rect.y1));
  out << "  <rect x=\"" << fmt(fx0) << "\" y=\"" << fmt(fy0) << "\" width=\"" << fmt(fx1 - fx0) << "\" height=\""
      << fmt(fy1 - fy0) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const auto& edge : chart.edges) {
    render_edge(out, canvas, edge, options.show_labels);
  }
  for (const auto& v : chart.vertices) {
    const auto [x, y] = canvas.map(v.pos);
    switch (v.kind) {
      case VertexKind::black:
        out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(kVertexRadius)
            << "\" fill=\"black\"/>\n";
        break;
      case VertexKind::white:
        out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(kVertexRadius)
            << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
        break;
      case VertexKind::boundary:
        out << "  <rect x=\"" << fmt(x - 2) << "\" y=\"" << fmt(y - 2)
            << "\" width=\"4.00\" height=\"4.00\" fill=\"black\"/>\n";
        break;
      case VertexKind::crossing:
        break;
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<Rational> filmstrip_times(const Curtain& curtain, int k, std::optional<std::uint32_t> seed) {
  if (k < 1) {
    throw CurtainError("slice count must be at least 1");
  }
  const Rational span = curtain.t_end - curtain.t_start;
  const Rational step = span / k;
  constexpr long kResolution = 1L << 16;
  std::mt19937 rng(seed.value_or(0));
  std::uniform_int_distribution<long> pick(1, kResolution - 1);
  std::vector<Rational> times;
  for (int j = 0; j < k; ++j) {
    const Rational lo = curtain.t_start + step * j;
    Rational t = lo + step / 2;
    if (seed) {
      t = lo + step * make_rational(pick(rng), kResolution);
    }
    // Step off event times towards the middle of the subinterval.
    for (long nudge = 2; is_event_time(curtain, t); nudge *= 2) {
      t = lo + step / 2 + step / (2 * nudge + 1);
    }
    times.push_back(t);
  }
  return times;
}

std::vector<std::pair<Rational, std::string>> render_filmstrip(const Curtain& curtain,
                                                               const std::vector<Rational>& times,
                                                               const SvgOptions& options) {
  std::vector<std::pair<Rational, std::string>> out;
  for (const auto& t : times) {
    SvgOptions opts = options;
    if (opts.title.empty()) {
      opts.title = "t = " + t.get_str();
    }
    out.emplace_back(t, render_svg(slice_at(curtain, t), opts));
  }
  return out;
}

}  // namespace curtains

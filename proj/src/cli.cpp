#include "curtains/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "curtains/builder.hpp"
#include "curtains/cover.hpp"
#include "curtains/error.hpp"
#include "curtains/serialize.hpp"
#include "curtains/svg.hpp"

namespace curtains {

namespace {

// Malformed input or I/O failure; maps to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A failed check whose diagnostics were already printed; maps to exit status 1.
struct CheckFailed {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) {
    throw InputError("cannot write '" + path + "'");
  }
}

BraidWord parse_word(const std::string& text, int degree) {
  try {
    return parse_braid_word(text, degree);
  } catch (const BraidError& e) {
    throw InputError("bad braid word '" + text + "': " + e.what());
  }
}

void require_valid(const ValidationReport& report, const std::string& what, std::ostream& err) {
  if (!report.ok()) {
    err << what << " is invalid:\n" << report.to_string();
    throw CheckFailed{};
  }
}

std::string format_word(const BraidWord& word) {
  return word.empty() ? "e" : to_string(word);
}

struct Options {
  int degree = 0;
  std::string word_a;
  std::string word_b;
  std::string input;
  std::string data;
  std::string curtain;
  std::string out;
  bool strict = false;
  int slices = 5;
  std::optional<std::uint32_t> seed;
};

int braid_nf(const Options& o, std::ostream& out) {
  const NormalForm nf = left_normal_form(parse_word(o.word_a, o.degree));
  out << "infimum: " << nf.infimum << "\n";
  out << "factors:";
  for (const auto& f : nf.factors) {
    out << " " << f.cycles();
  }
  out << "\nword: " << format_word(to_word(nf)) << "\n";
  return kExitOk;
}

int braid_eq(const Options& o, std::ostream& out) {
  const bool equal = words_equal(parse_word(o.word_a, o.degree), parse_word(o.word_b, o.degree));
  out << (equal ? "equal" : "not equal") << "\n";
  return equal ? kExitOk : kExitValidation;
}

int chart_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const Chart chart = deserialize_chart(read_file(o.input));
  require_valid(validate_chart(chart), "chart", err);
  out << "valid chart of degree " << chart.degree << ": " << chart.vertices.size() << " vertices, "
      << chart.edges.size() << " edges\n";
  return kExitOk;
}

int chart_monodromy(const Options& o, std::ostream& out, std::ostream& err) {
  const Chart chart = deserialize_chart(read_file(o.input));
  require_valid(validate_chart(chart), "chart", err);
  const MeridianSystem system = hurwitz_meridians(chart.black_vertices(), chart.rect, {&chart});
  std::vector<Point> punctures = system.left;
  punctures.insert(punctures.end(), system.right.rbegin(), system.right.rend());
  const auto loops = system.ordered();
  Json words = Json::array();
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const BraidWord w = loop_monodromy(chart, loops[i]);
    out << to_string(punctures[i]) << "  " << format_word(w) << "  " << permutation_of(w).cycles() << "\n";
    Json item;
    item["puncture"] = point_to_json(punctures[i]);
    item["word"] = to_json(w);
    words.push_back(item);
  }
  if (!o.out.empty()) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["meridians"] = words;
    write_file(o.out, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int chart_render(const Options& o, std::ostream& out) {
  const Chart chart = deserialize_chart(read_file(o.input));
  const std::string svg = render_svg(chart);
  if (o.out.empty()) {
    out << svg;
  } else {
    write_file(o.out, svg);
  }
  return kExitOk;
}

MonodromyData load_data(const std::string& path, std::ostream& err) {
  const MonodromyData data = deserialize_monodromy_data(read_file(path));
  require_valid(validate_monodromy_data(data), "monodromy data", err);
  return data;
}

Curtain load_curtain(const std::string& path, bool strict, std::ostream& err) {
  const Curtain curtain = deserialize_curtain(read_file(path));
  require_valid(validate_curtain(curtain, {strict}), "curtain", err);
  return curtain;
}

int curtain_build(const Options& o, std::ostream& out, std::ostream& err) {
  const MonodromyData data = load_data(o.data, err);
  const Curtain curtain = build_curtain(data);
  require_valid(validate_curtain(curtain, {o.strict}), "curtain", err);
  const std::string text = serialize(curtain);
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
    out << "built curtain: " << curtain.segments.size() << " segments, " << curtain.events.size() << " events\n";
  }
  return kExitOk;
}

int curtain_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const Curtain curtain = load_curtain(o.input, o.strict, err);
  out << "valid curtain of degree " << curtain.degree << " over [" << curtain.t_start.get_str() << ", "
      << curtain.t_end.get_str() << "]: " << curtain.segments.size() << " segments, " << curtain.events.size()
      << " events\n";
  return kExitOk;
}

int curtain_boundary(const Options& o, std::ostream& out, std::ostream& err) {
  const Curtain curtain = load_curtain(o.input, false, err);
  const InternalBoundary boundary = internal_boundary(curtain);
  out << "components: " << boundary.components() << "\n";
  out << "open arcs: " << boundary.open_arcs << "\n";
  out << "minima: " << boundary.minima << ", maxima: " << boundary.maxima << "\n";
  if (boundary.braid) {
    out << "braid: " << format_word(*boundary.braid) << "\n";
  } else {
    out << "braid: none (" << boundary.braid_problem << ")\n";
  }
  if (!o.out.empty()) {
    write_file(o.out, serialize(boundary));
  }
  return boundary.open_arcs == 0 ? kExitOk : kExitValidation;
}

int curtain_monodromy(const Options& o, std::ostream& out, std::ostream& err) {
  const Curtain curtain = load_curtain(o.input, false, err);
  const auto words = meridian_monodromy(curtain);
  out << "reference level t = " << meridian_reference_time(curtain).get_str() << "\n";
  Json arr = Json::array();
  for (std::size_t i = 0; i < words.size(); ++i) {
    out << "x" << (i + 1) << "  " << format_word(words[i]) << "  " << permutation_of(words[i]).cycles() << "\n";
    arr.push_back(to_json(words[i]));
  }
  if (!o.out.empty()) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["meridians"] = arr;
    write_file(o.out, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int curtain_render(const Options& o, std::ostream& out, std::ostream& err) {
  const Curtain curtain = load_curtain(o.input, false, err);
  const auto times = filmstrip_times(curtain, o.slices, o.seed);
  const auto docs = render_filmstrip(curtain, times);
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw InputError("cannot create directory '" + dir.string() + "'");
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::ostringstream name;
    name << "slice_" << std::setw(3) << std::setfill('0') << i << ".svg";
    const auto path = dir / name.str();
    write_file(path.string(), docs[i].second);
    out << path.string() << "  t = " << docs[i].first.get_str() << "\n";
  }
  return kExitOk;
}

int cover_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const MonodromyData data = load_data(o.data, err);
  const Curtain curtain = o.curtain.empty() ? build_curtain(data) : load_curtain(o.curtain, false, err);
  if (curtain.degree != data.degree) {
    err << "curtain degree " << curtain.degree << " differs from data degree " << data.degree << "\n";
    throw CheckFailed{};
  }
  const CoverReport report = analyze_cover(data, curtain);
  out << render_text(report);
  if (!o.out.empty()) {
    write_file(o.out, serialize(report));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Charts, braid monodromies and curtains with exact verification", "curtains"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* braid = app.add_subcommand("braid", "Braid words in B_d")->require_subcommand(1);
  auto* nf = braid->add_subcommand("nf", "Left normal form of a word");
  nf->add_option("word", o.word_a, "word such as \"s1 s2^-1\"")->required();
  nf->add_option("-d,--degree", o.degree, "number of strands")->required()->check(CLI::Range(1, 64));
  nf->callback([&] { action = [&] { return braid_nf(o, out); }; });
  auto* eq = braid->add_subcommand("eq", "Decide whether two words are equal");
  eq->add_option("lhs", o.word_a)->required();
  eq->add_option("rhs", o.word_b)->required();
  eq->add_option("-d,--degree", o.degree, "number of strands")->required()->check(CLI::Range(1, 64));
  eq->callback([&] { action = [&] { return braid_eq(o, out); }; });

  auto* chart = app.add_subcommand("chart", "Chart JSON documents")->require_subcommand(1);
  auto* cv = chart->add_subcommand("validate", "Check a chart");
  cv->add_option("chart", o.input)->required();
  cv->callback([&] { action = [&] { return chart_validate(o, out, err); }; });
  auto* cm = chart->add_subcommand("monodromy", "Meridian words of the black vertices");
  cm->add_option("chart", o.input)->required();
  cm->add_option("--out", o.out, "JSON output");
  cm->callback([&] { action = [&] { return chart_monodromy(o, out, err); }; });
  auto* cr = chart->add_subcommand("render", "SVG rendering");
  cr->add_option("chart", o.input)->required();
  cr->add_option("--out", o.out, "SVG output (stdout when omitted)");
  cr->callback([&] { action = [&] { return chart_render(o, out); }; });

  auto* curtain = app.add_subcommand("curtain", "Curtain JSON documents")->require_subcommand(1);
  auto* cb = curtain->add_subcommand("build", "Build a curtain from monodromy data");
  cb->add_option("--data", o.data, "monodromy data JSON")->required();
  cb->add_option("--out", o.out, "curtain JSON output (stdout when omitted)");
  cb->add_flag("--strict-reject-certified", o.strict, "fail on certified transitions");
  cb->callback([&] { action = [&] { return curtain_build(o, out, err); }; });
  auto* cuv = curtain->add_subcommand("validate", "Check a curtain");
  cuv->add_option("curtain", o.input)->required();
  cuv->add_flag("--strict-reject-certified", o.strict, "fail on certified transitions");
  cuv->callback([&] { action = [&] { return curtain_validate(o, out, err); }; });
  auto* cub = curtain->add_subcommand("boundary", "Internal boundary and braid");
  cub->add_option("curtain", o.input)->required();
  cub->add_option("--out", o.out, "JSON output");
  cub->callback([&] { action = [&] { return curtain_boundary(o, out, err); }; });
  auto* cum = curtain->add_subcommand("monodromy", "Words of the standard meridians");
  cum->add_option("curtain", o.input)->required();
  cum->add_option("--out", o.out, "JSON output");
  cum->callback([&] { action = [&] { return curtain_monodromy(o, out, err); }; });
  auto* cur = curtain->add_subcommand("render", "Filmstrip of SVG slices");
  cur->add_option("curtain", o.input)->required();
  cur->add_option("--out", o.out, "output directory");
  cur->add_option("--slices", o.slices, "number of slices")->check(CLI::Range(1, 1000));
  cur->add_option("--seed", o.seed, "sample slice times reproducibly instead of using midpoints");
  cur->callback([&] { action = [&] { return curtain_render(o, out, err); }; });

  auto* cover = app.add_subcommand("cover", "Branched cover invariants")->require_subcommand(1);
  auto* ca = cover->add_subcommand("analyze", "Report on the cover described by monodromy data");
  ca->add_option("--data", o.data, "monodromy data JSON")->required();
  ca->add_option("--curtain", o.curtain, "curtain JSON (built from the data when omitted)");
  ca->add_option("--out", o.out, "report JSON output");
  ca->callback([&] { action = [&] { return cover_analyze(o, out, err); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitMalformed;
  }
  if (!action) {
    err << "error: no command given\n";
    return kExitMalformed;
  }
  try {
    return action();
  } catch (const CheckFailed&) {
    return kExitValidation;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace curtains

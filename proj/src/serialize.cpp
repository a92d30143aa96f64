#include "curtains/serialize.hpp"

#include <set>

#include "curtains/error.hpp"

namespace curtains {

namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

const char* type_name(const Json& json) {
  return json.type_name();
}

// A JSON value together with its pointer, for diagnostics.
class Reader {
 public:
  Reader(const Json& value, std::string pointer) : value_(value), pointer_(std::move(pointer)) {}

  const Json& value() const { return value_; }
  const std::string& pointer() const { return pointer_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw SchemaError(pointer_.empty() ? "/" : pointer_, message);
  }

  void expect_object(std::initializer_list<const char*> allowed) const {
    if (!value_.is_object()) {
      fail(std::string("expected object, found ") + type_name(value_));
    }
    for (const auto& item : value_.items()) {
      bool known = false;
      for (const char* key : allowed) {
        known = known || item.key() == key;
      }
      if (!known) {
        Reader(item.value(), pointer_ + "/" + escape_token(item.key())).fail("unknown field");
      }
    }
  }

  Reader at(const std::string& key) const {
    if (!value_.is_object()) {
      fail(std::string("expected object, found ") + type_name(value_));
    }
    auto it = value_.find(key);
    if (it == value_.end()) {
      fail("missing field '" + key + "'");
    }
    return Reader(*it, pointer_ + "/" + escape_token(key));
  }

  bool has(const std::string& key) const { return value_.is_object() && value_.contains(key); }

  std::size_t array_size() const {
    if (!value_.is_array()) {
      fail(std::string("expected array, found ") + type_name(value_));
    }
    return value_.size();
  }

  Reader at(std::size_t index) const {
    return Reader(value_.at(index), pointer_ + "/" + std::to_string(index));
  }

  template <typename F>
  auto map(F&& read) const {
    using T = decltype(read(std::declval<Reader>()));
    std::vector<T> out;
    const std::size_t n = array_size();
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(read(at(i)));
    }
    return out;
  }

  int as_int() const {
    if (!value_.is_number_integer()) {
      fail(std::string("expected integer, found ") + type_name(value_));
    }
    const auto v = value_.get<long long>();
    if (v < -(1LL << 30) || v > (1LL << 30)) {
      fail("integer out of range");
    }
    return static_cast<int>(v);
  }

  bool as_bool() const {
    if (!value_.is_boolean()) {
      fail(std::string("expected boolean, found ") + type_name(value_));
    }
    return value_.get<bool>();
  }

  std::string as_string() const {
    if (!value_.is_string()) {
      fail(std::string("expected string, found ") + type_name(value_));
    }
    return value_.get<std::string>();
  }

  // ["num", "den"] strings, or a plain integer.
  Rational as_rational() const {
    if (value_.is_number_integer()) {
      return Rational(as_int());
    }
    if (array_size() != 2 || !value_[0].is_string() || !value_[1].is_string()) {
      fail("expected rational as [\"num\", \"den\"]");
    }
    try {
      const mpz_class num(value_[0].get<std::string>(), 10);
      const mpz_class den(value_[1].get<std::string>(), 10);
      if (den == 0) {
        fail("zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      fail("malformed integer in rational");
    }
  }

  Point as_point() const {
    if (array_size() != 2) {
      fail("expected point as [x, y]");
    }
    return Point(at(std::size_t{0}).as_rational(), at(std::size_t{1}).as_rational());
  }

  std::vector<Point> as_points() const {
    return map([](const Reader& r) { return r.as_point(); });
  }

 private:
  const Json& value_;
  std::string pointer_;
};

Json points_to_json(const std::vector<Point>& points) {
  Json out = Json::array();
  for (const auto& p : points) {
    out.push_back(point_to_json(p));
  }
  return out;
}

Json letters_to_json(const BraidWord& word) {
  Json out = Json::array();
  for (const auto& letter : word.letters()) {
    out.push_back(Json::array({letter.index, letter.sign}));
  }
  return out;
}

BraidWord read_braid_word(const Reader& r) {
  r.expect_object({"degree", "letters"});
  const int degree = r.at("degree").as_int();
  if (degree < 1) {
    r.at("degree").fail("degree must be at least 1");
  }
  const Reader letters = r.at("letters");
  std::vector<BraidLetter> out;
  for (std::size_t i = 0; i < letters.array_size(); ++i) {
    const Reader item = letters.at(i);
    if (item.array_size() != 2) {
      item.fail("expected letter as [index, sign]");
    }
    BraidLetter letter{item.at(std::size_t{0}).as_int(), item.at(std::size_t{1}).as_int()};
    if (letter.index < 1 || letter.index >= degree) {
      item.at(std::size_t{0}).fail("generator index out of range");
    }
    if (letter.sign != 1 && letter.sign != -1) {
      item.at(std::size_t{1}).fail("sign must be 1 or -1");
    }
    out.push_back(letter);
  }
  return BraidWord(degree, std::move(out));
}

BandGeneratorForm read_band_form(const Reader& r, int degree) {
  r.expect_object({"conjugator", "index", "sign"});
  BandGeneratorForm form;
  form.conjugator = read_braid_word(r.at("conjugator"));
  if (form.conjugator.degree() != degree) {
    r.at("conjugator").at("degree").fail("conjugator degree differs from data degree");
  }
  form.target_index = r.at("index").as_int();
  form.sign = r.at("sign").as_int();
  if (form.target_index < 1 || form.target_index >= degree) {
    r.at("index").fail("generator index out of range");
  }
  if (form.sign != 1 && form.sign != -1) {
    r.at("sign").fail("sign must be 1 or -1");
  }
  return form;
}

std::string orient_name(bool reversed) {
  return reversed ? "reversed" : "forward";
}

bool read_orient(const Reader& r) {
  const std::string text = r.as_string();
  if (text == "forward") {
    return false;
  }
  if (text == "reversed") {
    return true;
  }
  r.fail("orient must be \"forward\" or \"reversed\"");
}

Rect read_rect(const Reader& r) {
  if (r.array_size() != 4) {
    r.fail("expected rect as [x0, y0, x1, y1]");
  }
  Rect rect{r.at(std::size_t{0}).as_rational(), r.at(std::size_t{1}).as_rational(),
            r.at(std::size_t{2}).as_rational(), r.at(std::size_t{3}).as_rational()};
  if (!(rect.x0 < rect.x1) || !(rect.y0 < rect.y1)) {
    r.fail("rect must have positive width and height");
  }
  return rect;
}

Chart read_chart(const Reader& r) {
  r.expect_object({"degree", "rect", "vertices", "edges"});
  Chart chart;
  chart.degree = r.at("degree").as_int();
  if (chart.degree < 1) {
    r.at("degree").fail("degree must be at least 1");
  }
  chart.rect = read_rect(r.at("rect"));
  std::set<std::string> vertex_ids;
  const Reader vertices = r.at("vertices");
  for (std::size_t i = 0; i < vertices.array_size(); ++i) {
    const Reader v = vertices.at(i);
    v.expect_object({"id", "kind", "pos"});
    ChartVertex vertex;
    vertex.id = v.at("id").as_string();
    if (!vertex_ids.insert(vertex.id).second) {
      v.at("id").fail("duplicate vertex id '" + vertex.id + "'");
    }
    try {
      vertex.kind = parse_vertex_kind(v.at("kind").as_string());
    } catch (const ChartError& e) {
      v.at("kind").fail(e.what());
    }
    vertex.pos = v.at("pos").as_point();
    chart.vertices.push_back(std::move(vertex));
  }
  std::set<std::string> edge_ids;
  const Reader edges = r.at("edges");
  for (std::size_t i = 0; i < edges.array_size(); ++i) {
    const Reader e = edges.at(i);
    e.expect_object({"id", "label", "orient", "polyline", "ends"});
    ChartEdge edge;
    edge.id = e.at("id").as_string();
    if (!edge_ids.insert(edge.id).second) {
      e.at("id").fail("duplicate edge id '" + edge.id + "'");
    }
    edge.label = e.at("label").as_int();
    edge.reversed = read_orient(e.at("orient"));
    edge.polyline = e.at("polyline").as_points();
    const Reader ends = e.at("ends");
    if (ends.value().is_string()) {
      if (ends.as_string() != "closed-loop") {
        ends.fail("ends must be [from, to] or \"closed-loop\"");
      }
    } else {
      if (ends.array_size() != 2) {
        ends.fail("ends must be [from, to] or \"closed-loop\"");
      }
      std::array<std::string, 2> ids{ends.at(std::size_t{0}).as_string(), ends.at(std::size_t{1}).as_string()};
      for (std::size_t k = 0; k < 2; ++k) {
        if (!vertex_ids.count(ids[k])) {
          ends.at(k).fail("unknown vertex id '" + ids[k] + "'");
        }
      }
      edge.ends = ids;
    }
    chart.edges.push_back(std::move(edge));
  }
  return chart;
}

FreeEdge read_free_edge(const Reader& r) {
  r.expect_object({"polyline", "label", "orient"});
  FreeEdge edge;
  edge.polyline = r.at("polyline").as_points();
  edge.label = r.at("label").as_int();
  edge.reversed = read_orient(r.at("orient"));
  return edge;
}

Json free_edge_to_json(const FreeEdge& edge) {
  Json out;
  out["polyline"] = points_to_json(edge.polyline);
  out["label"] = edge.label;
  out["orient"] = orient_name(edge.reversed);
  return out;
}

Json path_to_json(const PLPath& path) {
  Json out;
  out["points"] = points_to_json(path.points);
  out["closed"] = path.closed;
  return out;
}

PLPath read_path(const Reader& r) {
  r.expect_object({"points", "closed"});
  PLPath path;
  path.points = r.at("points").as_points();
  path.closed = r.at("closed").as_bool();
  return path;
}

Json words_to_json(const std::vector<BraidWord>& words) {
  Json out = Json::array();
  for (const auto& w : words) {
    out.push_back(to_json(w));
  }
  return out;
}

Json event_to_json(const CurtainEvent& event) {
  Json out;
  out["t"] = rational_to_json(event.t);
  out["kind"] = to_string(event.kind);
  Json payload = Json::object();
  switch (event.kind) {
    case EventKind::disk_replacement:
      if (event.replacement) {
        payload["disk"] = points_to_json(event.replacement->disk);
        payload["replacement"] = to_json(event.replacement->replacement);
      }
      break;
    case EventKind::insert_free_edges:
    case EventKind::delete_free_edges: {
      Json edges = Json::array();
      for (const auto& e : event.free_edges) {
        edges.push_back(free_edge_to_json(e));
      }
      payload["free_edges"] = edges;
      break;
    }
    case EventKind::certified_transition:
      if (event.certificate) {
        const auto& c = *event.certificate;
        payload["before"] = to_json(c.before);
        payload["after"] = to_json(c.after);
        Json meridians = Json::array();
        for (const auto& m : c.meridians) {
          meridians.push_back(path_to_json(m));
        }
        payload["meridians"] = meridians;
        payload["before_words"] = words_to_json(c.before_words);
        payload["after_words"] = words_to_json(c.after_words);
      }
      break;
  }
  out["payload"] = payload;
  return out;
}

CurtainEvent read_event(const Reader& r) {
  r.expect_object({"t", "kind", "payload"});
  CurtainEvent event;
  event.t = r.at("t").as_rational();
  try {
    event.kind = parse_event_kind(r.at("kind").as_string());
  } catch (const CurtainError& e) {
    r.at("kind").fail(e.what());
  }
  const Reader payload = r.at("payload");
  switch (event.kind) {
    case EventKind::disk_replacement:
      payload.expect_object({"disk", "replacement"});
      if (payload.has("disk") || payload.has("replacement")) {
        event.replacement = DiskReplacement{payload.at("disk").as_points(), read_chart(payload.at("replacement"))};
      }
      break;
    case EventKind::insert_free_edges:
    case EventKind::delete_free_edges:
      payload.expect_object({"free_edges"});
      event.free_edges = payload.at("free_edges").map(read_free_edge);
      break;
    case EventKind::certified_transition:
      payload.expect_object({"before", "after", "meridians", "before_words", "after_words"});
      if (!payload.value().empty()) {
        TransitionCertificate c;
        c.before = read_chart(payload.at("before"));
        c.after = read_chart(payload.at("after"));
        c.meridians = payload.at("meridians").map(read_path);
        c.before_words = payload.at("before_words").map(read_braid_word);
        c.after_words = payload.at("after_words").map(read_braid_word);
        event.certificate = std::move(c);
      }
      break;
  }
  return event;
}

Json permutation_to_json(const Permutation& p) {
  return Json(p.images());
}

Reader document(const Json& json, const std::string& pointer, std::initializer_list<const char*> fields) {
  Reader r(json, pointer);
  r.expect_object(fields);
  const int version = r.at("schema_version").as_int();
  if (version != kSchemaVersion) {
    r.at("schema_version").fail("unsupported schema version " + std::to_string(version));
  }
  return r;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

Json versioned(const Json& body) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  for (const auto& item : body.items()) {
    out[item.key()] = item.value();
  }
  return out;
}

Json without_version(const Json& json) {
  Json out = json;
  if (out.is_object()) {
    out.erase("schema_version");
  }
  return out;
}

}  // namespace

Json rational_to_json(const Rational& value) {
  return Json::array({value.get_num().get_str(), value.get_den().get_str()});
}

Json point_to_json(const Point& p) {
  return Json::array({rational_to_json(p.x), rational_to_json(p.y)});
}

Json to_json(const BraidWord& word) {
  Json out;
  out["degree"] = word.degree();
  out["letters"] = letters_to_json(word);
  return out;
}

Json to_json(const BandGeneratorForm& form) {
  Json out;
  out["conjugator"] = to_json(form.conjugator);
  out["index"] = form.target_index;
  out["sign"] = form.sign;
  return out;
}

Json to_json(const Chart& chart) {
  Json out;
  out["degree"] = chart.degree;
  out["rect"] = Json::array({rational_to_json(chart.rect.x0), rational_to_json(chart.rect.y0),
                             rational_to_json(chart.rect.x1), rational_to_json(chart.rect.y1)});
  Json vertices = Json::array();
  for (const auto& v : chart.vertices) {
    Json item;
    item["id"] = v.id;
    item["kind"] = to_string(v.kind);
    item["pos"] = point_to_json(v.pos);
    vertices.push_back(item);
  }
  out["vertices"] = vertices;
  Json edges = Json::array();
  for (const auto& e : chart.edges) {
    Json item;
    item["id"] = e.id;
    item["label"] = e.label;
    item["orient"] = orient_name(e.reversed);
    item["polyline"] = points_to_json(e.polyline);
    if (e.ends) {
      item["ends"] = Json::array({(*e.ends)[0], (*e.ends)[1]});
    } else {
      item["ends"] = "closed-loop";
    }
    edges.push_back(item);
  }
  out["edges"] = edges;
  return out;
}

Json to_json(const Curtain& curtain) {
  Json out;
  out["degree"] = curtain.degree;
  out["time_range"] = Json::array({rational_to_json(curtain.t_start), rational_to_json(curtain.t_end)});
  Json segments = Json::array();
  for (const auto& s : curtain.segments) {
    Json item;
    item["t0"] = rational_to_json(s.t0);
    item["t1"] = rational_to_json(s.t1);
    Json keyframes = Json::array();
    for (const auto& k : s.keyframes) {
      keyframes.push_back(to_json(k));
    }
    item["keyframes"] = keyframes;
    segments.push_back(item);
  }
  out["segments"] = segments;
  Json events = Json::array();
  for (const auto& e : curtain.events) {
    events.push_back(event_to_json(e));
  }
  out["events"] = events;
  return out;
}

Json to_json(const MonodromyData& data) {
  Json out;
  out["degree"] = data.degree;
  out["strands"] = data.strands;
  out["beta"] = to_json(data.beta);
  Json images = Json::array();
  for (const auto& f : data.images) {
    images.push_back(to_json(f));
  }
  out["images"] = images;
  return out;
}

Json to_json(const CoverReport& report) {
  Json out;
  out["degree"] = report.degree;
  Json perms = Json::array();
  for (const auto& p : report.permutations) {
    perms.push_back(permutation_to_json(p));
  }
  out["permutations"] = perms;
  out["components"] = report.components;
  Json euler = Json::array();
  for (const auto& s : report.euler) {
    Json item;
    item["t0"] = rational_to_json(s.t0);
    item["t1"] = rational_to_json(s.t1);
    item["euler"] = s.euler;
    euler.push_back(item);
  }
  out["euler"] = euler;
  auto events_json = [](const std::vector<HandleEvent>& events) {
    Json arr = Json::array();
    for (const auto& e : events) {
      Json item;
      item["t"] = rational_to_json(e.t);
      item["count"] = e.count;
      arr.push_back(item);
    }
    return arr;
  };
  Json ledger;
  ledger["one_handles"] = report.ledger.one_handles;
  ledger["two_handles"] = report.ledger.two_handles;
  ledger["one_handle_events"] = events_json(report.ledger.one_handle_events);
  ledger["two_handle_events"] = events_json(report.ledger.two_handle_events);
  out["ledger"] = ledger;
  out["closed"] = report.closed;
  out["ends_trivial"] = report.ends_trivial;
  Json hs;
  hs["level"] = rational_to_json(report.heegaard.level);
  hs["normalized_level"] = rational_to_json(report.heegaard.normalized_level);
  hs["branch_points"] = report.heegaard.branch_points;
  hs["disk_euler"] = report.heegaard.disk_euler;
  hs["closed_euler"] = report.heegaard.closed_euler;
  out["heegaard"] = hs;
  return out;
}

Json to_json(const InternalBoundary& boundary) {
  Json out;
  out["components"] = boundary.components();
  Json curves = Json::array();
  for (const auto& curve : boundary.curves) {
    Json c = Json::array();
    for (const auto& p : curve) {
      c.push_back(Json::array({rational_to_json(p.x), rational_to_json(p.y), rational_to_json(p.t)}));
    }
    curves.push_back(c);
  }
  out["curves"] = curves;
  out["open_arcs"] = boundary.open_arcs;
  out["minima"] = boundary.minima;
  out["maxima"] = boundary.maxima;
  if (boundary.braid) {
    out["braid"] = to_json(*boundary.braid);
  } else {
    out["braid"] = nullptr;
    out["braid_problem"] = boundary.braid_problem;
  }
  return out;
}

BraidWord braid_word_from_json(const Json& json, const std::string& pointer) {
  return read_braid_word(Reader(json, pointer));
}

Chart chart_from_json(const Json& json, const std::string& pointer) {
  return read_chart(Reader(json, pointer));
}

Curtain curtain_from_json(const Json& json, const std::string& pointer) {
  const Reader r(json, pointer);
  r.expect_object({"degree", "time_range", "segments", "events"});
  Curtain curtain;
  curtain.degree = r.at("degree").as_int();
  const Reader range = r.at("time_range");
  if (range.array_size() != 2) {
    range.fail("expected time range as [start, end]");
  }
  curtain.t_start = range.at(std::size_t{0}).as_rational();
  curtain.t_end = range.at(std::size_t{1}).as_rational();
  curtain.segments = r.at("segments").map([](const Reader& s) {
    s.expect_object({"t0", "t1", "keyframes"});
    CurtainSegment segment;
    segment.t0 = s.at("t0").as_rational();
    segment.t1 = s.at("t1").as_rational();
    segment.keyframes = s.at("keyframes").map(read_chart);
    if (segment.keyframes.empty()) {
      s.at("keyframes").fail("a segment needs at least one keyframe");
    }
    return segment;
  });
  curtain.events = r.at("events").map(read_event);
  return curtain;
}

MonodromyData monodromy_data_from_json(const Json& json, const std::string& pointer) {
  const Reader r(json, pointer);
  r.expect_object({"degree", "strands", "beta", "images"});
  MonodromyData data;
  data.degree = r.at("degree").as_int();
  if (data.degree < 2) {
    r.at("degree").fail("degree must be at least 2");
  }
  data.strands = r.at("strands").as_int();
  if (data.strands < 1) {
    r.at("strands").fail("strands must be at least 1");
  }
  data.beta = read_braid_word(r.at("beta"));
  if (data.beta.degree() != data.strands) {
    r.at("beta").at("degree").fail("beta must lie in the braid group on 'strands' strands");
  }
  const int degree = data.degree;
  data.images = r.at("images").map([degree](const Reader& item) { return read_band_form(item, degree); });
  return data;
}

CoverReport cover_report_from_json(const Json& json, const std::string& pointer) {
  const Reader r(json, pointer);
  r.expect_object({"degree", "permutations", "components", "euler", "ledger", "closed", "ends_trivial", "heegaard"});
  CoverReport report;
  report.degree = r.at("degree").as_int();
  report.permutations = r.at("permutations").map([](const Reader& p) {
    std::vector<int> images = p.map([](const Reader& x) { return x.as_int(); });
    try {
      return Permutation(std::move(images));
    } catch (const BraidError& e) {
      p.fail(e.what());
    }
  });
  report.components = r.at("components").as_int();
  report.euler = r.at("euler").map([](const Reader& s) {
    s.expect_object({"t0", "t1", "euler"});
    return SliceEuler{s.at("t0").as_rational(), s.at("t1").as_rational(), s.at("euler").as_int()};
  });
  const Reader ledger = r.at("ledger");
  ledger.expect_object({"one_handles", "two_handles", "one_handle_events", "two_handle_events"});
  auto read_events = [](const Reader& arr) {
    return arr.map([](const Reader& e) {
      e.expect_object({"t", "count"});
      return HandleEvent{e.at("t").as_rational(), e.at("count").as_int()};
    });
  };
  report.ledger.one_handles = ledger.at("one_handles").as_int();
  report.ledger.two_handles = ledger.at("two_handles").as_int();
  report.ledger.one_handle_events = read_events(ledger.at("one_handle_events"));
  report.ledger.two_handle_events = read_events(ledger.at("two_handle_events"));
  report.closed = r.at("closed").as_bool();
  report.ends_trivial = r.at("ends_trivial").as_bool();
  const Reader hs = r.at("heegaard");
  hs.expect_object({"level", "normalized_level", "branch_points", "disk_euler", "closed_euler"});
  report.heegaard.level = hs.at("level").as_rational();
  report.heegaard.normalized_level = hs.at("normalized_level").as_rational();
  report.heegaard.branch_points = hs.at("branch_points").as_int();
  report.heegaard.disk_euler = hs.at("disk_euler").as_int();
  report.heegaard.closed_euler = hs.at("closed_euler").as_int();
  return report;
}

std::string serialize(const BraidWord& word) {
  return versioned(to_json(word)).dump(2) + "\n";
}

std::string serialize(const Chart& chart) {
  return versioned(to_json(chart)).dump(2) + "\n";
}

std::string serialize(const Curtain& curtain) {
  return versioned(to_json(curtain)).dump(2) + "\n";
}

std::string serialize(const MonodromyData& data) {
  return versioned(to_json(data)).dump(2) + "\n";
}

std::string serialize(const CoverReport& report) {
  return versioned(to_json(report)).dump(2) + "\n";
}

std::string serialize(const InternalBoundary& boundary) {
  return versioned(to_json(boundary)).dump(2) + "\n";
}

BraidWord deserialize_braid_word(const std::string& text) {
  const Json json = parse_text(text);
  document(json, "", {"schema_version", "degree", "letters"});
  return braid_word_from_json(without_version(json));
}

Chart deserialize_chart(const std::string& text) {
  const Json json = parse_text(text);
  document(json, "", {"schema_version", "degree", "rect", "vertices", "edges"});
  return chart_from_json(without_version(json));
}

Curtain deserialize_curtain(const std::string& text) {
  const Json json = parse_text(text);
  document(json, "", {"schema_version", "degree", "time_range", "segments", "events"});
  return curtain_from_json(without_version(json));
}

MonodromyData deserialize_monodromy_data(const std::string& text) {
  const Json json = parse_text(text);
  document(json, "", {"schema_version", "degree", "strands", "beta", "images"});
  return monodromy_data_from_json(without_version(json));
}

CoverReport deserialize_cover_report(const std::string& text) {
  const Json json = parse_text(text);
  document(json, "", {"schema_version", "degree", "permutations", "components", "euler", "ledger", "closed",
                      "ends_trivial", "heegaard"});
  return cover_report_from_json(without_version(json));
}

}  // namespace curtains

#include <gtest/gtest.h>

#include <random>

#include "curtains/cover.hpp"
#include "curtains/error.hpp"
#include "curtains/serialize.hpp"
#include "support/chart_fixtures.hpp"
#include "support/generators.hpp"

namespace curtains {
namespace {

BraidWord w(const std::string& text, int degree) {
  return parse_braid_word(text, degree);
}

MonodromyData trefoil() {
  MonodromyData data;
  data.degree = 3;
  data.strands = 2;
  data.beta = w("s1 s1 s1", 2);
  data.images = {{BraidWord(3), 1, 1}, {BraidWord(3), 2, 1}};
  return data;
}

std::string schema_pointer(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SchemaError& e) {
    return "error at '" + e.pointer() + "': " + e.what();
  }
  return "no error";
}

TEST(Serialize, BraidWordRoundTrips) {
  const BraidWord word = w("s1 s3^-1 s2", 4);
  EXPECT_EQ(deserialize_braid_word(serialize(word)), word);
  EXPECT_EQ(deserialize_braid_word(serialize(BraidWord(2))), BraidWord(2));
}

TEST(Serialize, DocumentsCarryTheSchemaVersion) {
  const Json doc = Json::parse(serialize(trefoil()));
  EXPECT_EQ(doc.at("schema_version"), kSchemaVersion);
}

TEST(Serialize, ChartRoundTrips) {
  const Chart nest = build_oval_nest({Point(testing::R(0), testing::R(1, 2)), testing::R(1, 2), testing::R(1, 4)},
                                     {w("s2^-1", 3), 1, -1});
  EXPECT_EQ(deserialize_chart(serialize(nest)), nest);
  const Chart white = testing::white_vertex_chart({true, true, true, false, false, false});
  EXPECT_EQ(deserialize_chart(serialize(white)), white);
}

TEST(Serialize, CurtainDataAndReportRoundTrip) {
  const MonodromyData data = trefoil();
  const Curtain cu = build_curtain(data);
  EXPECT_EQ(deserialize_monodromy_data(serialize(data)), data);
  const Curtain back = deserialize_curtain(serialize(cu));
  EXPECT_EQ(back, cu);
  EXPECT_TRUE(validate_curtain(back).ok());
  const CoverReport report = analyze_cover(data, cu);
  const std::string text = serialize(report);
  EXPECT_EQ(serialize(deserialize_cover_report(text)), text);
}

TEST(Serialize, IntegersReadAsRationals) {
  Json doc = Json::parse(serialize(empty_chart(2)));
  const Rect rect = standard_domain();
  doc["rect"] = Json::array({rect.x0.get_num().get_si(), rect.y0.get_num().get_si(), rect.x1.get_num().get_si(),
                             rect.y1.get_num().get_si()});
  EXPECT_EQ(deserialize_chart(doc.dump()), empty_chart(2));
  const Json point = point_to_json(Point(make_rational(1, 2), Rational(3)));
  EXPECT_EQ(point.dump(), R"([["1","2"],["3","1"]])");
}

TEST(SerializeErrors, UnknownFieldNamesThePointer) {
  Json doc = Json::parse(serialize(trefoil()));
  doc["images"][1]["extra"] = 3;
  const std::string message = schema_pointer([&] { deserialize_monodromy_data(doc.dump()); });
  EXPECT_NE(message.find("'/images/1/extra'"), std::string::npos) << message;
  EXPECT_NE(message.find("unknown field"), std::string::npos) << message;
}

TEST(SerializeErrors, DuplicateVertexIdsAreRejected) {
  Json doc = Json::parse(serialize(build_ribbon_chart({{BraidWord(2), 1, 1}}, 2)));
  doc["vertices"][1]["id"] = doc["vertices"][0]["id"];
  const std::string message = schema_pointer([&] { deserialize_chart(doc.dump()); });
  EXPECT_NE(message.find("duplicate vertex id"), std::string::npos) << message;
}

TEST(SerializeErrors, UnknownEndVertexIsRejected) {
  Json doc = Json::parse(serialize(build_ribbon_chart({{BraidWord(2), 1, 1}}, 2)));
  doc["edges"][0]["ends"][0] = "nowhere";
  EXPECT_THROW(deserialize_chart(doc.dump()), SchemaError);
}

TEST(SerializeErrors, VersionAndSyntax) {
  Json doc = Json::parse(serialize(w("s1", 2)));
  doc["schema_version"] = 2;
  const std::string message = schema_pointer([&] { deserialize_braid_word(doc.dump()); });
  EXPECT_NE(message.find("unsupported schema version"), std::string::npos) << message;
  EXPECT_NE(schema_pointer([] { deserialize_chart("{not json"); }).find("malformed JSON"), std::string::npos);
  Json bad = Json::parse(serialize(empty_chart(2)));
  bad["rect"][0] = Json::array({"1", "0"});
  EXPECT_THROW(deserialize_chart(bad.dump()), SchemaError);
  bad["rect"][0] = "half";
  EXPECT_THROW(deserialize_chart(bad.dump()), SchemaError);
}

TEST(SerializeProperty, RandomDocumentsRoundTrip) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto data = testing::search_admissible(rng, 3, 4);
    if (!data) {
      continue;
    }
    ASSERT_EQ(deserialize_monodromy_data(serialize(*data)), *data);
    const auto replacement = testing::random_replacement(rng);
    ASSERT_EQ(deserialize_chart(serialize(replacement.after)), replacement.after);
  }
}

TEST(SerializeProperty, TruncatedDocumentsFailCleanly) {
  const std::string text = serialize(build_curtain(trefoil()));
  std::mt19937 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t cut = rng() % text.size();
    EXPECT_THROW(deserialize_curtain(text.substr(0, cut)), SchemaError);
  }
}

}  // namespace
}  // namespace curtains

#pragma once

#include <string>

#include <json.hpp>

#include "curtains/braid.hpp"
#include "curtains/builder.hpp"
#include "curtains/chart.hpp"
#include "curtains/cover.hpp"
#include "curtains/curtain.hpp"

namespace curtains {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Nested values carry no version; documents add "schema_version" at the top
// level. Readers reject unknown fields and throw SchemaError with a JSON
// pointer to the offending value.
Json rational_to_json(const Rational& value);
Json point_to_json(const Point& p);
Json to_json(const BraidWord& word);
Json to_json(const BandGeneratorForm& form);
Json to_json(const Chart& chart);
Json to_json(const Curtain& curtain);
Json to_json(const MonodromyData& data);
Json to_json(const CoverReport& report);
Json to_json(const InternalBoundary& boundary);

BraidWord braid_word_from_json(const Json& json, const std::string& pointer = "");
Chart chart_from_json(const Json& json, const std::string& pointer = "");
Curtain curtain_from_json(const Json& json, const std::string& pointer = "");
MonodromyData monodromy_data_from_json(const Json& json, const std::string& pointer = "");
CoverReport cover_report_from_json(const Json& json, const std::string& pointer = "");

// Versioned documents, pretty-printed.
std::string serialize(const BraidWord& word);
std::string serialize(const Chart& chart);
std::string serialize(const Curtain& curtain);
std::string serialize(const MonodromyData& data);
std::string serialize(const CoverReport& report);
std::string serialize(const InternalBoundary& boundary);

BraidWord deserialize_braid_word(const std::string& text);
Chart deserialize_chart(const std::string& text);
Curtain deserialize_curtain(const std::string& text);
MonodromyData deserialize_monodromy_data(const std::string& text);
CoverReport deserialize_cover_report(const std::string& text);

}  // namespace curtains

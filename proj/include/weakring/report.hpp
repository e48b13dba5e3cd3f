#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weakring/clean.hpp"
#include "weakring/harness.hpp"

namespace weakring {

inline constexpr std::string_view kToolName = "weakring";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

std::optional<Format> format_from_name(std::string_view name);

/// Command output. Rows of one report share the same keys (`columns`).
/// Everything except `wall_time_ms` is a pure function of the invocation.
struct Report {
  std::string command;
  std::vector<std::string> invocation;
  std::vector<std::string> columns;
  std::vector<Json> rows;
  Json summary = Json::object();
  /// Print rows as "key: value" blocks instead of a table.
  bool vertical = false;
  std::optional<double> wall_time_ms;
};

Json classification_row(const Classification& row, const FiniteRing& ring, bool with_witnesses);
Json check_row(const CheckResult& result);
Json hunt_row(HuntQuery query, const HuntMatch& match);
/// Structural facts about one ring; ideal lattice included when under the enumeration cap.
Json show_row(const RingPtr& ring, const Limits& limits);

std::vector<std::string> classification_columns(bool with_witnesses);
std::vector<std::string> check_columns();
std::vector<std::string> hunt_columns();
std::vector<std::string> show_columns();

Json to_json(const Report& report);
std::string render(const Report& report, Format format);

}  // namespace weakring

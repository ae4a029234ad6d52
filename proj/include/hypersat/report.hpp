// Copyright 2026 The hypersat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypersat/supersat.hpp"

namespace hypersat {

inline constexpr const char* kReportSchema = "hypersat.report/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// One stage of a report. Every value is a string: integers in decimal,
/// rationals as "p/q", logarithms fixed-point.
struct ReportRecord {
  using Status = TraceRecord::Status;
  std::string name;
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> values;
  Status status = Status::report;

  ReportRecord& add(std::string key, std::string value);
  ReportRecord& add(std::string key, const BigInt& value);
  ReportRecord& add(std::string key, const Rational& value);
  ReportRecord& add(std::string key, std::uint64_t value);
  ReportRecord& add(std::string key, double value);
  ReportRecord& add(std::string key, bool value);
  ReportRecord& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  /// Value for key; throws Error when absent.
  const std::string& at(std::string_view key) const;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord record_from_trace(const TraceRecord& t);

struct Report {
  std::string version = kToolVersion;
  std::vector<std::string> command;  // argument vector as invoked
  std::vector<ReportRecord> records;
  std::vector<CycleCertificate> certificates;
  std::optional<std::string> hypergraph;  // text-format payload

  /// No record has status fail.
  bool ok() const;
  const ReportRecord& find(std::string_view name) const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// JSON with schema tag; keys appear in a fixed order so equal reports
/// serialize to equal bytes.
std::string report_json(const Report& r);
/// Inverse of report_json. Throws Error on schema mismatch or bad shape.
Report parse_report(std::string_view json_text);
/// Human-readable rendering: one block per record.
std::string report_plain(const Report& r);

enum class ReportFormat { plain, structured };
const char* to_string(ReportFormat f);
ReportFormat parse_report_format(std::string_view s);

/// A CLI invocation stored as JSON so an experiment can be replayed.
struct ExperimentConfig {
  std::string command;
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> budgets;
  std::map<std::string, std::string> params;
  ReportFormat format = ReportFormat::structured;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

std::string config_json(const ExperimentConfig& c);
/// Throws Error on malformed JSON, a missing command, a value of the wrong
/// type, or any key outside the schema.
ExperimentConfig parse_config(std::string_view json_text);
/// Subcommand followed by flags; input becomes --host, output --output.
std::vector<std::string> config_arguments(const ExperimentConfig& c);

}  // namespace hypersat

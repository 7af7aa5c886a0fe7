// Copyright 2026 The satree Authors
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace satree {

/// One simulated run. cost_total = access_total + adjust_total and
/// ratio_cost_over_ws = cost_total / max(ws_bound, 1e-12).
struct RunReport {
  std::string policy;
  std::string workload;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::uint64_t access_total = 0;
  std::uint64_t adjust_total = 0;
  std::uint64_t cost_total = 0;
  double ws_bound = 0.0;
  double ratio_cost_over_ws = 0.0;
  std::optional<std::uint64_t> mru_violations;
  std::optional<std::vector<double>> mean_depth_by_rank;
  std::optional<std::uint64_t> opt_cost;
};

enum class ReportFormat { kCsv, kJson };

ReportFormat parse_report_format(const std::string& name);

/// Column names in RunReport field order.
const std::vector<std::string>& csv_columns();
std::string csv_header();
/// Reals use 6 significant digits; absent optionals are empty cells; the
/// depth list is ';'-separated.
std::string to_csv_row(const RunReport& report);
RunReport parse_csv_row(const std::string& row);

nlohmann::json to_json(const RunReport& report);

/// Appends one report to `path`. CSV files get the header only when they
/// are new or empty; JSON output is one object per line.
void emit(const RunReport& report, ReportFormat format, const std::string& path);

/// Same rendering, returned as text (header included for CSV).
std::string render(const std::vector<RunReport>& reports, ReportFormat format);

/// "%.6g".
std::string format_real(double value);

}  // namespace satree

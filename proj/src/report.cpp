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

#include "satree/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "satree/errors.hpp"

namespace satree {

namespace {

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv(const std::string& row) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const char c = row[i];
    if (quoted) {
      if (c == '"' && i + 1 < row.size() && row[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  return cells;
}

template <typename T>
std::string optional_cell(const std::optional<T>& value) {
  return value ? std::to_string(*value) : std::string();
}

std::uint64_t parse_u64(const std::string& cell) {
  std::size_t used = 0;
  const auto v = std::stoull(cell, &used);
  if (used != cell.size()) throw UsageError("bad integer cell '" + cell + "'");
  return v;
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw UsageError("unknown format '" + name + "' (expected csv or json)");
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "policy",       "workload",           "n",
      "m",            "seed",               "access_total",
      "adjust_total", "cost_total",         "ws_bound",
      "ratio_cost_over_ws", "mru_violations", "mean_depth_by_rank",
      "opt_cost"};
  return columns;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string to_csv_row(const RunReport& r) {
  std::string depths;
  if (r.mean_depth_by_rank) {
    for (std::size_t i = 0; i < r.mean_depth_by_rank->size(); ++i) {
      if (i) depths += ';';
      depths += format_real((*r.mean_depth_by_rank)[i]);
    }
  }
  std::ostringstream out;
  out << quote_csv(r.policy) << ',' << quote_csv(r.workload) << ',' << r.n << ','
      << r.m << ',' << r.seed << ',' << r.access_total << ',' << r.adjust_total
      << ',' << r.cost_total << ',' << format_real(r.ws_bound) << ','
      << format_real(r.ratio_cost_over_ws) << ',' << optional_cell(r.mru_violations)
      << ',' << depths << ',' << optional_cell(r.opt_cost);
  return out.str();
}

RunReport parse_csv_row(const std::string& row) {
  const std::vector<std::string> cells = split_csv(row);
  if (cells.size() != csv_columns().size()) {
    throw IngestError("<report row>", 0,
                      "row has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(csv_columns().size()));
  }
  RunReport r;
  r.policy = cells[0];
  r.workload = cells[1];
  r.n = parse_u64(cells[2]);
  r.m = parse_u64(cells[3]);
  r.seed = parse_u64(cells[4]);
  r.access_total = parse_u64(cells[5]);
  r.adjust_total = parse_u64(cells[6]);
  r.cost_total = parse_u64(cells[7]);
  r.ws_bound = std::stod(cells[8]);
  r.ratio_cost_over_ws = std::stod(cells[9]);
  if (!cells[10].empty()) r.mru_violations = parse_u64(cells[10]);
  if (!cells[11].empty()) {
    std::vector<double> depths;
    std::istringstream in(cells[11]);
    std::string item;
    while (std::getline(in, item, ';')) depths.push_back(std::stod(item));
    r.mean_depth_by_rank = std::move(depths);
  }
  if (!cells[12].empty()) r.opt_cost = parse_u64(cells[12]);
  return r;
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["policy"] = r.policy;
  j["workload"] = r.workload;
  j["n"] = r.n;
  j["m"] = r.m;
  j["seed"] = r.seed;
  j["access_total"] = r.access_total;
  j["adjust_total"] = r.adjust_total;
  j["cost_total"] = r.cost_total;
  j["ws_bound"] = r.ws_bound;
  j["ratio_cost_over_ws"] = r.ratio_cost_over_ws;
  j["mru_violations"] = r.mru_violations ? nlohmann::json(*r.mru_violations) : nlohmann::json();
  j["mean_depth_by_rank"] =
      r.mean_depth_by_rank ? nlohmann::json(*r.mean_depth_by_rank) : nlohmann::json();
  j["opt_cost"] = r.opt_cost ? nlohmann::json(*r.opt_cost) : nlohmann::json();
  return j;
}

std::string render(const std::vector<RunReport>& reports, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::kCsv) {
    out = csv_header() + "\n";
    for (const auto& r : reports) out += to_csv_row(r) + "\n";
  } else {
    for (const auto& r : reports) out += to_json(r).dump() + "\n";
  }
  return out;
}

void emit(const RunReport& report, ReportFormat format, const std::string& path) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) ||
                     std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open report file " + path);
  if (format == ReportFormat::kCsv) {
    if (fresh) out << csv_header() << '\n';
    out << to_csv_row(report) << '\n';
  } else {
    out << to_json(report).dump() << '\n';
  }
  if (!out) throw std::runtime_error("failed writing report file " + path);
}

}  // namespace satree

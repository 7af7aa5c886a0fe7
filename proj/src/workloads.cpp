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

#include "satree/workloads.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "satree/errors.hpp"

namespace satree {

std::string_view to_string(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::kUniform: return "uniform";
    case WorkloadKind::kZipf: return "zipf";
    case WorkloadKind::kCyclic: return "cyclic";
    case WorkloadKind::kTrace: return "trace";
  }
  return "unknown";
}

WorkloadKind parse_workload_kind(std::string_view name) {
  for (WorkloadKind kind : {WorkloadKind::kUniform, WorkloadKind::kZipf,
                            WorkloadKind::kCyclic, WorkloadKind::kTrace}) {
    if (to_string(kind) == name) return kind;
  }
  throw UsageError("unknown workload '" + std::string(name) +
                   "' (expected uniform, zipf, cyclic or trace)");
}

void WorkloadSpec::validate() const {
  if (n == 0) throw UsageError("workload needs n >= 1");
  switch (kind) {
    case WorkloadKind::kZipf:
      if (!std::isfinite(alpha) || alpha < 0.0) {
        throw UsageError("zipf exponent must be finite and >= 0");
      }
      break;
    case WorkloadKind::kCyclic:
      if (subset_size < 1 || subset_size > n) {
        throw UsageError("cyclic subset size must lie in [1, n]");
      }
      break;
    case WorkloadKind::kTrace:
      if (path.empty()) throw UsageError("trace workload needs a file path");
      break;
    case WorkloadKind::kUniform:
      break;
  }
}

std::string WorkloadSpec::descriptor() const {
  std::ostringstream out;
  out << to_string(kind);
  switch (kind) {
    case WorkloadKind::kZipf: out << "(alpha=" << alpha << ")"; break;
    case WorkloadKind::kCyclic: out << "(l=" << subset_size << ")"; break;
    case WorkloadKind::kTrace: out << "(" << path << ")"; break;
    case WorkloadKind::kUniform: break;
  }
  return out.str();
}

RequestSequence generate(const WorkloadSpec& spec) {
  spec.validate();
  RequestSequence out;
  if (spec.kind == WorkloadKind::kTrace) return read_trace(spec.path, spec.n);
  out.reserve(spec.m);
  std::mt19937_64 rng(spec.seed);
  switch (spec.kind) {
    case WorkloadKind::kUniform: {
      std::uniform_int_distribution<Item> pick(0, spec.n - 1);
      for (std::size_t t = 0; t < spec.m; ++t) out.push_back(pick(rng));
      break;
    }
    case WorkloadKind::kZipf: {
      std::vector<double> cdf(spec.n);
      double acc = 0.0;
      for (std::size_t r = 1; r <= spec.n; ++r) {
        acc += std::pow(static_cast<double>(r), -spec.alpha);
        cdf[r - 1] = acc;
      }
      std::uniform_real_distribution<double> unit(0.0, acc);
      for (std::size_t t = 0; t < spec.m; ++t) {
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), unit(rng));
        out.push_back(std::min<Item>(static_cast<Item>(it - cdf.begin()), spec.n - 1));
      }
      break;
    }
    case WorkloadKind::kCyclic:
      for (std::size_t t = 0; t < spec.m; ++t) out.push_back(t % spec.subset_size);
      break;
    case WorkloadKind::kTrace:
      break;
  }
  return out;
}

RequestSequence read_trace(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw IngestError(path, 0, "cannot open trace file");
  RequestSequence out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view token(line.data() + first, last - first + 1);
    Item id = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw IngestError(path, line_no, "not a decimal item id: '" + std::string(token) + "'");
    }
    if (id >= n) {
      throw IngestError(path, line_no, "item id " + std::to_string(id) +
                                           " out of range for n = " + std::to_string(n));
    }
    out.push_back(id);
  }
  return out;
}

std::vector<double> empirical_frequencies(const RequestSequence& sequence,
                                          std::size_t n) {
  if (sequence.empty()) return std::vector<double>(n, 1.0 / static_cast<double>(n));
  std::vector<double> freq(n, 0.0);
  for (Item v : sequence) {
    if (v >= n) throw UsageError("request for unknown item " + std::to_string(v));
    freq[v] += 1.0;
  }
  for (double& f : freq) f /= static_cast<double>(sequence.size());
  return freq;
}

}  // namespace satree

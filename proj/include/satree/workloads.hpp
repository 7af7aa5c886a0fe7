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
#include <string>
#include <string_view>
#include <vector>

#include "satree/tree.hpp"

namespace satree {

enum class WorkloadKind { kUniform, kZipf, kCyclic, kTrace };

std::string_view to_string(WorkloadKind kind);
WorkloadKind parse_workload_kind(std::string_view name);

struct WorkloadSpec {
  WorkloadKind kind = WorkloadKind::kUniform;
  std::size_t n = 0;
  std::size_t m = 0;
  double alpha = 1.0;          // zipf exponent
  std::size_t subset_size = 1; // cyclic working-set size
  std::string path;            // trace file
  std::uint64_t seed = 0;

  /// Throws UsageError on an inconsistent spec.
  void validate() const;
  /// Short label used in reports, e.g. "zipf(alpha=1)" or "cyclic(l=4)".
  std::string descriptor() const;
};

using RequestSequence = std::vector<Item>;

/// Realizes a workload. A pure function of its argument, seed included. Item r-1
/// has zipf frequency rank r; cyclic repeats items 0..l-1 in order; trace
/// reads the file (m is ignored for traces).
RequestSequence generate(const WorkloadSpec& spec);

/// Newline-delimited decimal item ids; blank lines and lines starting with
/// '#' are skipped. Throws IngestError naming the offending line.
RequestSequence read_trace(const std::string& path, std::size_t n);

/// Per-item empirical frequencies of a sequence (uniform when empty).
std::vector<double> empirical_frequencies(const RequestSequence& sequence,
                                          std::size_t n);

}  // namespace satree

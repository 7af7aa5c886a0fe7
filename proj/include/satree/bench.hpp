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
#include <span>
#include <vector>

#include "satree/policies.hpp"
#include "satree/report.hpp"
#include "satree/workloads.hpp"

namespace satree {

inline constexpr double kRatioEpsilon = 1e-12;

struct RunConfig {
  PolicyKind policy = PolicyKind::kMoveHalf;
  WorkloadSpec workload;
  // Seeds both the workload (when it is random) and the policy's stream.
  std::uint64_t seed = 0;
  bool check_mru = false;
  bool oracle = false;
};

/// Serves `sequence` with `policy` from the policy's initial layout.
NetworkState simulate(Policy& policy, std::size_t n, std::span<const Item> sequence);

/// Policy instance for a run: static-mfu gets the sequence's empirical
/// frequencies, random-push a stream derived from `seed`.
Policy make_policy(PolicyKind kind, std::uint64_t seed,
                   std::span<const Item> sequence, std::size_t n);

/// Runs one configuration end to end. Throws UsageError for invalid
/// configurations, including an oracle request for n > 7.
RunReport run(const RunConfig& config);

/// Runs configs[i] with seed master + i, possibly on parallel workers, and
/// returns reports in index order.
std::vector<RunReport> run_matrix(std::vector<RunConfig> configs,
                                  std::uint64_t master_seed);

/// Per-rank statistics of Random-Push over several seeded runs.
struct RandomPushStats {
  // Index r-1 holds rank r.
  std::vector<std::uint64_t> depth_samples;
  std::vector<double> depth_sum;
  std::vector<std::uint64_t> w_samples;
  std::vector<double> w_sum;

  double mean_depth(std::size_t rank) const;
  double mean_w(std::size_t rank) const;
  std::uint64_t total_depth_samples() const;
};

/// Serves `workload` (its seed replaced by each entry of `seeds`) with
/// Random-Push and, for every request past `warmup`, records the requested
/// item's rank and depth at request time, and the number of requests since
/// its previous access whose target sat strictly deeper than it did.
RandomPushStats measure_random_push(const WorkloadSpec& workload,
                                    std::span<const std::uint64_t> seeds,
                                    std::size_t warmup);

/// Mean depth per rank (index r-1); NaN where a rank was never sampled.
std::vector<double> measure_depth_by_rank(const WorkloadSpec& workload,
                                          std::span<const std::uint64_t> seeds,
                                          std::size_t warmup);

/// Mean W per rank (index r-1); NaN where a rank was never sampled.
std::vector<double> measure_w(const WorkloadSpec& workload,
                              std::span<const std::uint64_t> seeds,
                              std::size_t warmup);

}  // namespace satree

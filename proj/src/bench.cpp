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

#include "satree/bench.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <thread>

#include "satree/errors.hpp"
#include "satree/opt_oracle.hpp"

namespace satree {

namespace {

// Separates the policy's random stream from the workload's.
std::uint64_t policy_stream(std::uint64_t seed) {
  return seed ^ 0x9e3779b97f4a7c15ULL;
}

double nan_mean(double sum, std::uint64_t count) {
  return count ? sum / static_cast<double>(count)
               : std::numeric_limits<double>::quiet_NaN();
}

// Serves one sequence with Random-Push and folds rank/depth/W samples into
// `stats`.
void accumulate_random_push(std::span<const Item> sequence, std::size_t n,
                            std::uint64_t seed, std::size_t warmup,
                            RandomPushStats& stats) {
  Rng rng(policy_stream(seed));
  NetworkState state{Tree(n)};
  std::vector<std::uint64_t> deeper(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t t = 0; t < sequence.size(); ++t) {
    const Item u = sequence[t];
    const std::size_t depth = state.tree.item_depth(u);
    const std::size_t rank = state.ranks.rank(u);
    if (t >= warmup) {
      ++stats.depth_samples[rank - 1];
      stats.depth_sum[rank - 1] += static_cast<double>(depth);
      if (seen[u]) {
        ++stats.w_samples[rank - 1];
        stats.w_sum[rank - 1] += static_cast<double>(deeper[u]);
      }
    }
    // This request is deeper than every item above depth(u).
    const Server shallower_end = heap::level_begin(depth);
    for (Server s = 0; s < shallower_end; ++s) ++deeper[state.tree.guest(s)];
    deeper[u] = 0;
    seen[u] = true;
    serve_random_push(state, u, rng);
  }
}

}  // namespace

NetworkState simulate(Policy& policy, std::size_t n, std::span<const Item> sequence) {
  NetworkState state(policy.initial_tree(n));
  for (Item u : sequence) policy.serve(state, u);
  return state;
}

Policy make_policy(PolicyKind kind, std::uint64_t seed,
                   std::span<const Item> sequence, std::size_t n) {
  if (kind == PolicyKind::kStaticMfu) {
    return Policy(kind, 0,
                  empirical_frequencies(RequestSequence(sequence.begin(), sequence.end()), n));
  }
  return Policy(kind, policy_stream(seed));
}

RunReport run(const RunConfig& config) {
  const std::size_t n = config.workload.n;
  if (!heap::is_perfect_size(n)) {
    throw UsageError("n must be 2^d - 1 for some d >= 1, got " + std::to_string(n));
  }
  if (config.oracle && n > 7) {
    throw UsageError("offline oracle refused: n = " + std::to_string(n) +
                     " exceeds 7");
  }
  WorkloadSpec spec = config.workload;
  spec.seed = config.seed;
  const RequestSequence sequence = generate(spec);

  Policy policy = make_policy(config.policy, config.seed, sequence, n);
  NetworkState state(policy.initial_tree(n));
  const Tree initial = state.tree;

  RunReport report;
  report.policy = std::string(to_string(config.policy));
  report.workload = spec.descriptor();
  report.n = n;
  report.m = sequence.size();
  report.seed = config.seed;

  std::uint64_t violations = 0;
  std::vector<std::uint64_t> depth_samples;
  std::vector<double> depth_sum;
  const bool track_depth = config.policy == PolicyKind::kRandomPush;
  if (track_depth) {
    depth_samples.assign(n, 0);
    depth_sum.assign(n, 0.0);
  }
  for (Item u : sequence) {
    if (track_depth) {
      const std::size_t r = state.ranks.rank(u);
      ++depth_samples[r - 1];
      depth_sum[r - 1] += static_cast<double>(state.tree.item_depth(u));
    }
    policy.serve(state, u);
    if (config.check_mru && !is_mru(state.tree, state.ranks)) ++violations;
  }

  report.access_total = state.ledger.access_total();
  report.adjust_total = state.ledger.adjust_total();
  report.cost_total = state.ledger.total();
  report.ws_bound = state.ws.total;
  report.ratio_cost_over_ws =
      static_cast<double>(report.cost_total) / std::max(report.ws_bound, kRatioEpsilon);
  if (config.check_mru) report.mru_violations = violations;
  if (track_depth) {
    std::vector<double> means(n);
    for (std::size_t r = 0; r < n; ++r) means[r] = nan_mean(depth_sum[r], depth_samples[r]);
    report.mean_depth_by_rank = std::move(means);
  }
  if (config.oracle) {
    const OptOracle oracle(n);
    report.opt_cost = oracle.opt_cost(sequence, initial);
  }
  return report;
}

std::vector<RunReport> run_matrix(std::vector<RunConfig> configs,
                                  std::uint64_t master_seed) {
  for (std::size_t i = 0; i < configs.size(); ++i) configs[i].seed = master_seed + i;
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::vector<RunReport> reports(configs.size());
  for (std::size_t begin = 0; begin < configs.size(); begin += workers) {
    const std::size_t end = std::min(configs.size(), begin + workers);
    std::vector<std::future<RunReport>> batch;
    for (std::size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, run, std::cref(configs[i])));
    }
    for (std::size_t i = begin; i < end; ++i) reports[i] = batch[i - begin].get();
  }
  return reports;
}

double RandomPushStats::mean_depth(std::size_t rank) const {
  return nan_mean(depth_sum.at(rank - 1), depth_samples.at(rank - 1));
}

double RandomPushStats::mean_w(std::size_t rank) const {
  return nan_mean(w_sum.at(rank - 1), w_samples.at(rank - 1));
}

std::uint64_t RandomPushStats::total_depth_samples() const {
  std::uint64_t total = 0;
  for (auto c : depth_samples) total += c;
  return total;
}

RandomPushStats measure_random_push(const WorkloadSpec& workload,
                                    std::span<const std::uint64_t> seeds,
                                    std::size_t warmup) {
  const std::size_t n = workload.n;
  if (!heap::is_perfect_size(n)) {
    throw UsageError("n must be 2^d - 1 for some d >= 1, got " + std::to_string(n));
  }
  RandomPushStats stats;
  stats.depth_samples.assign(n, 0);
  stats.depth_sum.assign(n, 0.0);
  stats.w_samples.assign(n, 0);
  stats.w_sum.assign(n, 0.0);
  for (std::uint64_t seed : seeds) {
    WorkloadSpec spec = workload;
    spec.seed = seed;
    accumulate_random_push(generate(spec), n, seed, warmup, stats);
  }
  return stats;
}

std::vector<double> measure_depth_by_rank(const WorkloadSpec& workload,
                                          std::span<const std::uint64_t> seeds,
                                          std::size_t warmup) {
  const RandomPushStats stats = measure_random_push(workload, seeds, warmup);
  std::vector<double> out(workload.n);
  for (std::size_t r = 1; r <= workload.n; ++r) out[r - 1] = stats.mean_depth(r);
  return out;
}

std::vector<double> measure_w(const WorkloadSpec& workload,
                              std::span<const std::uint64_t> seeds,
                              std::size_t warmup) {
  const RandomPushStats stats = measure_random_push(workload, seeds, warmup);
  std::vector<double> out(workload.n);
  for (std::size_t r = 1; r <= workload.n; ++r) out[r - 1] = stats.mean_w(r);
  return out;
}

}  // namespace satree

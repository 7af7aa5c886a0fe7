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
#include <vector>

namespace satree::markov {

/// Finite distribution over states 0..size()-1.
struct DepthDistribution {
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
  double mean() const;
  /// P[X > z] for integer z; 1 for z < 0.
  double tail(std::ptrdiff_t z) const;
};

/// Exact distribution after a w-step walk from state 0 on the depth chain
/// over states 0..i-1: from state j < i-1 the walk moves to j+1 with
/// probability 2^-j and stays otherwise; state i-1 is absorbing.
DepthDistribution walk_distribution(std::size_t states, std::size_t steps);

/// All distributions for 0..max_steps steps, computed in one sweep.
std::vector<DepthDistribution> walk_distributions(std::size_t states,
                                                  std::size_t max_steps);

/// Expected final state of the walk above.
double expected_state(std::size_t states, std::size_t steps);

/// sum_{j=0}^{w} C(w,j) ((w-1)/w)^(w-j) (1/w)^j j, which equals 1.
double binomial_identity(std::size_t w);

/// True iff E[state] after w steps has non-increasing first differences for
/// w = 1..max_steps (within 1e-12).
bool concavity_check(std::size_t states, std::size_t max_steps);

/// X is stochastically smaller than Y: P[X > z] <= P[Y > z] for every z.
/// Shorter supports are padded with zeros.
bool stochastically_leq(const DepthDistribution& x, const DepthDistribution& y,
                        double tolerance = 1e-12);

/// Sampled version: `empirical` holds the observed frequencies (summing to 1)
/// of `trials` draws of X. Passes
/// when every empirical tail stays below the exact tail of Y plus `sigmas`
/// binomial standard errors, sqrt(p(1-p)/trials) with p the exact tail.
bool stochastically_leq_sampled(const DepthDistribution& empirical,
                                std::uint64_t trials,
                                const DepthDistribution& exact, double sigmas);

}  // namespace satree::markov

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

#include "satree/markov.hpp"

#include <algorithm>
#include <cmath>

#include "satree/errors.hpp"

namespace satree::markov {

double DepthDistribution::mean() const {
  double m = 0.0;
  for (std::size_t j = 0; j < probs.size(); ++j) m += static_cast<double>(j) * probs[j];
  return m;
}

double DepthDistribution::tail(std::ptrdiff_t z) const {
  if (z < 0) return 1.0;
  double t = 0.0;
  for (std::size_t j = static_cast<std::size_t>(z) + 1; j < probs.size(); ++j) {
    t += probs[j];
  }
  return t;
}

namespace {

void step(std::vector<double>& p) {
  const std::size_t absorbing = p.size() - 1;
  // Walk downwards so p[j] still holds the pre-step mass when it moves.
  for (std::size_t j = absorbing; j > 0; --j) {
    const double up = std::ldexp(p[j - 1], -static_cast<int>(j - 1));
    p[j] += up;
    p[j - 1] -= up;
  }
}

}  // namespace

std::vector<DepthDistribution> walk_distributions(std::size_t states,
                                                  std::size_t max_steps) {
  if (states < 1) throw UsageError("the chain needs at least one state");
  std::vector<DepthDistribution> out;
  out.reserve(max_steps + 1);
  std::vector<double> p(states, 0.0);
  p[0] = 1.0;
  out.push_back({p});
  for (std::size_t w = 1; w <= max_steps; ++w) {
    step(p);
    out.push_back({p});
  }
  return out;
}

DepthDistribution walk_distribution(std::size_t states, std::size_t steps) {
  return walk_distributions(states, steps).back();
}

double expected_state(std::size_t states, std::size_t steps) {
  return walk_distribution(states, steps).mean();
}

double binomial_identity(std::size_t w) {
  if (w < 1) throw UsageError("binomial identity needs w >= 1");
  const double wd = static_cast<double>(w);
  const double stay = (wd - 1.0) / wd;
  const double move = 1.0 / wd;
  double sum = 0.0;
  double choose = 1.0;  // C(w, j)
  for (std::size_t j = 0; j <= w; ++j) {
    // std::pow(0, 0) is 1, the convention this sum needs at w = 1.
    const double term = choose * std::pow(stay, static_cast<double>(w - j)) *
                        std::pow(move, static_cast<double>(j)) *
                        static_cast<double>(j);
    sum += term;
    choose = choose * static_cast<double>(w - j) / static_cast<double>(j + 1);
  }
  return sum;
}

bool concavity_check(std::size_t states, std::size_t max_steps) {
  if (max_steps < 2) throw UsageError("concavity check needs max_steps >= 2");
  const auto dists = walk_distributions(states, max_steps);
  double prev_diff = dists[1].mean() - dists[0].mean();
  for (std::size_t w = 2; w <= max_steps; ++w) {
    const double diff = dists[w].mean() - dists[w - 1].mean();
    if (diff > prev_diff + 1e-12) return false;
    prev_diff = diff;
  }
  return true;
}

bool stochastically_leq(const DepthDistribution& x, const DepthDistribution& y,
                        double tolerance) {
  const std::size_t len = std::max(x.size(), y.size());
  for (std::size_t z = 0; z < len; ++z) {
    const auto zz = static_cast<std::ptrdiff_t>(z);
    if (x.tail(zz) > y.tail(zz) + tolerance) return false;
  }
  return true;
}

bool stochastically_leq_sampled(const DepthDistribution& empirical,
                                std::uint64_t trials,
                                const DepthDistribution& exact, double sigmas) {
  if (trials == 0) throw UsageError("sampled dominance needs at least one trial");
  const std::size_t len = std::max(empirical.size(), exact.size());
  for (std::size_t z = 0; z < len; ++z) {
    const auto zz = static_cast<std::ptrdiff_t>(z);
    const double p = exact.tail(zz);
    const double margin =
        sigmas * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    if (empirical.tail(zz) > p + margin + 1e-12) return false;
  }
  return true;
}

}  // namespace satree::markov

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>
#include <random>

#include "satree/markov.hpp"

using namespace satree::markov;

namespace {

// Sums the probability of every coin-flip history, one branch per step.
std::vector<double> enumerate_walk(std::size_t states, std::size_t steps) {
  std::vector<double> out(states, 0.0);
  std::function<void(std::size_t, std::size_t, double)> go =
      [&](std::size_t state, std::size_t left, double p) {
        if (left == 0) {
          out[state] += p;
          return;
        }
        if (state + 1 == states) {
          go(state, left - 1, p);
          return;
        }
        const double up = std::ldexp(1.0, -static_cast<int>(state));
        go(state + 1, left - 1, p * up);
        if (up < 1.0) go(state, left - 1, p * (1.0 - up));
      };
  go(0, steps, 1.0);
  return out;
}

DepthDistribution random_distribution(std::size_t size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DepthDistribution d{std::vector<double>(size)};
  double sum = 0.0;
  for (auto& p : d.probs) sum += (p = unit(rng));
  for (auto& p : d.probs) p /= sum;
  return d;
}

}  // namespace

TEST_CASE("walk distribution examples") {
  const DepthDistribution d = walk_distribution(3, 2);
  REQUIRE(d.size() == 3);
  CHECK(d.probs[0] == 0.0);
  CHECK(d.probs[1] == doctest::Approx(0.5));
  CHECK(d.probs[2] == doctest::Approx(0.5));
  CHECK(walk_distribution(2, 100).mean() == 1.0);
  CHECK(expected_state(3, 2) == doctest::Approx(1.5));
  CHECK(walk_distribution(5, 0).probs[0] == 1.0);
}

TEST_CASE("walk distribution matches path enumeration") {
  for (std::size_t states = 1; states <= 8; ++states) {
    for (std::size_t steps = 0; steps <= 12; ++steps) {
      const auto exact = walk_distribution(states, steps);
      const auto brute = enumerate_walk(states, steps);
      for (std::size_t j = 0; j < states; ++j) {
        REQUIRE(exact.probs[j] == doctest::Approx(brute[j]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("walk distribution invariants") {
  const auto all = walk_distributions(16, 200);
  REQUIRE(all.size() == 201);
  for (std::size_t w = 0; w < all.size(); ++w) {
    double sum = 0.0;
    for (std::size_t j = 0; j < all[w].size(); ++j) {
      CHECK(all[w].probs[j] >= 0.0);
      sum += all[w].probs[j];
      if (j > w) CHECK(all[w].probs[j] == 0.0);
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    if (w > 0) CHECK(all[w].mean() >= all[w - 1].mean());
    CHECK(all[w].probs == walk_distribution(16, w).probs);
  }
  CHECK(expected_state(64, 1024) < 11.0);
}

TEST_CASE("binomial identity") {
  CHECK(binomial_identity(1) == doctest::Approx(1.0));
  CHECK(binomial_identity(2) == doctest::Approx(1.0));
  for (std::size_t w = 1; w <= 50; ++w) CHECK(std::abs(binomial_identity(w) - 1.0) < 1e-9);
}

TEST_CASE("concavity") {
  CHECK(concavity_check(2, 16));
  CHECK(concavity_check(16, 256));
  CHECK(concavity_check(64, 1024));
}

TEST_CASE("stochastic dominance") {
  const DepthDistribution a{{0.5, 0.5}};
  const DepthDistribution b{{0.25, 0.5, 0.25}};
  CHECK(stochastically_leq(a, b));
  CHECK_FALSE(stochastically_leq(b, a));
  CHECK(stochastically_leq(a, a));
  CHECK(a.tail(-1) == 1.0);
  CHECK(a.tail(0) == doctest::Approx(0.5));
  CHECK(a.tail(5) == 0.0);

  SUBCASE("antisymmetry on random pairs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const DepthDistribution x = random_distribution(4, rng);
      DepthDistribution y = trial % 2 ? x : random_distribution(4, rng);
      if (stochastically_leq(x, y) && stochastically_leq(y, x)) {
        for (std::ptrdiff_t z = -1; z < 4; ++z) CHECK(x.tail(z) == doctest::Approx(y.tail(z)));
      }
    }
  }
  SUBCASE("more steps dominate fewer") {
    for (std::size_t w = 1; w < 40; ++w) {
      CHECK(stochastically_leq(walk_distribution(8, w - 1), walk_distribution(8, w)));
    }
  }
  SUBCASE("sampled comparison") {
    const DepthDistribution exact = walk_distribution(4, 4);
    std::mt19937_64 rng(17);
    std::discrete_distribution<std::size_t> draw(exact.probs.begin(), exact.probs.end());
    const std::uint64_t trials = 20000;
    DepthDistribution hist{std::vector<double>(4, 0.0)};
    for (std::uint64_t t = 0; t < trials; ++t) hist.probs[draw(rng)] += 1.0 / trials;
    CHECK(stochastically_leq_sampled(hist, trials, exact, 4.0));
    // Everything in the top state is not dominated by a walk of 4 steps.
    const DepthDistribution top{{0.0, 0.0, 0.0, 1.0}};
    CHECK_FALSE(stochastically_leq_sampled(top, trials, exact, 3.0));
  }
}

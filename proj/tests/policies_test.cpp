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

#include <algorithm>
#include <numeric>
#include <random>

#include "satree/errors.hpp"
#include "satree/policies.hpp"

using namespace satree;

namespace {

// A seed whose first draw sends the random descent left (bit 0) or right.
std::uint64_t seed_with_first_bit(std::uint64_t bit) {
  for (std::uint64_t seed = 0;; ++seed) {
    Rng probe(seed);
    if ((probe() >> 63) == bit) return seed;
  }
}

void check_bijection(const Tree& t) {
  for (Server s = 0; s < t.size(); ++s) REQUIRE(t.host(t.guest(s)) == s);
}

// Exhaustive minimum of the expected path length over every layout.
double brute_force_min_epl(const std::vector<double>& freq) {
  std::vector<Item> g(freq.size());
  std::iota(g.begin(), g.end(), Item{0});
  double best = 1e300;
  do {
    double epl = 0.0;
    for (Server s = 0; s < g.size(); ++s) epl += freq[g[s]] * static_cast<double>(heap::depth(s));
    best = std::min(best, epl);
  } while (std::next_permutation(g.begin(), g.end()));
  return best;
}

}  // namespace

TEST_CASE("move-half") {
  SUBCASE("root request is free") {
    NetworkState st{Tree(7)};
    serve_move_half(st, 0);
    CHECK(st.ledger.total() == 0);
    CHECK(st.tree == Tree(7));
  }
  SUBCASE("depth-1 request swaps with the root item") {
    NetworkState st{Tree(7)};
    serve_move_half(st, 2);
    CHECK(st.ledger.access_total() == 1);
    CHECK(st.ledger.adjust_total() == 1);
    CHECK(st.tree.host(2) == 0);
    CHECK(st.ranks.rank(2) == 1);
  }
  SUBCASE("depth-3 request trades places with the oldest depth-1 item") {
    // Identity layout: item 2 (rank 3) is the oldest at depth 1, on the right
    // branch; item 7 sits on the leftmost leaf. Path 7-3-1-0-2 has 4 hops.
    NetworkState st{Tree(15)};
    serve_move_half(st, 7);
    CHECK(st.ledger.access_total() == 3);
    CHECK(st.ledger.adjust_total() == 2 * 4 - 1);
    CHECK(st.ledger.adjust_total() <= 9);
    CHECK(st.tree.host(7) == 2);
    CHECK(st.tree.host(2) == 7);
  }
  SUBCASE("per-request cost stays within four times the access") {
    std::mt19937_64 rng(1);
    NetworkState st{Tree(63)};
    std::uniform_int_distribution<Item> pick(0, 62);
    for (int t = 0; t < 3000; ++t) {
      serve_move_half(st, pick(rng));
      const RequestCost c = st.ledger.last();
      REQUIRE(c.total() <= 4 * c.access);
    }
    check_bijection(st.tree);
  }
}

TEST_CASE("random-push") {
  SUBCASE("root request changes nothing") {
    Rng rng(0);
    NetworkState st{Tree(7)};
    serve_random_push(st, 0, rng);
    CHECK(st.ledger.total() == 0);
    CHECK(st.tree == Tree(7));
  }
  SUBCASE("depth-1 request, path lands on the requested server") {
    Rng rng(seed_with_first_bit(0));
    NetworkState st{Tree(7)};
    serve_random_push(st, 1, rng);
    CHECK(st.tree.host(1) == 0);
    CHECK(st.tree.host(0) == 1);
    CHECK(st.tree.host(2) == 2);
    CHECK(st.ledger.access_total() == 1);
    CHECK(st.ledger.adjust_total() == 2);
  }
  SUBCASE("depth-1 request, path lands on the sibling") {
    Rng rng(seed_with_first_bit(1));
    NetworkState st{Tree(7)};
    serve_random_push(st, 1, rng);
    // 1 -> root, old root 0 -> server 2, its guest 2 -> server 1.
    CHECK(st.tree.host(1) == 0);
    CHECK(st.tree.host(0) == 2);
    CHECK(st.tree.host(2) == 1);
    CHECK(st.ledger.adjust_total() == 1 + 1 + 2);
    CHECK(st.ledger.total() <= 5);
  }
  SUBCASE("bounds and monotone depths on random sequences") {
    std::mt19937_64 seq_rng(4);
    Rng rng(8);
    NetworkState st{Tree(127)};
    std::uniform_int_distribution<Item> pick(0, 126);
    for (int t = 0; t < 3000; ++t) {
      const Item u = pick(seq_rng);
      const Tree before = st.tree;
      const std::size_t k = before.item_depth(u);
      serve_random_push(st, u, rng);
      const RequestCost c = st.ledger.last();
      REQUIRE(c.total() <= 5 * c.access);
      REQUIRE(st.tree.host(u) == 0);
      std::size_t moved = 0;
      for (Item v = 0; v < 127; ++v) {
        if (v == u) continue;
        const std::size_t d0 = before.item_depth(v);
        const std::size_t d1 = st.tree.item_depth(v);
        REQUIRE(d1 >= d0);
        REQUIRE(d1 <= d0 + 1);
        if (d1 == d0 + 1) {
          // Pushed items sat on one root path above depth k.
          REQUIRE(d0 < k);
          ++moved;
        } else if (before.host(v) != st.tree.host(v)) {
          // The displaced end-of-path item fills u's old server.
          REQUIRE(st.tree.host(v) == before.host(u));
        }
      }
      REQUIRE(moved == k);
    }
    check_bijection(st.tree);
  }
  SUBCASE("same seed, same outcome") {
    std::vector<Item> seq(2000);
    std::mt19937_64 seq_rng(6);
    for (auto& v : seq) v = seq_rng() % 31;
    auto play = [&](std::uint64_t seed) {
      Rng rng(seed);
      NetworkState st{Tree(31)};
      for (Item v : seq) serve_random_push(st, v, rng);
      return st;
    };
    const NetworkState a = play(42);
    const NetworkState b = play(42);
    CHECK(a.tree == b.tree);
    CHECK(a.ledger.per_request() == b.ledger.per_request());
  }
}

TEST_CASE("max-push") {
  SUBCASE("root request only refreshes the rank") {
    NetworkState st{Tree(7)};
    serve_max_push(st, 0);
    CHECK(st.ledger.total() == 0);
    CHECK(st.ranks.clock() == 1);
  }
  SUBCASE("depth-1 request on three items") {
    NetworkState st{Tree(3)};
    serve_max_push(st, 1);
    CHECK(st.tree.host(1) == 0);
    CHECK(st.tree.host(0) == 1);
    CHECK(st.ledger.adjust_total() == 2);
  }
  SUBCASE("MRU property survives random sequences") {
    for (std::size_t n : {7, 15, 31}) {
      std::mt19937_64 rng(n);
      NetworkState st{Tree(n)};
      for (int t = 0; t < 2000; ++t) {
        serve_max_push(st, rng() % n);
        REQUIRE(is_mru(st.tree, st.ranks));
      }
    }
  }
  SUBCASE("non-MRU input is rejected") {
    NetworkState st{Tree(7)};
    st.tree.swap(1, st.ledger);
    CHECK_THROWS_AS(serve_max_push(st, 5), ContractError);
  }
  SUBCASE("adjustment grows quadratically in the worst layout") {
    // Ranks stay those of the identity layout; only the positions inside each
    // level vary. The oldest item of each level is its highest id. Enumerate
    // every placement of the oldest depth-1, depth-2 and depth-3 items.
    const std::size_t k = 3;
    const Tree probe(15);
    std::uint64_t worst = 0;
    for (Server s1 = 1; s1 <= 2; ++s1) {
      for (Server s2 = 3; s2 <= 6; ++s2) {
        for (Server s3 = 7; s3 <= 14; ++s3) {
          std::vector<Item> g(15);
          std::iota(g.begin(), g.end(), Item{0});
          std::swap(g[s1], g[2]);
          std::swap(g[s2], g[6]);
          std::swap(g[s3], g[14]);
          NetworkState st{Tree(15)};
          st.tree = Tree::from_guests(g);
          REQUIRE(is_mru(st.tree, st.ranks));
          serve_max_push(st, 14);
          const std::uint64_t hops = probe.distance(s2, s3) + probe.distance(s1, s2) +
                                     probe.distance(0, s1) + k;
          CHECK(st.ledger.adjust_total() == hops);
          worst = std::max(worst, st.ledger.adjust_total());
        }
      }
    }
    CHECK(worst >= k * (k - 1) / 2);
    CHECK(static_cast<double>(worst) > k * k / 2.0);
    CHECK(worst == 5 + 3 + 1 + 3);
  }
}

TEST_CASE("fixed baseline never adjusts") {
  NetworkState st{Tree(31)};
  for (Item v = 0; v < 31; ++v) serve_fixed(st, (v * 13) % 31);
  CHECK(st.ledger.adjust_total() == 0);
  CHECK(st.tree == Tree(31));
}

TEST_CASE("static MFU") {
  SUBCASE("uniform frequencies give the identity layout") {
    const std::vector<double> f(7, 1.0 / 7.0);
    CHECK(build_static_mfu(f) == Tree(7));
    CHECK(expected_path_length(Tree(7), f) == doctest::Approx(10.0 / 7.0));
  }
  SUBCASE("three items") {
    const std::vector<double> f = {0.2, 0.5, 0.3};
    const Tree t = build_static_mfu(f);
    CHECK(t.guest(0) == 1);
    CHECK(expected_path_length(t, f) == doctest::Approx(0.5));
    CHECK(expected_path_length(Tree(3), std::vector<double>(3, 1.0 / 3.0)) ==
          doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("all mass on the root item") {
    CHECK(expected_path_length(Tree(3), std::vector<double>{1.0, 0.0, 0.0}) == 0.0);
  }
  SUBCASE("matches the exhaustive optimum and the MFU ordering") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> f(7);
      double sum = 0.0;
      for (auto& x : f) sum += (x = unit(rng));
      for (auto& x : f) x /= sum;
      const Tree t = build_static_mfu(f);
      CHECK(expected_path_length(t, f) == doctest::Approx(brute_force_min_epl(f)).epsilon(1e-12));
      for (Item a = 0; a < 7; ++a) {
        for (Item b = 0; b < 7; ++b) {
          if (f[a] >= f[b] && a != b && f[a] != f[b]) CHECK(t.item_depth(a) <= t.item_depth(b));
        }
      }
    }
  }
  SUBCASE("malformed distributions") {
    CHECK_THROWS_AS(build_static_mfu(std::vector<double>{0.5, 0.5}), UsageError);
    CHECK_THROWS_AS(build_static_mfu(std::vector<double>{0.5, 0.3, 0.3}), UsageError);
    CHECK_THROWS_AS(build_static_mfu(std::vector<double>{1.2, -0.1, -0.1}), UsageError);
  }
}

TEST_CASE("policy names and dispatch") {
  for (PolicyKind k : all_policy_kinds()) CHECK(parse_policy_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_policy_kind("splay"), UsageError);

  Policy mfu(PolicyKind::kStaticMfu, 0, {0.1, 0.1, 0.8});
  CHECK(mfu.initial_tree(3).guest(0) == 2);
  CHECK_THROWS_AS(mfu.initial_tree(7), UsageError);

  for (PolicyKind k : all_policy_kinds()) {
    Policy p(k, 3, std::vector<double>(15, 1.0 / 15.0));
    NetworkState st(p.initial_tree(15));
    for (Item v = 0; v < 200; ++v) p.serve(st, (v * v) % 15);
    check_bijection(st.tree);
    CHECK(st.ws.terms == 200);
  }
}

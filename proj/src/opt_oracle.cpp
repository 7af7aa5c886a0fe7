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

#include "satree/opt_oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "satree/errors.hpp"

namespace satree {

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lexicographic rank of a permutation of 0..n-1 (Lehmer code).
std::uint32_t rank_permutation(std::span<const Item> perm) {
  const std::size_t n = perm.size();
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (perm[j] < perm[i]) ++smaller;
    }
    r = static_cast<std::uint32_t>(r * (n - i) + smaller);
  }
  return r;
}

std::vector<Item> unrank_permutation(std::uint32_t r, std::size_t n) {
  std::vector<std::size_t> digits(n);
  for (std::size_t i = n; i > 0; --i) {
    digits[i - 1] = r % (n - i + 1);
    r /= static_cast<std::uint32_t>(n - i + 1);
  }
  std::vector<Item> pool(n);
  std::iota(pool.begin(), pool.end(), Item{0});
  std::vector<Item> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = pool[digits[i]];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return perm;
}

}  // namespace

OptOracle::OptOracle(std::size_t n) : n_(n) {
  if (n != 3 && n != 7) {
    throw UsageError("the offline oracle only handles n = 3 or n = 7, got " +
                     std::to_string(n));
  }
  const std::size_t count = factorial(n);
  depth_.resize(count * n);
  adjacent_.resize(count * (n - 1));
  bfs_memo_.resize(count);
  for (Config c = 0; c < count; ++c) {
    std::vector<Item> guests = unrank_permutation(c, n);
    for (Server s = 0; s < n; ++s) {
      depth_[c * n + guests[s]] = static_cast<std::uint8_t>(heap::depth(s));
    }
    for (Server s = 1; s < n; ++s) {
      std::swap(guests[s], guests[heap::parent(s)]);
      adjacent_[c * (n - 1) + (s - 1)] = rank_permutation(guests);
      std::swap(guests[s], guests[heap::parent(s)]);
    }
  }
}

std::size_t OptOracle::max_requests() const { return n_ == 3 ? 12 : 8; }

OptOracle::Config OptOracle::encode(const Tree& layout) const {
  if (layout.size() != n_) throw UsageError("layout size does not match oracle");
  return rank_permutation(layout.guests());
}

Tree OptOracle::decode(Config c) const {
  if (c >= configurations()) throw UsageError("configuration index out of range");
  return Tree::from_guests(unrank_permutation(c, n_));
}

std::size_t OptOracle::swap_distance(const Tree& a, const Tree& b) {
  if (a.size() != n_ || b.size() != n_) {
    throw UsageError("swap_distance needs two layouts of the oracle's size");
  }
  const Config src = encode(a);
  std::vector<std::uint8_t>& dist = bfs_memo_[src];
  if (dist.empty()) {
    constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();
    dist.assign(configurations(), kUnseen);
    std::queue<Config> frontier;
    dist[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      const Config c = frontier.front();
      frontier.pop();
      for (Config next : neighbours(c)) {
        if (dist[next] == kUnseen) {
          dist[next] = static_cast<std::uint8_t>(dist[c] + 1);
          frontier.push(next);
        }
      }
    }
  }
  return dist[encode(b)];
}

void OptOracle::relax(std::vector<std::uint32_t>& cost) const {
  // Multi-source Dijkstra over unit-weight swap edges.
  using Entry = std::pair<std::uint32_t, Config>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (Config c = 0; c < cost.size(); ++c) {
    if (cost[c] != std::numeric_limits<std::uint32_t>::max()) queue.push({cost[c], c});
  }
  while (!queue.empty()) {
    const auto [d, c] = queue.top();
    queue.pop();
    if (d != cost[c]) continue;
    for (Config next : neighbours(c)) {
      if (d + 1 < cost[next]) {
        cost[next] = d + 1;
        queue.push({d + 1, next});
      }
    }
  }
}

std::uint64_t OptOracle::opt_cost(std::span<const Item> sequence,
                                  const Tree& initial) const {
  if (initial.size() != n_) throw UsageError("layout size does not match oracle");
  if (sequence.size() > max_requests()) {
    throw UsageError("oracle instance too large: " +
                     std::to_string(sequence.size()) + " requests, at most " +
                     std::to_string(max_requests()) + " for n = " +
                     std::to_string(n_));
  }
  for (Item v : sequence) {
    if (v >= n_) throw UsageError("request for unknown item " + std::to_string(v));
  }
  if (sequence.empty()) return 0;

  std::vector<std::uint32_t> cost(configurations(),
                                  std::numeric_limits<std::uint32_t>::max());
  cost[encode(initial)] = 0;
  for (Item v : sequence) {
    relax(cost);
    for (Config c = 0; c < cost.size(); ++c) {
      cost[c] += static_cast<std::uint32_t>(item_depth(c, v));
    }
  }
  return *std::min_element(cost.begin(), cost.end());
}

}  // namespace satree

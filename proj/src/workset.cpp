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

#include "satree/workset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "satree/errors.hpp"

namespace satree {

std::size_t floor_log2(std::size_t r) {
  if (r == 0) throw UsageError("floor_log2 of zero");
  return static_cast<std::size_t>(std::bit_width(r)) - 1;
}

RankTable::RankTable(const Tree& initial) : last_(initial.size()) {
  for (Server s = 0; s < initial.size(); ++s) {
    last_[initial.guest(s)] = -static_cast<std::int64_t>(s) - 1;
  }
}

std::int64_t RankTable::stamp(Item v) const {
  if (v >= last_.size()) {
    throw UsageError("item " + std::to_string(v) + " out of range");
  }
  return last_[v];
}

std::size_t RankTable::rank(Item v) const {
  const std::int64_t mine = stamp(v);
  return 1 + static_cast<std::size_t>(std::count_if(
                 last_.begin(), last_.end(),
                 [mine](std::int64_t other) { return other > mine; }));
}

std::vector<std::size_t> RankTable::ranks() const {
  std::vector<Item> order(last_.size());
  std::iota(order.begin(), order.end(), Item{0});
  std::sort(order.begin(), order.end(),
            [this](Item a, Item b) { return last_[a] > last_[b]; });
  std::vector<std::size_t> out(last_.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) out[order[pos]] = pos + 1;
  return out;
}

void RankTable::touch(Item v) {
  if (v >= last_.size()) {
    throw UsageError("item " + std::to_string(v) + " out of range");
  }
  last_[v] = clock_++;
}

std::size_t record(RankTable& ranks, WsAccumulator& acc, Item v) {
  const std::size_t r = ranks.rank(v);
  acc.total += std::log2(static_cast<double>(r));
  ++acc.terms;
  ranks.touch(v);
  return r;
}

double working_set_bound(const Tree& initial, const std::vector<Item>& sequence) {
  RankTable ranks(initial);
  WsAccumulator acc;
  for (Item v : sequence) record(ranks, acc, v);
  return acc.total;
}

bool is_mru_beta(const Tree& tree, const RankTable& ranks, std::size_t beta) {
  const std::vector<std::size_t> r = ranks.ranks();
  for (Item v = 0; v < tree.size(); ++v) {
    if (tree.item_depth(v) > floor_log2(r[v]) + beta) return false;
  }
  return true;
}

bool is_mru(const Tree& tree, const RankTable& ranks) {
  const std::vector<std::size_t> r = ranks.ranks();
  for (Item v = 0; v < tree.size(); ++v) {
    if (tree.item_depth(v) != floor_log2(r[v])) return false;
  }
  return true;
}

BadPairs bad_pairs(const Tree& tree, const RankTable& ranks) {
  const std::size_t n = tree.size();
  const std::vector<std::size_t> r = ranks.ranks();
  BadPairs out;
  out.alpha.assign(n, 0);
  // Servers are grouped by level in heap order, so everything past the end
  // of s's level is strictly deeper.
  for (Server s = 0; s < n; ++s) {
    const std::size_t rs = r[tree.guest(s)];
    const Server deeper = heap::level_begin(heap::depth(s) + 1);
    for (Server t = deeper; t < n; ++t) {
      if (rs > r[tree.guest(t)]) ++out.alpha[s];
    }
    out.phi += std::log2(1.0 + static_cast<double>(out.alpha[s]) /
                                   std::ldexp(1.0, static_cast<int>(heap::depth(s))));
  }
  out.product = std::exp2(out.phi);
  return out;
}

}  // namespace satree

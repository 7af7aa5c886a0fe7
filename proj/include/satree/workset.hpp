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

#include "satree/tree.hpp"

namespace satree {

/// Recency order over items.
///
/// Every item carries the stamp of its last access. Items never accessed
/// get the virtual stamp -(s+1) for their initial server s, so the initial
/// layout is an MRU tree and all stamps are distinct. rank(v) is the size of
/// v's working set: 1 + the number of items with a newer stamp.
class RankTable {
 public:
  /// Virtual stamps taken from the layout of `initial`.
  explicit RankTable(const Tree& initial);

  std::size_t size() const { return last_.size(); }
  std::int64_t clock() const { return clock_; }
  std::int64_t stamp(Item v) const;

  std::size_t rank(Item v) const;
  /// rank of every item, indexed by item id.
  std::vector<std::size_t> ranks() const;

  /// Stamps v with the current clock and advances it.
  void touch(Item v);

  /// True if a has the larger rank, i.e. was accessed less recently.
  bool older(Item a, Item b) const { return last_[a] < last_[b]; }

 private:
  std::vector<std::int64_t> last_;
  std::int64_t clock_ = 0;
};

/// Running working-set bound: sum of log2(rank) at request time.
struct WsAccumulator {
  double total = 0.0;
  std::uint64_t terms = 0;
};

/// Adds log2(rank(v)) to `acc`, then stamps v. Returns the pre-update rank.
std::size_t record(RankTable& ranks, WsAccumulator& acc, Item v);

/// Working-set bound of a whole sequence served from `initial`.
double working_set_bound(const Tree& initial, const std::vector<Item>& sequence);

/// Every item sits at depth floor(log2 rank).
bool is_mru(const Tree& tree, const RankTable& ranks);

/// Every item sits no deeper than floor(log2 rank) + beta.
bool is_mru_beta(const Tree& tree, const RankTable& ranks, std::size_t beta);

/// Bad-pair diagnostics for one tree.
///
/// A pair (s_i, s_j) is bad when s_i is shallower than s_j but its guest has
/// the larger rank. alpha[s] counts bad pairs led by s, the product is
/// B = prod_s (1 + alpha[s] / 2^depth(s)) and phi = log2 B. B is reported as
/// exp2(phi) and may overflow to infinity for large trees; phi does not.
struct BadPairs {
  std::vector<std::uint64_t> alpha;
  double product = 1.0;
  double phi = 0.0;
};

BadPairs bad_pairs(const Tree& tree, const RankTable& ranks);

/// floor(log2 r) for r >= 1.
std::size_t floor_log2(std::size_t r);

}  // namespace satree

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

#include "satree/tree.hpp"

namespace satree {

/// Exact offline optimum for tiny trees (n = 3 or n = 7).
///
/// Configurations are layouts, encoded as the lexicographic rank of the
/// server -> item permutation. Two configurations are adjacent when one
/// parent-child swap turns one into the other. The optimum may rearrange
/// freely before every request, paying the swap distance, and then pays the
/// depth of the requested item.
class OptOracle {
 public:
  using Config = std::uint32_t;

  explicit OptOracle(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t configurations() const { return depth_.size() / n_; }
  /// Longest request sequence opt_cost accepts for this n.
  std::size_t max_requests() const;

  Config encode(const Tree& layout) const;
  Tree decode(Config c) const;

  /// Minimum number of parent-child swaps between two layouts. BFS results
  /// are memoized per source configuration.
  std::size_t swap_distance(const Tree& a, const Tree& b);

  /// Minimum total cost of serving `sequence` from `initial`.
  std::uint64_t opt_cost(std::span<const Item> sequence, const Tree& initial) const;

 private:
  std::size_t item_depth(Config c, Item v) const {
    return depth_[static_cast<std::size_t>(c) * n_ + v];
  }
  std::span<const Config> neighbours(Config c) const {
    return {adjacent_.data() + static_cast<std::size_t>(c) * (n_ - 1), n_ - 1};
  }
  // Replaces cost[c] by min over c' of cost[c'] + dist(c', c).
  void relax(std::vector<std::uint32_t>& cost) const;

  std::size_t n_;
  std::vector<std::uint8_t> depth_;  // [config][item]
  std::vector<Config> adjacent_;     // [config][server - 1]
  std::vector<std::vector<std::uint8_t>> bfs_memo_;
};

}  // namespace satree

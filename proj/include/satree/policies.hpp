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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "satree/tree.hpp"
#include "satree/workset.hpp"

namespace satree {

using Rng = std::mt19937_64;

/// Everything one online policy mutates while serving a sequence.
struct NetworkState {
  explicit NetworkState(Tree initial)
      : tree(std::move(initial)), ranks(tree) {}

  Tree tree;
  RankTable ranks;
  WsAccumulator ws;
  CostLedger ledger;
};

// Each serve_* charges access, adjusts the tree, then records the request in
// the rank table, so the working-set term uses the rank at request time.

/// Interchange u with the oldest item at depth floor(k/2), k = depth of u.
void serve_move_half(NetworkState& state, Item u);

/// Move u to the root and push the occupants of a uniformly random
/// root-to-depth-k path down one level each; the item displaced from the end
/// of the path fills u's old server.
void serve_random_push(NetworkState& state, Item u, Rng& rng);

/// Strict MRU maintenance: u goes to the root and the oldest item of every
/// level above u drops one level. Throws ContractError if the tree is not an
/// MRU tree on entry.
void serve_max_push(NetworkState& state, Item u);

/// Access only; the tree never changes.
void serve_fixed(NetworkState& state, Item u);

/// Checks that freq is a probability vector over a perfect-tree item set.
void check_frequencies(std::span<const double> freq);

/// Most-frequently-used layout: items placed top-down, left to right, by
/// descending frequency, ties by ascending item id.
Tree build_static_mfu(std::span<const double> freq);

/// sum_v freq(v) * depth(v).
double expected_path_length(const Tree& tree, std::span<const double> freq);

enum class PolicyKind { kMoveHalf, kRandomPush, kMaxPush, kStaticMfu, kFixed };

std::string_view to_string(PolicyKind kind);
/// Accepts "move-half", "random-push", "max-push", "static-mfu", "fixed".
PolicyKind parse_policy_kind(std::string_view name);
std::vector<PolicyKind> all_policy_kinds();

/// A policy instance with its own random stream.
class Policy {
 public:
  explicit Policy(PolicyKind kind, std::uint64_t seed = 0,
                  std::vector<double> freq = {});

  PolicyKind kind() const { return kind_; }

  /// Starting layout for n items: the MFU layout for static-mfu, identity
  /// otherwise.
  Tree initial_tree(std::size_t n) const;

  void serve(NetworkState& state, Item u);

 private:
  PolicyKind kind_;
  Rng rng_;
  std::vector<double> freq_;
};

}  // namespace satree

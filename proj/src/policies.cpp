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

#include "satree/policies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "satree/errors.hpp"

namespace satree {

namespace {

// Oldest (largest-rank) item among the servers at depth d.
Item oldest_at_depth(const NetworkState& state, std::size_t d) {
  const Server begin = heap::level_begin(d);
  const Server end = heap::level_begin(d + 1);
  Item best = state.tree.guest(begin);
  for (Server s = begin + 1; s < end; ++s) {
    const Item v = state.tree.guest(s);
    if (state.ranks.older(v, best)) best = v;
  }
  return best;
}

void check_request_bound(const RequestCost& cost, std::uint64_t factor,
                         const char* policy) {
  if (cost.total() > factor * cost.access) {
    throw ContractError(std::string(policy) + " charged " +
                        std::to_string(cost.total()) + " for an access of " +
                        std::to_string(cost.access));
  }
}

}  // namespace

void serve_move_half(NetworkState& state, Item u) {
  const std::size_t k = state.tree.access(u, state.ledger);
  if (k >= 1) {
    const Item v = oldest_at_depth(state, k / 2);
    state.tree.interchange(u, v, state.ledger);
    check_request_bound(state.ledger.last(), 4, "move-half");
  }
  record(state.ranks, state.ws, u);
}

void serve_random_push(NetworkState& state, Item u, Rng& rng) {
  const Server s = state.tree.host(u);
  const std::size_t k = state.tree.access(u, state.ledger);
  if (k >= 1) {
    std::vector<Server> path(k + 1);
    path[0] = 0;
    for (std::size_t j = 0; j < k; ++j) {
      path[j + 1] = (rng() >> 63) ? heap::right(path[j]) : heap::left(path[j]);
    }
    // Deepest first so every target is vacant when it is filled; u is lifted
    // out of s before the chain starts.
    std::vector<Move> moves;
    moves.reserve(k + 2);
    if (path[k] != s) moves.push_back({state.tree.guest(path[k]), s});
    for (std::size_t j = k; j > 0; --j) {
      moves.push_back({state.tree.guest(path[j - 1]), path[j]});
    }
    moves.push_back({u, 0});
    state.tree.relocate_chain(moves, state.ledger);
    check_request_bound(state.ledger.last(), 5, "random-push");
  }
  record(state.ranks, state.ws, u);
}

void serve_max_push(NetworkState& state, Item u) {
  if (!is_mru(state.tree, state.ranks)) {
    throw ContractError("max-push requires an MRU tree before each request");
  }
  const Server s = state.tree.host(u);
  const std::size_t k = state.tree.access(u, state.ledger);
  if (k >= 1) {
    std::vector<Item> oldest(k);
    for (std::size_t i = 0; i < k; ++i) oldest[i] = oldest_at_depth(state, i);
    std::vector<Move> moves;
    moves.reserve(k + 1);
    moves.push_back({oldest[k - 1], s});
    for (std::size_t i = k - 1; i > 0; --i) {
      moves.push_back({oldest[i - 1], state.tree.host(oldest[i])});
    }
    moves.push_back({u, 0});
    state.tree.relocate_chain(moves, state.ledger);
  }
  record(state.ranks, state.ws, u);
}

void serve_fixed(NetworkState& state, Item u) {
  state.tree.access(u, state.ledger);
  record(state.ranks, state.ws, u);
}

void check_frequencies(std::span<const double> freq) {
  if (!heap::is_perfect_size(freq.size())) {
    throw UsageError("frequency vector length must be 2^d - 1, got " +
                     std::to_string(freq.size()));
  }
  double sum = 0.0;
  for (double f : freq) {
    if (!std::isfinite(f) || f < 0.0) {
      throw UsageError("frequencies must be finite and non-negative");
    }
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw UsageError("frequencies must sum to 1, got " + std::to_string(sum));
  }
}

Tree build_static_mfu(std::span<const double> freq) {
  check_frequencies(freq);
  std::vector<Item> order(freq.size());
  std::iota(order.begin(), order.end(), Item{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Item a, Item b) { return freq[a] > freq[b]; });
  return Tree::from_guests(std::move(order));
}

double expected_path_length(const Tree& tree, std::span<const double> freq) {
  check_frequencies(freq);
  if (freq.size() != tree.size()) {
    throw UsageError("frequency vector and tree differ in size");
  }
  double total = 0.0;
  for (Item v = 0; v < tree.size(); ++v) {
    total += freq[v] * static_cast<double>(tree.item_depth(v));
  }
  return total;
}

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kMoveHalf: return "move-half";
    case PolicyKind::kRandomPush: return "random-push";
    case PolicyKind::kMaxPush: return "max-push";
    case PolicyKind::kStaticMfu: return "static-mfu";
    case PolicyKind::kFixed: return "fixed";
  }
  return "unknown";
}

PolicyKind parse_policy_kind(std::string_view name) {
  for (PolicyKind kind : all_policy_kinds()) {
    if (to_string(kind) == name) return kind;
  }
  throw UsageError("unknown algorithm '" + std::string(name) +
                   "' (expected move-half, random-push, max-push, static-mfu "
                   "or fixed)");
}

std::vector<PolicyKind> all_policy_kinds() {
  return {PolicyKind::kMoveHalf, PolicyKind::kRandomPush, PolicyKind::kMaxPush,
          PolicyKind::kStaticMfu, PolicyKind::kFixed};
}

Policy::Policy(PolicyKind kind, std::uint64_t seed, std::vector<double> freq)
    : kind_(kind), rng_(seed), freq_(std::move(freq)) {
  if (kind_ == PolicyKind::kStaticMfu) check_frequencies(freq_);
}

Tree Policy::initial_tree(std::size_t n) const {
  if (kind_ == PolicyKind::kStaticMfu) {
    if (freq_.size() != n) {
      throw UsageError("static-mfu frequencies do not match n");
    }
    return build_static_mfu(freq_);
  }
  return Tree(n);
}

void Policy::serve(NetworkState& state, Item u) {
  switch (kind_) {
    case PolicyKind::kMoveHalf: serve_move_half(state, u); return;
    case PolicyKind::kRandomPush: serve_random_push(state, u, rng_); return;
    case PolicyKind::kMaxPush: serve_max_push(state, u); return;
    case PolicyKind::kStaticMfu:
    case PolicyKind::kFixed: serve_fixed(state, u); return;
  }
}

}  // namespace satree

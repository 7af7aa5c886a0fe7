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
#include <string>
#include <vector>

namespace satree {

using Item = std::size_t;
using Server = std::size_t;

/// Access and adjustment charges for one request.
struct RequestCost {
  std::uint64_t access = 0;
  std::uint64_t adjust = 0;

  std::uint64_t total() const { return access + adjust; }
  bool operator==(const RequestCost&) const = default;
};

/// Running totals plus the per-request breakdown.
///
/// A new per-request entry is opened by every access. Adjustments charged
/// before the first access (for example an offline pre-arrangement) open an
/// entry of their own.
class CostLedger {
 public:
  void open_request();
  void charge_access(std::uint64_t units);
  void charge_adjust(std::uint64_t swaps);

  std::uint64_t access_total() const { return access_total_; }
  std::uint64_t adjust_total() const { return adjust_total_; }
  std::uint64_t total() const { return access_total_ + adjust_total_; }
  const std::vector<RequestCost>& per_request() const { return per_request_; }

  // Charges of the most recent request; zero if nothing was charged yet.
  RequestCost last() const;

 private:
  std::uint64_t access_total_ = 0;
  std::uint64_t adjust_total_ = 0;
  std::vector<RequestCost> per_request_;
};

/// One step of a vacancy chain: put `item` on server `to`.
struct Move {
  Item item;
  Server to;
};

/// Items placed on the servers of a perfect binary tree in heap layout.
///
/// Server 0 is the root; the children of s are 2s+1 and 2s+2. The guest and
/// host arrays are kept as mutually inverse permutations of {0..n-1}.
class Tree {
 public:
  /// Identity layout: item i on server i. Throws UsageError unless
  /// n = 2^d - 1 for some d >= 1.
  explicit Tree(std::size_t n);

  /// Layout given as server -> item. Must be a permutation of {0..n-1}.
  static Tree from_guests(std::vector<Item> guests);

  std::size_t size() const { return guest_.size(); }
  // Number of levels, i.e. d for n = 2^d - 1.
  std::size_t levels() const;

  Item guest(Server s) const;
  Server host(Item v) const;
  std::span<const Item> guests() const { return guest_; }

  std::size_t depth(Server s) const;
  std::size_t item_depth(Item v) const { return depth(host(v)); }
  std::size_t distance(Server a, Server b) const;

  /// Servers on the unique a-b path, both endpoints included.
  std::vector<Server> path(Server a, Server b) const;

  /// Root-to-host bits for item v; '0' = left child, '1' = right child.
  std::string routing_header(Item v) const;
  /// Follows a routing header from the root; returns the server reached.
  Server follow_header(const std::string& header) const;

  /// Pays depth(host(v)) as access cost and opens a new request entry.
  std::size_t access(Item v, CostLedger& ledger) const;

  /// Exchanges the guests of s and parent(s). One swap.
  void swap(Server s, CostLedger& ledger);

  /// Exchanges the hosts of u and v by swapping u along the path and then v
  /// back, 2d-1 swaps for path length d. Returns the swaps charged.
  std::uint64_t interchange(Item u, Item v, CostLedger& ledger);

  /// Vacancy-chain relocation. The item of the final move is lifted out
  /// first, so its current host is the initial vacancy; the moves then run in
  /// order and each must land on a vacant server. Each move costs the hop
  /// distance it covers. Returns the total charged.
  std::uint64_t relocate_chain(std::span<const Move> moves, CostLedger& ledger);

  bool operator==(const Tree&) const = default;

 private:
  Tree() = default;

  void check_server(Server s) const;
  void check_item(Item v) const;
  void exchange_guests(Server a, Server b);

  std::vector<Item> guest_;
  std::vector<Server> host_;
};

// Heap-layout helpers that do not need a tree instance.
namespace heap {

inline Server parent(Server s) { return (s - 1) / 2; }
inline Server left(Server s) { return 2 * s + 1; }
inline Server right(Server s) { return 2 * s + 2; }
std::size_t depth(Server s);
// First server index at depth d.
inline Server level_begin(std::size_t d) { return (Server{1} << d) - 1; }
bool is_perfect_size(std::size_t n);

}  // namespace heap

}  // namespace satree

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

#include "satree/tree.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include "satree/errors.hpp"

namespace satree {

namespace heap {

std::size_t depth(Server s) {
  return static_cast<std::size_t>(std::bit_width(s + 1)) - 1;
}

bool is_perfect_size(std::size_t n) {
  return n >= 1 && std::has_single_bit(n + 1);
}

}  // namespace heap

void CostLedger::open_request() { per_request_.push_back({}); }

void CostLedger::charge_access(std::uint64_t units) {
  if (per_request_.empty()) open_request();
  per_request_.back().access += units;
  access_total_ += units;
}

void CostLedger::charge_adjust(std::uint64_t swaps) {
  if (per_request_.empty()) open_request();
  per_request_.back().adjust += swaps;
  adjust_total_ += swaps;
}

RequestCost CostLedger::last() const {
  return per_request_.empty() ? RequestCost{} : per_request_.back();
}

Tree::Tree(std::size_t n) {
  if (!heap::is_perfect_size(n)) {
    throw UsageError(
        "tree size must be 2^d - 1 for some d >= 1, got " + std::to_string(n));
  }
  guest_.resize(n);
  std::iota(guest_.begin(), guest_.end(), Item{0});
  host_ = guest_;
}

Tree Tree::from_guests(std::vector<Item> guests) {
  const std::size_t n = guests.size();
  if (!heap::is_perfect_size(n)) {
    throw UsageError(
        "tree size must be 2^d - 1 for some d >= 1, got " + std::to_string(n));
  }
  Tree t;
  t.host_.assign(n, n);
  for (Server s = 0; s < n; ++s) {
    const Item v = guests[s];
    if (v >= n || t.host_[v] != n) {
      throw UsageError("guest layout is not a permutation of 0..n-1");
    }
    t.host_[v] = s;
  }
  t.guest_ = std::move(guests);
  return t;
}

std::size_t Tree::levels() const { return heap::depth(size() - 1) + 1; }

void Tree::check_server(Server s) const {
  if (s >= size()) {
    throw UsageError("server index " + std::to_string(s) + " out of range [0, " +
                     std::to_string(size()) + ")");
  }
}

void Tree::check_item(Item v) const {
  if (v >= size()) {
    throw UsageError("item " + std::to_string(v) + " out of range [0, " +
                     std::to_string(size()) + ")");
  }
}

Item Tree::guest(Server s) const {
  check_server(s);
  return guest_[s];
}

Server Tree::host(Item v) const {
  check_item(v);
  return host_[v];
}

std::size_t Tree::depth(Server s) const {
  check_server(s);
  return heap::depth(s);
}

std::size_t Tree::distance(Server a, Server b) const {
  check_server(a);
  check_server(b);
  std::size_t hops = 0;
  std::size_t da = heap::depth(a);
  std::size_t db = heap::depth(b);
  while (da > db) { a = heap::parent(a); --da; ++hops; }
  while (db > da) { b = heap::parent(b); --db; ++hops; }
  while (a != b) {
    a = heap::parent(a);
    b = heap::parent(b);
    hops += 2;
  }
  return hops;
}

std::vector<Server> Tree::path(Server a, Server b) const {
  check_server(a);
  check_server(b);
  std::vector<Server> up;    // a towards the LCA
  std::vector<Server> down;  // b towards the LCA, reversed later
  while (a != b) {
    if (heap::depth(a) >= heap::depth(b)) {
      up.push_back(a);
      a = heap::parent(a);
    } else {
      down.push_back(b);
      b = heap::parent(b);
    }
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::string Tree::routing_header(Item v) const {
  Server s = host(v);
  std::string bits(heap::depth(s), '0');
  for (std::size_t i = bits.size(); i > 0; --i) {
    bits[i - 1] = (s % 2 == 0) ? '1' : '0';
    s = heap::parent(s);
  }
  return bits;
}

Server Tree::follow_header(const std::string& header) const {
  Server s = 0;
  for (char bit : header) {
    if (bit != '0' && bit != '1') throw UsageError("routing header must be 0/1 bits");
    s = bit == '0' ? heap::left(s) : heap::right(s);
    if (s >= size()) throw UsageError("routing header runs past the leaves");
  }
  return s;
}

std::size_t Tree::access(Item v, CostLedger& ledger) const {
  const std::size_t d = item_depth(v);
  ledger.open_request();
  ledger.charge_access(d);
  return d;
}

void Tree::exchange_guests(Server a, Server b) {
  std::swap(guest_[a], guest_[b]);
  host_[guest_[a]] = a;
  host_[guest_[b]] = b;
}

void Tree::swap(Server s, CostLedger& ledger) {
  check_server(s);
  if (s == 0) throw UsageError("the root has no parent to swap with");
  exchange_guests(s, heap::parent(s));
  ledger.charge_adjust(1);
}

std::uint64_t Tree::interchange(Item u, Item v, CostLedger& ledger) {
  check_item(u);
  check_item(v);
  if (u == v) return 0;
  const std::vector<Server> p = path(host_[u], host_[v]);
  const std::size_t d = p.size() - 1;
  // u walks forward to v's server, pulling every path item back by one.
  for (std::size_t j = 0; j < d; ++j) exchange_guests(p[j], p[j + 1]);
  // v now sits on p[d-1] and walks back to p[0], restoring the others.
  for (std::size_t j = d - 1; j > 0; --j) exchange_guests(p[j], p[j - 1]);
  const std::uint64_t swaps = 2 * d - 1;
  ledger.charge_adjust(swaps);
  return swaps;
}

std::uint64_t Tree::relocate_chain(std::span<const Move> moves,
                                   CostLedger& ledger) {
  if (moves.empty()) return 0;
  const std::size_t n = size();
  for (const Move& m : moves) {
    check_item(m.item);
    check_server(m.to);
  }
  // Work on copies so a rejected chain leaves the tree untouched.
  std::vector<Item> guest = guest_;
  std::vector<Server> host = host_;
  std::vector<bool> vacant(n, false);
  std::vector<bool> moved(n, false);
  const Item held = moves.back().item;
  vacant[host[held]] = true;
  std::uint64_t cost = 0;

  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& m = moves[i];
    const bool is_last = i + 1 == moves.size();
    if (moved[m.item] || (m.item == held && !is_last)) {
      throw ContractError("item " + std::to_string(m.item) +
                          " is moved more than once in a relocation chain");
    }
    if (!vacant[m.to]) {
      throw ContractError("relocation target server " + std::to_string(m.to) +
                          " is occupied");
    }
    const Server from = host[m.item];
    cost += distance(from, m.to);
    moved[m.item] = true;
    vacant[m.to] = false;
    if (!is_last) vacant[from] = true;
    guest[m.to] = m.item;
    host[m.item] = m.to;
  }
  for (Server s = 0; s < n; ++s) {
    if (vacant[s]) {
      throw ContractError("relocation chain left server " + std::to_string(s) +
                          " vacant");
    }
  }
  guest_ = std::move(guest);
  host_ = std::move(host);
  ledger.charge_adjust(cost);
  return cost;
}

}  // namespace satree

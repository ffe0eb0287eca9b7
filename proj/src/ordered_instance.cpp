// Copyright 2026 The posetcount Authors
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

#include "posetcount/ordered_instance.hpp"

#include <string>

namespace posetcount {

namespace {

std::uint64_t count_inversions(std::span<const std::uint32_t> pi) {
  // Fenwick tree over values seen so far.
  const std::size_t n = pi.size();
  std::vector<std::uint32_t> tree(n + 1, 0);
  std::uint64_t inversions = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t not_greater = 0;
    for (std::size_t i = pi[j] + 1; i > 0; i -= i & (~i + 1)) {
      not_greater += tree[i];
    }
    inversions += j - not_greater;
    for (std::size_t i = pi[j] + 1; i <= n; i += i & (~i + 1)) ++tree[i];
  }
  return inversions;
}

}  // namespace

OrderedInstance OrderedInstance::from_predecessors(const Poset& p,
                                                   const LinearExtension& le) {
  require_extension(p, le);
  OrderedInstance inst;
  inst.side_ = Side::kPredecessors;
  inst.order_.assign(le.order().begin(), le.order().end());
  inst.m_bar_ = p.comparable_pairs();
  inst.m_ = p.incomparable_pairs();
  inst.earlier_.reserve(inst.m_bar_);
  inst.offsets_.reserve(p.size() + 1);
  for (Element v : inst.order_) {
    for (Element u : p.predecessors(v)) inst.earlier_.push_back(le.rank(u));
    inst.offsets_.push_back(inst.earlier_.size());
  }
  return inst;
}

OrderedInstance OrderedInstance::from_neighbors(const Graph& g,
                                                const LinearExtension& le) {
  if (g.size() != le.size()) {
    throw SizeMismatch("graph has " + std::to_string(g.size()) +
                       " vertices, extension has " + std::to_string(le.size()));
  }
  OrderedInstance inst;
  inst.side_ = Side::kNeighbors;
  inst.order_.assign(le.order().begin(), le.order().end());
  inst.m_ = g.edge_count();
  inst.m_bar_ = g.non_edge_count();
  inst.earlier_.reserve(inst.m_);
  inst.offsets_.reserve(g.size() + 1);
  for (std::size_t r = 0; r < inst.order_.size(); ++r) {
    for (Vertex u : g.neighbors(inst.order_[r])) {
      if (le.rank(u) < r) inst.earlier_.push_back(le.rank(u));
    }
    inst.offsets_.push_back(inst.earlier_.size());
  }
  return inst;
}

OrderedInstance OrderedInstance::from_cheaper_side(const Graph& g,
                                                   const Poset& p,
                                                   const LinearExtension& le) {
  if (g.size() != p.size()) {
    throw SizeMismatch("graph has " + std::to_string(g.size()) +
                       " vertices, poset has " + std::to_string(p.size()));
  }
  if (g.edge_count() <= p.comparable_pairs()) return from_neighbors(g, le);
  return from_predecessors(p, le);
}

OrderedInstance OrderedInstance::from_permutation(
    std::span<const std::uint32_t> pi, PermutationTarget target) {
  require_permutation(pi);
  const std::size_t n = pi.size();
  const std::uint64_t inversions = count_inversions(pi);
  const std::uint64_t non_inversions = pair_count(n) - inversions;

  OrderedInstance inst;
  // Independent sets are chains of the non-inversion order; cliques are
  // chains of the inversion order.
  const bool inversions_comparable = target == PermutationTarget::kCliques;
  inst.m_bar_ = inversions_comparable ? inversions : non_inversions;
  inst.m_ = inversions_comparable ? non_inversions : inversions;
  inst.side_ = inst.m_ <= inst.m_bar_ ? Side::kNeighbors : Side::kPredecessors;
  const bool list_inversions =
      (inst.side_ == Side::kPredecessors) == inversions_comparable;

  inst.order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) inst.order_[i] = static_cast<Element>(i);
  inst.earlier_.reserve(inst.m_star());
  inst.offsets_.reserve(n + 1);

  // Values seen so far as a sorted doubly linked list with sentinels 0 and
  // n+1 (values shifted by one). Walking from the matching end costs exactly
  // one step per listed pair plus one.
  std::vector<std::uint32_t> next(n + 2), prev(n + 2), position(n + 2);
  const auto head = std::uint32_t{0};
  const auto tail = static_cast<std::uint32_t>(n + 1);
  next[head] = tail;
  prev[tail] = head;
  for (std::size_t j = 0; j < n; ++j) {
    const auto value = static_cast<std::uint32_t>(pi[j] + 1);
    std::uint32_t after;  // node the new value is inserted after
    if (list_inversions) {
      std::uint32_t node = prev[tail];
      while (node != head && node > value) {
        inst.earlier_.push_back(position[node]);
        node = prev[node];
      }
      after = node;
    } else {
      std::uint32_t node = next[head];
      while (node != tail && node < value) {
        inst.earlier_.push_back(position[node]);
        node = next[node];
      }
      after = prev[node];
    }
    next[value] = next[after];
    prev[value] = after;
    prev[next[after]] = value;
    next[after] = value;
    position[value] = static_cast<std::uint32_t>(j);
    inst.offsets_.push_back(inst.earlier_.size());
  }
  return inst;
}

}  // namespace posetcount

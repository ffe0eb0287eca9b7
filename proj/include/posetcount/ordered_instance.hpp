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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "posetcount/graph.hpp"
#include "posetcount/poset.hpp"

namespace posetcount {

/// A cocomparability graph reduced to what the linear-time counters need: a
/// linear extension v_1..v_n and, for every rank, the earlier ranks on the
/// cheaper side of the relation.
///
/// With Side::kPredecessors the lists hold the comparable earlier elements;
/// with Side::kNeighbors they hold the incomparable ones, i.e. the earlier
/// neighbours in the graph. Storage is O(n + min(m, m_bar)) either way, so
/// instances exist even where a full Poset or Graph would not fit in memory.
class OrderedInstance {
 public:
  enum class Side { kPredecessors, kNeighbors };
  enum class PermutationTarget { kIndependentSets, kCliques };

  OrderedInstance() = default;

  static OrderedInstance from_predecessors(const Poset& p,
                                           const LinearExtension& le);
  /// `g` must be the incomparability graph of a poset that `le` extends.
  static OrderedInstance from_neighbors(const Graph& g,
                                        const LinearExtension& le);
  /// Picks whichever of the two sides is smaller.
  static OrderedInstance from_cheaper_side(const Graph& g, const Poset& p,
                                           const LinearExtension& le);
  /// Builds the instance for the permutation graph of pi directly, in
  /// O(n log n + m*) time, using the identity as linear extension.
  static OrderedInstance from_permutation(std::span<const std::uint32_t> pi,
                                          PermutationTarget target);

  std::size_t size() const noexcept { return order_.size(); }
  Side side() const noexcept { return side_; }
  std::span<const Element> order() const noexcept { return order_; }

  /// Earlier ranks related to `rank` on the stored side.
  std::span<const std::uint32_t> earlier(std::size_t rank) const {
    return {earlier_.data() + offsets_[rank],
            earlier_.data() + offsets_[rank + 1]};
  }

  /// Edges of the cocomparability graph (incomparable pairs).
  std::uint64_t edge_count() const noexcept { return m_; }
  /// Comparable pairs.
  std::uint64_t non_edge_count() const noexcept { return m_bar_; }
  std::uint64_t m_star() const noexcept { return m_ < m_bar_ ? m_ : m_bar_; }
  std::size_t stored_pairs() const noexcept { return earlier_.size(); }

 private:
  Side side_ = Side::kPredecessors;
  std::vector<Element> order_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> earlier_;
  std::uint64_t m_ = 0;
  std::uint64_t m_bar_ = 0;
};

}  // namespace posetcount

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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetcount/errors.hpp"

namespace posetcount {

/// Ordered pair (u, v) meaning u precedes v.
using Arc = std::pair<Element, Element>;
using AdjacencyLists = std::vector<std::vector<Element>>;

/// A strict partial order on the elements 0..n-1.
///
/// Both directions of the relation are stored explicitly as sorted lists, so
/// memory is proportional to the number of comparable pairs. Instances are
/// immutable once built.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from predecessor lists that are already transitively
  /// closed. Lists are sorted and deduplicated; ranges and irreflexivity are
  /// checked, transitivity is not (see find_poset_violation).
  static Poset from_closed_predecessors(AdjacencyLists pred);

  std::size_t size() const noexcept { return pred_.size(); }
  std::span<const Element> predecessors(Element v) const { return pred_[v]; }
  std::span<const Element> successors(Element v) const { return succ_[v]; }

  /// True iff u precedes v.
  bool precedes(Element u, Element v) const;
  bool comparable(Element u, Element v) const {
    return precedes(u, v) || precedes(v, u);
  }

  /// Number of comparable pairs.
  std::uint64_t comparable_pairs() const noexcept { return comparable_pairs_; }
  /// Number of unordered pairs that are not comparable.
  std::uint64_t incomparable_pairs() const noexcept;

  /// Every ordered pair (u, v) with u preceding v.
  std::vector<Arc> relation_arcs() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  AdjacencyLists pred_;
  AdjacencyLists succ_;
  std::uint64_t comparable_pairs_ = 0;
};

/// Transitive closure of an arbitrary DAG on 0..n-1.
/// Throws ElementOutOfRange or CycleDetected.
Poset poset_from_arcs(std::size_t n, std::span<const Arc> arcs);

/// Checks irreflexivity, antisymmetry, transitivity and the stored pair
/// count; returns a description of the first violation found.
std::optional<std::string> find_poset_violation(const Poset& p);

/// A permutation of the elements compatible with the order.
class LinearExtension {
 public:
  LinearExtension() = default;

  /// Wraps an explicit ordering. Throws InvalidExtension unless `order` is a
  /// permutation of 0..n-1. Compatibility with a poset is checked separately.
  static LinearExtension from_order(std::vector<Element> order);

  std::size_t size() const noexcept { return order_.size(); }
  std::span<const Element> order() const noexcept { return order_; }
  Element at(std::size_t rank) const { return order_[rank]; }
  std::uint32_t rank(Element v) const { return rank_[v]; }

  /// True iff u precedes v in p implies rank(u) < rank(v).
  bool respects(const Poset& p) const;

  friend bool operator==(const LinearExtension&,
                         const LinearExtension&) = default;

 private:
  std::vector<Element> order_;
  std::vector<std::uint32_t> rank_;
};

/// Topological order of p; ties go to the smallest element id.
LinearExtension linear_extension(const Poset& p);

/// Throws InvalidExtension if le is not a linear extension of p.
void require_extension(const Poset& p, const LinearExtension& le);

/// The poset with a virtual bottom (id n) below and a virtual top (id n+1)
/// above every element, together with its cover relation.
class ExtendedPoset {
 public:
  ExtendedPoset() = default;
  ExtendedPoset(Poset base, AdjacencyLists base_cover_pred);

  const Poset& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  Element bottom() const noexcept { return static_cast<Element>(size()); }
  Element top() const noexcept { return static_cast<Element>(size() + 1); }

  /// Elements covered by v; v ranges over base elements, bottom and top.
  std::span<const Element> cover_predecessors(Element v) const {
    return cover_pred_[v];
  }
  /// True iff u is covered by v in the extended order.
  bool covers(Element u, Element v) const;
  /// Strict order of the extension (bottom below everything, top above).
  bool precedes(Element u, Element v) const;

  /// Cover arcs between base elements only.
  std::vector<Arc> base_cover_arcs() const;
  std::size_t cover_count() const noexcept;

 private:
  Poset base_;
  AdjacencyLists cover_pred_;  // size n + 2
};

/// Transitive reduction of p plus the bottom/top extension.
ExtendedPoset cover_relation(const Poset& p);

struct ChainVerdict {
  bool is_chain = false;
  bool is_tight = false;
  /// An incomparable pair when !is_chain, otherwise a consecutive pair of the
  /// extended chain that is not a cover when !is_tight. Bottom and top use the
  /// ExtendedPoset ids n and n+1.
  std::optional<std::pair<Element, Element>> witness;
};

/// Decides whether s is a chain of p and whether s plus bottom and top is a
/// tight chain of the extension.
ChainVerdict check_chain(const Poset& p, std::span<const Element> s);

}  // namespace posetcount

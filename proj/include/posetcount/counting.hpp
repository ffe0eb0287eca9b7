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
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "posetcount/count.hpp"
#include "posetcount/graph.hpp"
#include "posetcount/ordered_instance.hpp"
#include "posetcount/poset.hpp"

// Exact counting of independent sets in cocomparability graphs, given as a
// poset whose incomparability graph is the graph in question. Independent
// sets of that graph are exactly the chains of the poset, and maximal ones are
// the chains that stay tight after adding a global bottom and top. All
// counters evaluate their recurrence once along a linear extension.
//
// Counting cliques of a comparability graph is the same problem on the same
// poset, so the clique entry points below just forward.

namespace posetcount {

/// Per-element DP values in linear-extension order:
/// bottom, v_1, ..., v_n, top.
class CountTable {
 public:
  CountTable() = default;
  CountTable(std::vector<Count> entries, std::span<const Element> order);

  std::size_t size() const noexcept { return order_.size(); }
  const Count& bottom() const { return entries_.front(); }
  const Count& top() const { return entries_.back(); }
  const Count& at_rank(std::size_t rank) const { return entries_[rank + 1]; }
  const Count& of(Element v) const { return entries_[rank_[v] + 1]; }
  std::span<const Count> entries() const noexcept { return entries_; }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::vector<Count> entries_;
  std::vector<Element> order_;
  std::vector<std::uint32_t> rank_;
};

enum class ProfileKind { kAllSets, kMaximalSets };

/// counts[i] is the number of (maximal) independent sets of size i,
/// for i = 0..k.
struct SizeProfile {
  ProfileKind kind = ProfileKind::kAllSets;
  std::vector<Count> counts;

  /// Sum of all coefficients, in the profile's count mode.
  Count total() const;
  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

// --- all independent sets --------------------------------------------------

/// a-values by the direct recurrence a(v) = sum of a(u) over u below v.
CountTable count_is_table(const Poset& p, const LinearExtension& le,
                          CountMode mode = {});
Count count_is(const Poset& p, const LinearExtension& le, CountMode mode = {});

struct FastOptions {
  CountMode mode;
  /// Full O(n^2) check that g is the incomparability graph of p and that le
  /// extends p. Off by default: a few random spot checks are made instead.
  bool validate = false;
};

/// Same values as count_is_table, using running prefix sums so that only the
/// smaller of the edge set of g and the comparable pairs of p is visited.
/// Throws InvalidExtension or GraphPosetMismatch.
CountTable count_is_fast_table(const Graph& g, const Poset& p,
                               const LinearExtension& le,
                               const FastOptions& options = {});
Count count_is_fast(const Graph& g, const Poset& p, const LinearExtension& le,
                    const FastOptions& options = {});

/// The prefix-sum counter on a prebuilt instance; O(n + m*) operations.
CountTable count_is_table(const OrderedInstance& inst, CountMode mode = {});
Count count_is(const OrderedInstance& inst, CountMode mode = {});

// --- maximal independent sets ----------------------------------------------

/// b-values: b(v) = sum of b(u) over the elements u covered by v.
CountTable count_maximal_is_table(const ExtendedPoset& ep,
                                  const LinearExtension& le,
                                  CountMode mode = {});
Count count_maximal_is(const ExtendedPoset& ep, const LinearExtension& le,
                       CountMode mode = {});

// --- by size ----------------------------------------------------------------

/// Counts of independent sets of each size 0..k. Throws KOutOfRange unless
/// 0 <= k <= n.
SizeProfile count_is_by_size(const Poset& p, const LinearExtension& le,
                             std::size_t k, CountMode mode = {});
SizeProfile count_is_by_size(const OrderedInstance& inst, std::size_t k,
                             CountMode mode = {});
SizeProfile count_maximal_is_by_size(const ExtendedPoset& ep,
                                     const LinearExtension& le, std::size_t k,
                                     CountMode mode = {});

struct MaximumInfo {
  std::size_t alpha = 0;  // size of a maximum independent set
  Count count;            // how many there are
};

/// Reads alpha and the number of maximum sets off a full all-sets profile.
MaximumInfo alpha_and_maximum_count(const SizeProfile& profile);

/// Independence polynomial at x, exactly. Throws std::invalid_argument for a
/// modular profile.
mpq_class evaluate_polynomial(const SizeProfile& profile, const mpq_class& x);
/// Independence polynomial at integer x, reduced by the profile's modulus.
/// Throws std::invalid_argument for an exact profile.
Count evaluate_polynomial_mod(const SizeProfile& profile, std::int64_t x);

// --- dispatch, cliques and permutation graphs -------------------------------

enum class Variant { kAll, kMaximal, kBySize, kMaximalBySize };
using CountResult = std::variant<Count, SizeProfile>;

/// Independent sets of incomparability_graph(p) for the chosen variant; k is
/// only read by the by-size variants.
CountResult count_independent_sets(const Poset& p, const LinearExtension& le,
                                   Variant variant, std::size_t k = 0,
                                   CountMode mode = {});

/// Cliques of comparability_graph(p); p is the transitive orientation.
CountResult count_cliques(const Poset& p, const LinearExtension& le,
                          Variant variant, std::size_t k = 0,
                          CountMode mode = {});

struct PermutationCounts {
  CountResult independent_sets;
  CountResult cliques;
};

/// Runs the variant on both orientations of a permutation graph.
PermutationCounts permutation_counts(const PermutationModel& model,
                                     Variant variant, std::size_t k = 0,
                                     CountMode mode = {});

}  // namespace posetcount

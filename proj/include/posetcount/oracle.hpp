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
#include <vector>

#include "posetcount/graph.hpp"
#include "posetcount/poset.hpp"

// Exponential-time ground truth for the counters, plus reproducible random
// instances. Nothing here shares code with the dynamic programs.

namespace posetcount::oracle {

enum class SetMode { kAll, kMaximal };

struct EnumerationLimits {
  std::size_t max_vertices = 25;
  /// Explicit set lists are only produced up to this many vertices.
  std::size_t listing_cap = 20;
};

struct EnumerationResult {
  std::uint64_t total = 0;
  /// by_size[i] counts the sets of size i, up to the largest size that occurs.
  std::vector<std::uint64_t> by_size;
  /// Sorted vertex lists, in the order found; empty optional above the cap.
  std::optional<std::vector<std::vector<Vertex>>> sets;
};

/// Independent sets (or maximal ones) of g by backtracking.
/// Throws TooLarge above limits.max_vertices.
EnumerationResult enumerate_is(const Graph& g, SetMode mode,
                               const EnumerationLimits& limits = {});

/// Cliques of g, i.e. independent sets of its complement.
EnumerationResult enumerate_cliques(const Graph& g, SetMode mode,
                                    const EnumerationLimits& limits = {});

/// Sets of the incomparability graph induced on the elements at or below
/// `v` that contain v. `v` may be a base element, the bottom id n (giving the
/// empty set only) or the top id n+1 (giving all sets of the whole graph).
EnumerationResult enumerate_anchored(const Poset& p, Element v, SetMode mode,
                                     const EnumerationLimits& limits = {});

/// True iff no two vertices of s are adjacent.
bool is_independent(const Graph& g, const std::vector<Vertex>& s);
/// True iff s is independent and no vertex outside s can be added.
bool is_maximal_independent(const Graph& g, const std::vector<Vertex>& s);

struct GeneratorSpec {
  std::size_t n = 0;
  /// Probability of each arc before closure; not the final fraction of
  /// comparable pairs.
  double density = 0.0;
  std::uint64_t seed = 0;
};

/// Samples every pair of a random relabeling as an arc with probability
/// `density`, then closes transitively. Same inputs, same poset.
Poset random_poset(const GeneratorSpec& spec);

/// Uniform permutation of 0..n-1; `density` is ignored.
std::vector<std::uint32_t> random_permutation(const GeneratorSpec& spec);

}  // namespace posetcount::oracle

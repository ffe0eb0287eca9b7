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

// Small fixed posets and brute-force helpers shared by the unit tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "posetcount/graph.hpp"
#include "posetcount/poset.hpp"

namespace posetcount::testing {

/// 0 < 1 < ... < n-1.
inline Poset chain(std::size_t n) {
  std::vector<Arc> arcs;
  for (Element v = 1; v < n; ++v) arcs.emplace_back(v - 1, v);
  return poset_from_arcs(n, arcs);
}

inline Poset antichain(std::size_t n) { return poset_from_arcs(n, {}); }

/// i < j iff j - i >= 2; its incomparability graph is the path P_n.
inline Poset path_poset(std::size_t n) {
  std::vector<Arc> arcs;
  for (Element j = 0; j < n; ++j) {
    for (Element i = 0; i + 2 <= j; ++i) arcs.emplace_back(i, j);
  }
  return poset_from_arcs(n, arcs);
}

inline std::vector<Element> members(std::uint64_t mask) {
  std::vector<Element> s;
  for (Element v = 0; mask >> v; ++v) {
    if (mask >> v & 1) s.push_back(v);
  }
  return s;
}

/// Brute-force u < w < v test over all w.
inline bool is_cover_by_definition(const Poset& p, Element u, Element v) {
  if (!p.precedes(u, v)) return false;
  for (Element w = 0; w < p.size(); ++w) {
    if (p.precedes(u, w) && p.precedes(w, v)) return false;
  }
  return true;
}

/// A uniformly chosen topological order, independent of linear_extension.
inline LinearExtension random_extension(const Poset& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> remaining(p.size());
  std::vector<Element> ready, order;
  for (Element v = 0; v < p.size(); ++v) {
    remaining[v] = p.predecessors(v).size();
    if (remaining[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t i = pick(rng);
    const Element v = ready[i];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(i));
    order.push_back(v);
    for (Element w : p.successors(v)) {
      if (--remaining[w] == 0) ready.push_back(w);
    }
  }
  return LinearExtension::from_order(order);
}

inline std::vector<std::uint32_t> reversed(std::vector<std::uint32_t> pi) {
  std::reverse(pi.begin(), pi.end());
  return pi;
}

}  // namespace posetcount::testing

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

#include "posetcount/kernels.hpp"

#include <algorithm>
#include <cstdint>

#include <omp.h>

namespace posetcount::kernels {

namespace {

// Elements of 0..n-1 other than `self` that are missing from both sorted
// lists.
void append_missing(std::size_t n, Element self, std::span<const Element> a,
                    std::span<const Element> b, std::vector<Element>& out) {
  auto i = a.begin();
  auto j = b.begin();
  for (Element u = 0; u < n; ++u) {
    while (i != a.end() && *i < u) ++i;
    while (j != b.end() && *j < u) ++j;
    const bool in_a = i != a.end() && *i == u;
    const bool in_b = j != b.end() && *j == u;
    if (u != self && !in_a && !in_b) out.push_back(u);
  }
}

bool contains(std::span<const Element> sorted, Element x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

// --- serial reference -------------------------------------------------------

namespace serial {

AdjacencyLists transitive_closure(const AdjacencyLists& direct,
                                  std::span<const Element> topo) {
  const std::size_t n = direct.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * words, 0);
  auto row = [&](Element v) { return bits.data() + v * words; };
  for (Element v : topo) {
    std::uint64_t* dst = row(v);
    for (Element u : direct[v]) {
      const std::uint64_t* src = row(u);
      for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
      dst[u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
  AdjacencyLists pred(n);
  for (Element v = 0; v < n; ++v) {
    for (Element u = 0; u < n; ++u) {
      if (row(v)[u / 64] >> (u % 64) & 1) pred[v].push_back(u);
    }
  }
  return pred;
}

AdjacencyLists cover_predecessors(const Poset& p) {
  AdjacencyLists covers(p.size());
  for (Element v = 0; v < p.size(); ++v) {
    for (Element u : p.predecessors(v)) {
      auto above_u = p.successors(u);
      auto below_v = p.predecessors(v);
      std::vector<Element> between;
      std::set_intersection(above_u.begin(), above_u.end(), below_v.begin(),
                            below_v.end(), std::back_inserter(between));
      if (between.empty()) covers[v].push_back(u);
    }
  }
  return covers;
}

AdjacencyLists incomparability_adjacency(const Poset& p) {
  AdjacencyLists adj(p.size());
  for (Element v = 0; v < p.size(); ++v) {
    for (Element u = 0; u < v; ++u) {
      if (!p.comparable(u, v)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

AdjacencyLists comparability_adjacency(const Poset& p) {
  AdjacencyLists adj(p.size());
  for (const auto& [u, v] : p.relation_arcs()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

AdjacencyLists complement_adjacency(const AdjacencyLists& adj) {
  const std::size_t n = adj.size();
  AdjacencyLists out(n);
  for (Element v = 0; v < n; ++v) {
    for (Element u = 0; u < n; ++u) {
      if (u != v && !contains(adj[v], u)) out[v].push_back(u);
    }
  }
  return out;
}

}  // namespace serial

// --- OpenMP -----------------------------------------------------------------

namespace omp {

AdjacencyLists transitive_closure(const AdjacencyLists& direct,
                                  std::span<const Element> /*topo*/) {
  // Independent backward searches, one per element; stamps avoid clearing.
  const auto n = static_cast<std::ptrdiff_t>(direct.size());
  AdjacencyLists pred(direct.size());
#pragma omp parallel
  {
    std::vector<std::uint32_t> stamp(direct.size(), 0);
    std::vector<Element> stack;
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t v = 0; v < n; ++v) {
      const auto mark = static_cast<std::uint32_t>(v + 1);
      auto& out = pred[v];
      stack.assign(direct[v].begin(), direct[v].end());
      for (Element u : stack) stamp[u] = mark;
      while (!stack.empty()) {
        const Element u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (Element w : direct[u]) {
          if (stamp[w] != mark) {
            stamp[w] = mark;
            stack.push_back(w);
          }
        }
      }
      std::sort(out.begin(), out.end());
    }
  }
  return pred;
}

AdjacencyLists cover_predecessors(const Poset& p) {
  // u below v is a cover unless u lies below some other predecessor of v.
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  AdjacencyLists covers(p.size());
#pragma omp parallel
  {
    std::vector<std::uint32_t> stamp(p.size(), 0);
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t v = 0; v < n; ++v) {
      const auto mark = static_cast<std::uint32_t>(v + 1);
      const auto pred = p.predecessors(static_cast<Element>(v));
      for (Element w : pred) {
        for (Element u : p.predecessors(w)) stamp[u] = mark;
      }
      for (Element u : pred) {
        if (stamp[u] != mark) covers[v].push_back(u);
      }
    }
  }
  return covers;
}

AdjacencyLists incomparability_adjacency(const Poset& p) {
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  AdjacencyLists adj(p.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t v = 0; v < n; ++v) {
    const auto e = static_cast<Element>(v);
    append_missing(p.size(), e, p.predecessors(e), p.successors(e), adj[v]);
  }
  return adj;
}

AdjacencyLists comparability_adjacency(const Poset& p) {
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  AdjacencyLists adj(p.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t v = 0; v < n; ++v) {
    const auto e = static_cast<Element>(v);
    auto pred = p.predecessors(e);
    auto succ = p.successors(e);
    adj[v].reserve(pred.size() + succ.size());
    std::merge(pred.begin(), pred.end(), succ.begin(), succ.end(),
               std::back_inserter(adj[v]));
  }
  return adj;
}

AdjacencyLists complement_adjacency(const AdjacencyLists& adj) {
  const auto n = static_cast<std::ptrdiff_t>(adj.size());
  AdjacencyLists out(adj.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t v = 0; v < n; ++v) {
    append_missing(adj.size(), static_cast<Element>(v), adj[v], {}, out[v]);
  }
  return out;
}

}  // namespace omp

}  // namespace posetcount::kernels

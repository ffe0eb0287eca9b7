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
#include <vector>

#include "posetcount/poset.hpp"

namespace posetcount {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Duplicate edges are merged. Throws ElementOutOfRange for bad endpoints
  /// and std::invalid_argument for self loops.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  /// Takes ownership of symmetric, sorted, loop-free adjacency lists.
  static Graph from_adjacency(AdjacencyLists adj);

  std::size_t size() const noexcept { return adj_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  std::uint64_t edge_count() const noexcept { return m_; }
  std::uint64_t non_edge_count() const noexcept;
  /// min(m, m_bar), the operation budget of the fast counter.
  std::uint64_t m_star() const noexcept;

  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  AdjacencyLists adj_;
  std::uint64_t m_ = 0;
};

/// Number of unordered pairs of n elements.
constexpr std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

/// u ~ v iff u and v are incomparable in p.
Graph incomparability_graph(const Poset& p);
/// u ~ v iff u and v are comparable in p.
Graph comparability_graph(const Poset& p);
Graph complement(const Graph& g);

/// A permutation graph together with its two transitive orientations.
///
/// Positions i < j are adjacent iff pi[i] > pi[j]. is_poset orders the
/// non-inversions (its chains are the independent sets); clique_poset orders
/// the inversions (its chains are the cliques). The identity is a linear
/// extension of both.
struct PermutationModel {
  std::vector<std::uint32_t> pi;
  Graph graph;
  Poset is_poset;
  Poset clique_poset;
};

/// Throws NotAPermutation unless pi is a permutation of 0..n-1.
void require_permutation(std::span<const std::uint32_t> pi);

PermutationModel permutation_model(std::span<const std::uint32_t> pi);

/// True iff g is exactly the incomparability graph of p.
/// Throws SizeMismatch when the vertex counts differ.
bool validate_orientation(const Graph& g, const Poset& p);

}  // namespace posetcount

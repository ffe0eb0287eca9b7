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

#include "posetcount/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "posetcount/kernels.hpp"

namespace posetcount {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  AdjacencyLists adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ElementOutOfRange("edge {" + std::to_string(u + 1) + ", " +
                              std::to_string(v + 1) + "} outside 1.." +
                              std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self loop at " + std::to_string(u + 1));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(AdjacencyLists adj) {
  Graph g;
  std::uint64_t degree_sum = 0;
  for (const auto& list : adj) degree_sum += list.size();
  g.adj_ = std::move(adj);
  g.m_ = degree_sum / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= size() || v >= size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::uint64_t Graph::non_edge_count() const noexcept {
  return pair_count(size()) - m_;
}

std::uint64_t Graph::m_star() const noexcept {
  return std::min(m_, non_edge_count());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph incomparability_graph(const Poset& p) {
  return Graph::from_adjacency(kernels::omp::incomparability_adjacency(p));
}

Graph comparability_graph(const Poset& p) {
  return Graph::from_adjacency(kernels::omp::comparability_adjacency(p));
}

Graph complement(const Graph& g) {
  AdjacencyLists adj(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  return Graph::from_adjacency(kernels::omp::complement_adjacency(adj));
}

void require_permutation(std::span<const std::uint32_t> pi) {
  std::vector<bool> seen(pi.size(), false);
  for (std::uint32_t value : pi) {
    if (value >= pi.size()) {
      throw NotAPermutation("value " + std::to_string(value + 1) +
                            " outside 1.." + std::to_string(pi.size()));
    }
    if (seen[value]) {
      throw NotAPermutation("value " + std::to_string(value + 1) +
                            " occurs twice");
    }
    seen[value] = true;
  }
}

PermutationModel permutation_model(std::span<const std::uint32_t> pi) {
  require_permutation(pi);
  const std::size_t n = pi.size();
  AdjacencyLists adj(n);
  AdjacencyLists ascending(n);
  AdjacencyLists descending(n);
  for (Element j = 0; j < n; ++j) {
    for (Element i = 0; i < j; ++i) {
      if (pi[i] > pi[j]) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        descending[j].push_back(i);
      } else {
        ascending[j].push_back(i);
      }
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  PermutationModel model;
  model.pi.assign(pi.begin(), pi.end());
  model.graph = Graph::from_adjacency(std::move(adj));
  model.is_poset = Poset::from_closed_predecessors(std::move(ascending));
  model.clique_poset = Poset::from_closed_predecessors(std::move(descending));
  return model;
}

bool validate_orientation(const Graph& g, const Poset& p) {
  if (g.size() != p.size()) {
    throw SizeMismatch("graph has " + std::to_string(g.size()) +
                       " vertices, poset has " + std::to_string(p.size()));
  }
  if (g.edge_count() != p.incomparable_pairs()) return false;
  return g == incomparability_graph(p);
}

}  // namespace posetcount

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
#include <span>

#include "posetcount/poset.hpp"

// Data-parallel building blocks behind Poset, ExtendedPoset and Graph.
//
// Each kernel exists twice: `serial` is a plain reference implementation kept
// for testing and benchmarking, `omp` is the OpenMP version used by the
// library. Both return sorted adjacency lists and must agree exactly.

namespace posetcount::kernels {

namespace serial {

/// Closed, sorted predecessor lists of the DAG whose direct predecessor lists
/// are `direct`. `topo` must be a topological order of that DAG.
AdjacencyLists transitive_closure(const AdjacencyLists& direct,
                                  std::span<const Element> topo);

/// For every base element, the base elements it covers.
AdjacencyLists cover_predecessors(const Poset& p);

AdjacencyLists incomparability_adjacency(const Poset& p);
AdjacencyLists comparability_adjacency(const Poset& p);
AdjacencyLists complement_adjacency(const AdjacencyLists& adj);

}  // namespace serial

namespace omp {

AdjacencyLists transitive_closure(const AdjacencyLists& direct,
                                  std::span<const Element> topo);
AdjacencyLists cover_predecessors(const Poset& p);
AdjacencyLists incomparability_adjacency(const Poset& p);
AdjacencyLists comparability_adjacency(const Poset& p);
AdjacencyLists complement_adjacency(const AdjacencyLists& adj);

}  // namespace omp

}  // namespace posetcount::kernels

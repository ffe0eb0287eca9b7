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

#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "posetcount/graph.hpp"
#include "posetcount/poset.hpp"

// Plain-text instance formats. Ids in files are 1-based; lines starting with
// '#' and blank lines are ignored.
//
//   poset <n> <arc-count>     graph <n> <m>       perm <n>
//   a <u> <v>   (u below v)   e <u> <v>           <n integers, any layout>

namespace posetcount::io {

Poset read_poset(std::istream& in);
std::vector<std::uint32_t> read_permutation(std::istream& in);
Graph read_graph(std::istream& in);

/// Writes the cover arcs of p, which close back to p.
void write_poset(std::ostream& out, const Poset& p);
void write_permutation(std::ostream& out, const std::vector<std::uint32_t>& pi);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace posetcount::io

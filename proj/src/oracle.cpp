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

#include "posetcount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace posetcount::oracle {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 63;

struct Enumerator {
  std::vector<Mask> neighbors;
  SetMode mode;
  bool listing;
  Mask required = 0;            // sets must contain these vertices
  std::vector<Vertex> labels;   // vertex names used in listed sets
  EnumerationResult result;

  void record(Mask chosen) {
    if ((chosen & required) != required) return;
    if (mode == SetMode::kMaximal) {
      for (std::size_t v = 0; v < neighbors.size(); ++v) {
        const Mask bit = Mask{1} << v;
        if (!(chosen & bit) && !(neighbors[v] & chosen)) return;
      }
    }
    const auto size = static_cast<std::size_t>(std::popcount(chosen));
    if (result.by_size.size() <= size) result.by_size.resize(size + 1, 0);
    ++result.by_size[size];
    ++result.total;
    if (listing) {
      std::vector<Vertex> set;
      for (std::size_t v = 0; v < neighbors.size(); ++v) {
        if (chosen >> v & 1) set.push_back(labels[v]);
      }
      result.sets->push_back(std::move(set));
    }
  }

  void visit(std::size_t next, Mask chosen) {
    if (next == neighbors.size()) {
      record(chosen);
      return;
    }
    visit(next + 1, chosen);
    if (!(neighbors[next] & chosen)) visit(next + 1, chosen | Mask{1} << next);
  }
};

void require_small(std::size_t n, const EnumerationLimits& limits) {
  if (n > limits.max_vertices || n > kMaskBits) {
    throw TooLarge("brute force refused for " + std::to_string(n) +
                   " vertices");
  }
}

EnumerationResult run(std::vector<Mask> neighbors, SetMode mode,
                      const EnumerationLimits& limits, Mask required = 0,
                      std::vector<Vertex> labels = {}) {
  Enumerator e{std::move(neighbors), mode, false, required, std::move(labels),
               {}};
  if (e.labels.empty()) {
    e.labels.resize(e.neighbors.size());
    std::iota(e.labels.begin(), e.labels.end(), Vertex{0});
  }
  e.listing = e.neighbors.size() <= limits.listing_cap;
  if (e.listing) e.result.sets.emplace();
  e.visit(0, 0);
  return e.result;
}

}  // namespace

EnumerationResult enumerate_is(const Graph& g, SetMode mode,
                               const EnumerationLimits& limits) {
  require_small(g.size(), limits);
  std::vector<Mask> neighbors(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u : g.neighbors(v)) neighbors[v] |= Mask{1} << u;
  }
  return run(std::move(neighbors), mode, limits);
}

EnumerationResult enumerate_cliques(const Graph& g, SetMode mode,
                                    const EnumerationLimits& limits) {
  require_small(g.size(), limits);
  std::vector<Mask> non_neighbors(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u = 0; u < g.size(); ++u) {
      if (u != v && !g.adjacent(u, v)) non_neighbors[v] |= Mask{1} << u;
    }
  }
  return run(std::move(non_neighbors), mode, limits);
}

EnumerationResult enumerate_anchored(const Poset& p, Element v, SetMode mode,
                                     const EnumerationLimits& limits) {
  const std::size_t n = p.size();
  if (v > n + 1) {
    throw ElementOutOfRange("anchor " + std::to_string(v + 1) +
                            " is neither an element, bottom nor top");
  }
  require_small(n, limits);
  if (v == n) {  // bottom: only the empty set
    EnumerationResult r;
    r.total = 1;
    r.by_size = {1};
    r.sets.emplace(1);
    return r;
  }

  // Elements at or below the anchor; the whole ground set for top.
  std::vector<Element> members;
  for (Element u = 0; u < n; ++u) {
    if (v == n + 1 || u == v || p.precedes(u, v)) members.push_back(u);
  }
  std::vector<Mask> neighbors(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j && !p.comparable(members[i], members[j])) {
        neighbors[i] |= Mask{1} << j;
      }
    }
  }
  Mask required = 0;
  if (v < n) {
    const auto at = std::find(members.begin(), members.end(), v);
    required = Mask{1} << (at - members.begin());
  }
  EnumerationResult r = run(std::move(neighbors), mode, limits, required,
                            std::vector<Vertex>(members.begin(), members.end()));
  if (n > limits.listing_cap) r.sets.reset();
  return r;
}

bool is_independent(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_maximal_independent(const Graph& g, const std::vector<Vertex>& s) {
  if (!is_independent(g, s)) return false;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (std::find(s.begin(), s.end(), v) != s.end()) continue;
    const bool blocked = std::any_of(s.begin(), s.end(), [&](Vertex u) {
      return g.adjacent(u, v);
    });
    if (!blocked) return false;
  }
  return true;
}

Poset random_poset(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Element> label(spec.n);
  std::iota(label.begin(), label.end(), Element{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution coin(std::clamp(spec.density, 0.0, 1.0));
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      if (coin(rng)) arcs.emplace_back(label[i], label[j]);
    }
  }
  return poset_from_arcs(spec.n, arcs);
}

std::vector<std::uint32_t> random_permutation(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<std::uint32_t> pi(spec.n);
  std::iota(pi.begin(), pi.end(), std::uint32_t{0});
  std::shuffle(pi.begin(), pi.end(), rng);
  return pi;
}

}  // namespace posetcount::oracle

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

#include "posetcount/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "posetcount/kernels.hpp"

namespace posetcount {

namespace {

std::uint64_t pairs_of(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

bool sorted_lists_intersect(std::span<const Element> a,
                            std::span<const Element> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// Some cycle inside the vertices Kahn's algorithm could not remove. Every such
// vertex has a remaining predecessor, so walking backwards must repeat.
std::vector<Element> find_cycle(const AdjacencyLists& direct_pred,
                                const std::vector<std::size_t>& indegree) {
  const std::size_t n = direct_pred.size();
  Element start = 0;
  while (indegree[start] == 0) ++start;
  std::vector<std::size_t> seen_at(n, n);
  std::vector<Element> walk;
  Element v = start;
  while (seen_at[v] == n) {
    seen_at[v] = walk.size();
    walk.push_back(v);
    for (Element u : direct_pred[v]) {
      if (indegree[u] != 0) {
        v = u;
        break;
      }
    }
  }
  // walk[seen_at[v]..] is the cycle traversed against the arcs.
  std::vector<Element> cycle(walk.begin() + seen_at[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

// --- Poset ------------------------------------------------------------------

Poset Poset::from_closed_predecessors(AdjacencyLists pred) {
  const std::size_t n = pred.size();
  Poset p;
  p.succ_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = pred[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (Element u : list) {
      if (u >= n) {
        throw ElementOutOfRange("predecessor " + std::to_string(u + 1) +
                                " outside 1.." + std::to_string(n));
      }
      if (u == v) {
        throw std::invalid_argument("element " + std::to_string(v + 1) +
                                    " listed as its own predecessor");
      }
    }
    p.comparable_pairs_ += list.size();
  }
  // Filling successors in increasing v keeps every succ list sorted.
  for (std::size_t v = 0; v < n; ++v) {
    for (Element u : pred[v]) p.succ_[u].push_back(static_cast<Element>(v));
  }
  p.pred_ = std::move(pred);
  return p;
}

bool Poset::precedes(Element u, Element v) const {
  if (v >= size() || u >= size()) return false;
  return std::binary_search(pred_[v].begin(), pred_[v].end(), u);
}

std::uint64_t Poset::incomparable_pairs() const noexcept {
  return pairs_of(size()) - comparable_pairs_;
}

std::vector<Arc> Poset::relation_arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(comparable_pairs_);
  for (std::size_t v = 0; v < size(); ++v) {
    for (Element u : pred_[v]) arcs.emplace_back(u, static_cast<Element>(v));
  }
  return arcs;
}

Poset poset_from_arcs(std::size_t n, std::span<const Arc> arcs) {
  AdjacencyLists direct(n);
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw ElementOutOfRange("arc (" + std::to_string(u + 1) + ", " +
                              std::to_string(v + 1) + ") outside 1.." +
                              std::to_string(n));
    }
    if (u == v) throw CycleDetected({u});
    direct[v].push_back(u);
  }
  for (auto& list : direct) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  // Kahn's algorithm on the direct arcs.
  AdjacencyLists direct_succ(n);
  std::vector<std::size_t> indegree(n);
  for (std::size_t v = 0; v < n; ++v) {
    indegree[v] = direct[v].size();
    for (Element u : direct[v]) direct_succ[u].push_back(static_cast<Element>(v));
  }
  std::vector<Element> topo;
  topo.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) topo.push_back(static_cast<Element>(v));
  }
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (Element w : direct_succ[topo[head]]) {
      if (--indegree[w] == 0) topo.push_back(w);
    }
  }
  if (topo.size() != n) throw CycleDetected(find_cycle(direct, indegree));

  return Poset::from_closed_predecessors(
      kernels::omp::transitive_closure(direct, topo));
}

std::optional<std::string> find_poset_violation(const Poset& p) {
  const std::size_t n = p.size();
  std::uint64_t pairs = 0;
  for (Element v = 0; v < n; ++v) {
    auto pred = p.predecessors(v);
    pairs += pred.size();
    if (!std::is_sorted(pred.begin(), pred.end())) {
      return "predecessors of " + std::to_string(v + 1) + " not sorted";
    }
    for (Element u : pred) {
      if (u == v) return "reflexive pair at " + std::to_string(v + 1);
      if (p.precedes(v, u)) {
        return "antisymmetry fails for " + std::to_string(u + 1) + ", " +
               std::to_string(v + 1);
      }
      auto succ = p.successors(u);
      if (!std::binary_search(succ.begin(), succ.end(), v)) {
        return "successor list of " + std::to_string(u + 1) + " misses " +
               std::to_string(v + 1);
      }
      for (Element w : p.predecessors(u)) {
        if (!std::binary_search(pred.begin(), pred.end(), w)) {
          return "transitivity fails: " + std::to_string(w + 1) + " < " +
                 std::to_string(u + 1) + " < " + std::to_string(v + 1);
        }
      }
    }
  }
  if (pairs != p.comparable_pairs()) return "comparable pair count is stale";
  return std::nullopt;
}

// --- LinearExtension --------------------------------------------------------

LinearExtension LinearExtension::from_order(std::vector<Element> order) {
  const std::size_t n = order.size();
  std::vector<std::uint32_t> rank(n, static_cast<std::uint32_t>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const Element v = order[r];
    if (v >= n || rank[v] != n) {
      throw InvalidExtension("ordering is not a permutation of 1.." +
                             std::to_string(n));
    }
    rank[v] = static_cast<std::uint32_t>(r);
  }
  LinearExtension le;
  le.order_ = std::move(order);
  le.rank_ = std::move(rank);
  return le;
}

bool LinearExtension::respects(const Poset& p) const {
  if (p.size() != size()) return false;
  for (Element v = 0; v < p.size(); ++v) {
    for (Element u : p.predecessors(v)) {
      if (rank_[u] >= rank_[v]) return false;
    }
  }
  return true;
}

LinearExtension linear_extension(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> remaining(n);
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element v = 0; v < n; ++v) {
    remaining[v] = p.predecessors(v).size();
    if (remaining[v] == 0) ready.push(v);
  }
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    const Element v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Element w : p.successors(v)) {
      if (--remaining[w] == 0) ready.push(w);
    }
  }
  return LinearExtension::from_order(std::move(order));
}

void require_extension(const Poset& p, const LinearExtension& le) {
  if (le.size() != p.size()) {
    throw InvalidExtension("extension has " + std::to_string(le.size()) +
                           " elements, poset has " + std::to_string(p.size()));
  }
  for (Element v = 0; v < p.size(); ++v) {
    for (Element u : p.predecessors(v)) {
      if (le.rank(u) >= le.rank(v)) {
        throw InvalidExtension("element " + std::to_string(u + 1) +
                               " precedes " + std::to_string(v + 1) +
                               " but is ranked after it");
      }
    }
  }
}

// --- ExtendedPoset ----------------------------------------------------------

ExtendedPoset::ExtendedPoset(Poset base, AdjacencyLists base_cover_pred)
    : base_(std::move(base)), cover_pred_(std::move(base_cover_pred)) {
  const std::size_t n = base_.size();
  if (cover_pred_.size() != n) {
    throw SizeMismatch("cover lists do not match the poset size");
  }
  for (auto& list : cover_pred_) {
    if (list.empty()) list.push_back(bottom());
  }
  cover_pred_.emplace_back();  // bottom covers nothing
  std::vector<Element> below_top;
  for (Element v = 0; v < n; ++v) {
    if (base_.successors(v).empty()) below_top.push_back(v);
  }
  if (n == 0) below_top.push_back(bottom());
  cover_pred_.push_back(std::move(below_top));
}

bool ExtendedPoset::covers(Element u, Element v) const {
  if (v >= cover_pred_.size()) return false;
  const auto& list = cover_pred_[v];
  return std::binary_search(list.begin(), list.end(), u);
}

bool ExtendedPoset::precedes(Element u, Element v) const {
  if (u == v) return false;
  if (u == bottom() || v == top()) return true;
  if (u == top() || v == bottom()) return false;
  return base_.precedes(u, v);
}

std::vector<Arc> ExtendedPoset::base_cover_arcs() const {
  std::vector<Arc> arcs;
  for (Element v = 0; v < size(); ++v) {
    for (Element u : cover_pred_[v]) {
      if (u != bottom()) arcs.emplace_back(u, v);
    }
  }
  return arcs;
}

std::size_t ExtendedPoset::cover_count() const noexcept {
  std::size_t total = 0;
  for (const auto& list : cover_pred_) total += list.size();
  return total;
}

ExtendedPoset cover_relation(const Poset& p) {
  return ExtendedPoset(p, kernels::omp::cover_predecessors(p));
}

// --- chains -----------------------------------------------------------------

ChainVerdict check_chain(const Poset& p, std::span<const Element> s) {
  const std::size_t n = p.size();
  const auto bottom = static_cast<Element>(n);
  const auto top = static_cast<Element>(n + 1);
  std::vector<Element> chain(s.begin(), s.end());
  for (Element v : chain) {
    if (v >= n) {
      throw ElementOutOfRange("element " + std::to_string(v + 1) +
                              " outside 1.." + std::to_string(n));
    }
  }
  std::sort(chain.begin(), chain.end());
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());

  ChainVerdict verdict;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (!p.comparable(chain[i], chain[j])) {
        verdict.witness = {chain[i], chain[j]};
        return verdict;
      }
    }
  }
  verdict.is_chain = true;

  // Along a chain the number of predecessors strictly increases.
  std::sort(chain.begin(), chain.end(), [&](Element a, Element b) {
    return p.predecessors(a).size() < p.predecessors(b).size();
  });
  if (chain.empty()) {
    verdict.is_tight = n == 0;
    if (!verdict.is_tight) verdict.witness = {bottom, top};
    return verdict;
  }
  if (!p.predecessors(chain.front()).empty()) {
    verdict.witness = {bottom, chain.front()};
    return verdict;
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (sorted_lists_intersect(p.successors(chain[i]),
                               p.predecessors(chain[i + 1]))) {
      verdict.witness = {chain[i], chain[i + 1]};
      return verdict;
    }
  }
  if (!p.successors(chain.back()).empty()) {
    verdict.witness = {chain.back(), top};
    return verdict;
  }
  verdict.is_tight = true;
  return verdict;
}

}  // namespace posetcount

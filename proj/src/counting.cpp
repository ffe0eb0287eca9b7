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

#include "posetcount/counting.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "ring.hpp"

namespace posetcount {

namespace {

using detail::ExactRing;
using detail::ModRing;
using detail::with_ring;

template <class Ring>
constexpr bool kExact = std::is_same_v<Ring, ExactRing>;

template <class Ring>
std::vector<Count> to_counts(const Ring& ring,
                             const std::vector<typename Ring::value_type>& v) {
  std::vector<Count> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ring.to_count(x));
  return out;
}

void require_k(std::size_t k, std::size_t n) {
  if (k > n) {
    throw KOutOfRange("size bound " + std::to_string(k) + " exceeds n = " +
                      std::to_string(n));
  }
}

// Cover arcs respecting the ranks imply every comparable pair does.
void require_cover_extension(const ExtendedPoset& ep,
                             const LinearExtension& le) {
  if (le.size() != ep.size()) {
    throw InvalidExtension("extension has " + std::to_string(le.size()) +
                           " elements, poset has " + std::to_string(ep.size()));
  }
  for (Element v = 0; v < ep.size(); ++v) {
    for (Element u : ep.cover_predecessors(v)) {
      if (u != ep.bottom() && le.rank(u) >= le.rank(v)) {
        throw InvalidExtension("element " + std::to_string(u + 1) +
                               " precedes " + std::to_string(v + 1) +
                               " but is ranked after it");
      }
    }
  }
}

// a-values along the extension: [bottom, v_1..v_n, top].
template <class Ring>
std::vector<typename Ring::value_type> direct_chain_counts(
    const Poset& p, const LinearExtension& le, const Ring& ring) {
  const std::size_t n = p.size();
  std::vector<typename Ring::value_type> a(n + 2, ring.zero());
  a[0] = ring.one();
  auto top = ring.one();
  for (std::size_t r = 0; r < n; ++r) {
    auto value = ring.one();  // the bottom is below everything
    for (Element u : p.predecessors(le.at(r))) ring.add(value, a[le.rank(u) + 1]);
    ring.add(top, value);
    a[r + 1] = std::move(value);
  }
  a[n + 1] = std::move(top);
  return a;
}

// The same values via the running total t(v_i) = a(bottom) + sum_{j<i} a(v_j).
// On the neighbour side the terms for incomparable earlier elements are
// subtracted from t; on the predecessor side the comparable ones are added.
template <class Ring>
std::vector<typename Ring::value_type> prefix_chain_counts(
    const OrderedInstance& inst, const Ring& ring) {
  const std::size_t n = inst.size();
  const bool neighbors = inst.side() == OrderedInstance::Side::kNeighbors;
  std::vector<typename Ring::value_type> a(n + 2, ring.zero());
  a[0] = ring.one();
  auto t = ring.one();
  for (std::size_t r = 0; r < n; ++r) {
    auto value = neighbors ? t : ring.one();
    for (std::uint32_t q : inst.earlier(r)) {
      if (neighbors) {
        ring.sub(value, a[q + 1]);
      } else {
        ring.add(value, a[q + 1]);
      }
    }
    ring.add(t, value);
    a[r + 1] = std::move(value);
  }
  a[n + 1] = std::move(t);
  return a;
}

template <class Ring>
std::vector<typename Ring::value_type> maximal_chain_counts(
    const ExtendedPoset& ep, const LinearExtension& le, const Ring& ring) {
  const std::size_t n = ep.size();
  std::vector<typename Ring::value_type> b(n + 2, ring.zero());  // by id
  b[ep.bottom()] = ring.one();
  for (Element v : le.order()) {
    for (Element u : ep.cover_predecessors(v)) ring.add(b[v], b[u]);
  }
  for (Element u : ep.cover_predecessors(ep.top())) ring.add(b[ep.top()], b[u]);

  std::vector<typename Ring::value_type> out;
  out.reserve(n + 2);
  out.push_back(b[ep.bottom()]);
  for (Element v : le.order()) out.push_back(b[v]);
  out.push_back(b[ep.top()]);
  return out;
}

// One pass per size level. prev[r] holds c(v_r, i-1); the bottom contributes
// only at level 0, so its running value is one for i = 1 and zero afterwards.
template <class Ring>
std::vector<typename Ring::value_type> sized_chain_counts(
    const OrderedInstance& inst, std::size_t k, const Ring& ring) {
  const std::size_t n = inst.size();
  const bool neighbors = inst.side() == OrderedInstance::Side::kNeighbors;
  std::vector<typename Ring::value_type> counts(k + 1, ring.zero());
  counts[0] = ring.one();
  std::vector<typename Ring::value_type> prev(n, ring.zero());
  std::vector<typename Ring::value_type> cur(n, ring.zero());
  auto prev_bottom = ring.one();
  for (std::size_t i = 1; i <= k; ++i) {
    auto t = prev_bottom;
    auto total = ring.zero();
    bool any = false;
    for (std::size_t r = 0; r < n; ++r) {
      auto value = neighbors ? t : prev_bottom;
      for (std::uint32_t q : inst.earlier(r)) {
        if (neighbors) {
          ring.sub(value, prev[q]);
        } else {
          ring.add(value, prev[q]);
        }
      }
      ring.add(t, prev[r]);
      ring.add(total, value);
      any = any || !ring.is_zero(value);
      cur[r] = std::move(value);
    }
    counts[i] = std::move(total);
    std::swap(prev, cur);
    prev_bottom = ring.zero();
    // Exact zeros at one level stay zero above it; residues prove nothing.
    if constexpr (kExact<Ring>) {
      if (!any) break;
    }
  }
  return counts;
}

template <class Ring>
std::vector<typename Ring::value_type> sized_maximal_counts(
    const ExtendedPoset& ep, const LinearExtension& le, std::size_t k,
    const Ring& ring) {
  const std::size_t n = ep.size();
  std::vector<typename Ring::value_type> counts(k + 1, ring.zero());
  std::vector<typename Ring::value_type> prev(n + 2, ring.zero());  // by id
  std::vector<typename Ring::value_type> cur(n + 2, ring.zero());
  prev[ep.bottom()] = ring.one();
  auto below_top = [&](const std::vector<typename Ring::value_type>& row) {
    auto sum = ring.zero();
    for (Element u : ep.cover_predecessors(ep.top())) ring.add(sum, row[u]);
    return sum;
  };
  counts[0] = below_top(prev);
  for (std::size_t i = 1; i <= k; ++i) {
    bool any = false;
    cur[ep.bottom()] = ring.zero();
    for (Element v : le.order()) {
      auto value = ring.zero();
      for (Element u : ep.cover_predecessors(v)) ring.add(value, prev[u]);
      any = any || !ring.is_zero(value);
      cur[v] = std::move(value);
    }
    counts[i] = below_top(cur);
    std::swap(prev, cur);
    if constexpr (kExact<Ring>) {
      if (!any) break;
    }
  }
  return counts;
}

void spot_check(const Graph& g, const Poset& p, const LinearExtension& le) {
  const std::size_t n = p.size();
  if (n < 2) return;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int trial = 0; trial < 32; ++trial) {
    const Element u = pick(rng);
    const Element v = pick(rng);
    if (u != v && g.adjacent(u, v) == p.comparable(u, v)) {
      throw GraphPosetMismatch("vertices " + std::to_string(u + 1) + " and " +
                               std::to_string(v + 1) +
                               " are adjacent iff comparable");
    }
    for (Element w : p.predecessors(v)) {
      if (le.rank(w) >= le.rank(v)) {
        throw InvalidExtension("element " + std::to_string(w + 1) +
                               " precedes " + std::to_string(v + 1) +
                               " but is ranked after it");
      }
    }
  }
}

}  // namespace

// --- tables and profiles ----------------------------------------------------

CountTable::CountTable(std::vector<Count> entries,
                       std::span<const Element> order)
    : entries_(std::move(entries)),
      order_(order.begin(), order.end()),
      rank_(order.size()) {
  if (entries_.size() != order_.size() + 2) {
    throw SizeMismatch("table needs n + 2 entries");
  }
  for (std::size_t r = 0; r < order_.size(); ++r) {
    rank_[order_[r]] = static_cast<std::uint32_t>(r);
  }
}

Count SizeProfile::total() const {
  const CountMode mode = counts.empty() ? CountMode{} : counts.front().mode();
  if (mode.is_modular()) {
    ModRing ring{mode.modulus};
    std::uint64_t sum = 0;
    for (const Count& c : counts) ring.add(sum, c.value().get_ui());
    return ring.to_count(sum);
  }
  mpz_class sum = 0;
  for (const Count& c : counts) sum += c.value();
  return Count(sum);
}

// --- all independent sets ---------------------------------------------------

CountTable count_is_table(const Poset& p, const LinearExtension& le,
                          CountMode mode) {
  require_extension(p, le);
  return with_ring(mode, [&](const auto& ring) {
    return CountTable(to_counts(ring, direct_chain_counts(p, le, ring)),
                      le.order());
  });
}

Count count_is(const Poset& p, const LinearExtension& le, CountMode mode) {
  return count_is_table(p, le, mode).top();
}

CountTable count_is_fast_table(const Graph& g, const Poset& p,
                               const LinearExtension& le,
                               const FastOptions& options) {
  const std::size_t n = p.size();
  if (le.size() != n) {
    throw InvalidExtension("extension has " + std::to_string(le.size()) +
                           " elements, poset has " + std::to_string(n));
  }
  if (g.size() != n || g.edge_count() + p.comparable_pairs() != pair_count(n)) {
    throw GraphPosetMismatch(
        "graph is not the incomparability graph of the poset");
  }
  if (options.validate) {
    require_extension(p, le);
    if (!validate_orientation(g, p)) {
      throw GraphPosetMismatch(
          "graph is not the incomparability graph of the poset");
    }
  } else {
    spot_check(g, p, le);
  }
  return count_is_table(OrderedInstance::from_cheaper_side(g, p, le),
                        options.mode);
}

Count count_is_fast(const Graph& g, const Poset& p, const LinearExtension& le,
                    const FastOptions& options) {
  return count_is_fast_table(g, p, le, options).top();
}

CountTable count_is_table(const OrderedInstance& inst, CountMode mode) {
  return with_ring(mode, [&](const auto& ring) {
    return CountTable(to_counts(ring, prefix_chain_counts(inst, ring)),
                      inst.order());
  });
}

Count count_is(const OrderedInstance& inst, CountMode mode) {
  return with_ring(mode, [&](const auto& ring) {
    return ring.to_count(prefix_chain_counts(inst, ring).back());
  });
}

// --- maximal ----------------------------------------------------------------

CountTable count_maximal_is_table(const ExtendedPoset& ep,
                                  const LinearExtension& le, CountMode mode) {
  require_cover_extension(ep, le);
  return with_ring(mode, [&](const auto& ring) {
    return CountTable(to_counts(ring, maximal_chain_counts(ep, le, ring)),
                      le.order());
  });
}

Count count_maximal_is(const ExtendedPoset& ep, const LinearExtension& le,
                       CountMode mode) {
  return count_maximal_is_table(ep, le, mode).top();
}

// --- by size ----------------------------------------------------------------

SizeProfile count_is_by_size(const OrderedInstance& inst, std::size_t k,
                             CountMode mode) {
  require_k(k, inst.size());
  return with_ring(mode, [&](const auto& ring) {
    return SizeProfile{ProfileKind::kAllSets,
                       to_counts(ring, sized_chain_counts(inst, k, ring))};
  });
}

SizeProfile count_is_by_size(const Poset& p, const LinearExtension& le,
                             std::size_t k, CountMode mode) {
  require_k(k, p.size());
  return count_is_by_size(OrderedInstance::from_predecessors(p, le), k, mode);
}

SizeProfile count_maximal_is_by_size(const ExtendedPoset& ep,
                                     const LinearExtension& le, std::size_t k,
                                     CountMode mode) {
  require_k(k, ep.size());
  require_cover_extension(ep, le);
  return with_ring(mode, [&](const auto& ring) {
    return SizeProfile{ProfileKind::kMaximalSets,
                       to_counts(ring, sized_maximal_counts(ep, le, k, ring))};
  });
}

MaximumInfo alpha_and_maximum_count(const SizeProfile& profile) {
  for (std::size_t i = profile.counts.size(); i-- > 0;) {
    if (!profile.counts[i].is_zero()) return {i, profile.counts[i]};
  }
  return {0, profile.counts.empty() ? Count(1) : profile.counts.front()};
}

mpq_class evaluate_polynomial(const SizeProfile& profile, const mpq_class& x) {
  mpq_class value = 0;
  for (auto it = profile.counts.rbegin(); it != profile.counts.rend(); ++it) {
    if (it->is_modular()) {
      throw std::invalid_argument("exact evaluation of a modular profile");
    }
    value = value * x + mpq_class(it->value());
  }
  return value;
}

Count evaluate_polynomial_mod(const SizeProfile& profile, std::int64_t x) {
  if (profile.counts.empty() || !profile.counts.front().is_modular()) {
    throw std::invalid_argument("modular evaluation needs a modular profile");
  }
  const std::uint64_t m = profile.counts.front().modulus();
  ModRing ring{m};
  const auto magnitude =
      static_cast<std::uint64_t>(x < 0 ? -(x + 1) : x) + (x < 0 ? 1 : 0);
  std::uint64_t point = magnitude % m;
  if (x < 0 && point != 0) point = m - point;
  std::uint64_t value = 0;
  for (auto it = profile.counts.rbegin(); it != profile.counts.rend(); ++it) {
    value = ring.mul(value, point);
    ring.add(value, it->value().get_ui());
  }
  return ring.to_count(value);
}

// --- dispatch ---------------------------------------------------------------

CountResult count_independent_sets(const Poset& p, const LinearExtension& le,
                                   Variant variant, std::size_t k,
                                   CountMode mode) {
  switch (variant) {
    case Variant::kAll:
      return count_is(p, le, mode);
    case Variant::kMaximal:
      return count_maximal_is(cover_relation(p), le, mode);
    case Variant::kBySize:
      return count_is_by_size(p, le, k, mode);
    case Variant::kMaximalBySize:
      require_k(k, p.size());
      return count_maximal_is_by_size(cover_relation(p), le, k, mode);
  }
  throw std::invalid_argument("unknown variant");
}

CountResult count_cliques(const Poset& p, const LinearExtension& le,
                          Variant variant, std::size_t k, CountMode mode) {
  // Cliques of the comparability graph are the chains of p, which are the
  // independent sets of its incomparability graph.
  return count_independent_sets(p, le, variant, k, mode);
}

PermutationCounts permutation_counts(const PermutationModel& model,
                                     Variant variant, std::size_t k,
                                     CountMode mode) {
  std::vector<Element> identity(model.pi.size());
  for (std::size_t i = 0; i < identity.size(); ++i) {
    identity[i] = static_cast<Element>(i);
  }
  const auto le = LinearExtension::from_order(std::move(identity));
  return {count_independent_sets(model.is_poset, le, variant, k, mode),
          count_cliques(model.clique_poset, le, variant, k, mode)};
}

}  // namespace posetcount

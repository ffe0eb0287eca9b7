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

#include "posetcount/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "posetcount/counting.hpp"
#include "posetcount/oracle.hpp"

namespace posetcount {

namespace {

OrderedInstance make_instance(BenchFamily family, std::size_t n,
                              std::uint64_t seed) {
  std::vector<std::uint32_t> pi(n);
  std::iota(pi.begin(), pi.end(), std::uint32_t{0});
  switch (family) {
    case BenchFamily::kChain:
      break;
    case BenchFamily::kAntichain:
      std::reverse(pi.begin(), pi.end());
      break;
    case BenchFamily::kRandomPermutation:
      pi = oracle::random_permutation({n, 0.0, seed + n});
      break;
  }
  return OrderedInstance::from_permutation(
      pi, OrderedInstance::PermutationTarget::kIndependentSets);
}

double seconds_per_run(const OrderedInstance& inst, CountMode mode,
                       std::string& result) {
  using clock = std::chrono::steady_clock;
  auto elapsed = [](clock::time_point since) {
    return std::chrono::duration<double>(clock::now() - since).count();
  };
  auto start = clock::now();
  result = count_is(inst, mode).to_string();
  const double first = std::max(elapsed(start), 1e-7);
  const auto reps = static_cast<std::size_t>(
      std::clamp(0.01 / first, 1.0, 1e6));  // ~10 ms batches
  double best = first;
  for (int batch = 0; batch < 5; ++batch) {
    start = clock::now();
    for (std::size_t i = 0; i < reps; ++i) count_is(inst, mode);
    best = std::min(best, elapsed(start) / static_cast<double>(reps));
  }
  return best;
}

}  // namespace

const char* family_name(BenchFamily family) {
  switch (family) {
    case BenchFamily::kChain:
      return "chain";
    case BenchFamily::kAntichain:
      return "antichain";
    case BenchFamily::kRandomPermutation:
      return "random-permutation";
  }
  return "?";
}

std::vector<ScalingPoint> run_scaling_series(BenchFamily family,
                                             std::span<const std::size_t> sizes,
                                             CountMode mode,
                                             std::uint64_t seed) {
  std::vector<ScalingPoint> points;
  for (std::size_t n : sizes) {
    const OrderedInstance inst = make_instance(family, n, seed);
    ScalingPoint point{family, n, inst.m_star(), 0.0, {}};
    point.seconds = seconds_per_run(inst, mode, point.result);
    points.push_back(std::move(point));
  }
  return points;
}

double worst_growth_ratio(std::span<const ScalingPoint> points) {
  double worst = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto unit = [](const ScalingPoint& p) {
      return p.seconds / static_cast<double>(p.n + p.m_star);
    };
    worst = std::max(worst, unit(points[i]) / unit(points[i - 1]));
  }
  return worst;
}

}  // namespace posetcount

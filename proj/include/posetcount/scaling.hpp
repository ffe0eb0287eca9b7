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
#include <string>
#include <vector>

#include "posetcount/count.hpp"

namespace posetcount {

enum class BenchFamily { kChain, kAntichain, kRandomPermutation };

struct ScalingPoint {
  BenchFamily family;
  std::size_t n = 0;
  std::uint64_t m_star = 0;
  double seconds = 0.0;  // per counting run
  std::string result;    // a(top), for eyeballing
};

const char* family_name(BenchFamily family);

/// Times the prefix-sum counter on one instance per size. Instances are built
/// outside the timed region; each timing is the best of several batches.
std::vector<ScalingPoint> run_scaling_series(BenchFamily family,
                                             std::span<const std::size_t> sizes,
                                             CountMode mode,
                                             std::uint64_t seed = 1);

/// Largest ratio of per-unit cost between consecutive points, where the unit
/// is n + m*. Linear scaling gives ratios near 1.
double worst_growth_ratio(std::span<const ScalingPoint> points);

}  // namespace posetcount

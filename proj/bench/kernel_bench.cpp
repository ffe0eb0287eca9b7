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

// Serial reference kernels against their OpenMP versions, and the direct
// counter against the prefix-sum counter, on random posets of growing size.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "posetcount/counting.hpp"
#include "posetcount/kernels.hpp"
#include "posetcount/oracle.hpp"

namespace pc = posetcount;

namespace {

double time_best_of(int runs, const std::function<void()>& body) {
  double best = 1e300;
  for (int i = 0; i < runs; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> d =
        std::chrono::steady_clock::now() - start;
    best = std::min(best, d.count());
  }
  return best;
}

// Direct arcs of p's cover relation plus a topological order, the input the
// closure kernels expect.
std::pair<pc::AdjacencyLists, std::vector<pc::Element>> closure_input(
    const pc::Poset& p) {
  const auto le = pc::linear_extension(p);
  pc::AdjacencyLists direct = pc::kernels::omp::cover_predecessors(p);
  return {direct, {le.order().begin(), le.order().end()}};
}

}  // namespace

int main(int argc, char** argv) {
  const int runs = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("# threads %d\n", omp_get_max_threads());
  std::printf("%-24s %6s %12s %12s %8s\n", "kernel", "n", "serial_s", "omp_s",
              "speedup");
  for (std::size_t n : {250, 500, 1000, 2000}) {
    const pc::Poset p = pc::oracle::random_poset({n, 4.0 / n, 7});
    const auto [direct, topo] = closure_input(p);
    const auto inc = pc::kernels::omp::incomparability_adjacency(p);

    auto row = [&](const char* name, const std::function<void()>& serial,
                   const std::function<void()>& parallel) {
      const double s = time_best_of(runs, serial);
      const double o = time_best_of(runs, parallel);
      std::printf("%-24s %6zu %12.6f %12.6f %8.2f\n", name, n, s, o, s / o);
    };
    row("transitive_closure",
        [&] { pc::kernels::serial::transitive_closure(direct, topo); },
        [&] { pc::kernels::omp::transitive_closure(direct, topo); });
    row("cover_predecessors",
        [&] { pc::kernels::serial::cover_predecessors(p); },
        [&] { pc::kernels::omp::cover_predecessors(p); });
    row("incomparability", [&] { pc::kernels::serial::incomparability_adjacency(p); },
        [&] { pc::kernels::omp::incomparability_adjacency(p); });
    row("comparability", [&] { pc::kernels::serial::comparability_adjacency(p); },
        [&] { pc::kernels::omp::comparability_adjacency(p); });
    row("complement", [&] { pc::kernels::serial::complement_adjacency(inc); },
        [&] { pc::kernels::omp::complement_adjacency(inc); });

    // Direct recurrence over comparable pairs against the prefix-sum counter
    // over the cheaper side, both modulo a prime.
    const auto le = pc::linear_extension(p);
    const auto g = pc::incomparability_graph(p);
    const auto mode = pc::CountMode::modulo(1'000'000'007);
    const auto inst = pc::OrderedInstance::from_cheaper_side(g, p, le);
    const double d = time_best_of(runs, [&] { pc::count_is(p, le, mode); });
    const double f = time_best_of(runs, [&] { pc::count_is(inst, mode); });
    std::printf("%-24s %6zu %12.6f %12.6f %8.2f   (direct vs prefix-sum)\n",
                "count_is", n, d, f, d / f);
  }
  return 0;
}

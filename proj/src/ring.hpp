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

// Arithmetic back ends for the dynamic programs. Every counter is written once
// against this tiny interface and instantiated for exact and modular counts.

#include <cstdint>

#include <gmpxx.h>

#include "posetcount/count.hpp"

namespace posetcount::detail {

struct ExactRing {
  using value_type = mpz_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  void add(value_type& acc, const value_type& x) const { acc += x; }
  void sub(value_type& acc, const value_type& x) const { acc -= x; }
  value_type mul(const value_type& a, const value_type& b) const {
    return a * b;
  }
  bool is_zero(const value_type& x) const { return x == 0; }
  Count to_count(const value_type& x) const { return Count(x); }
};

struct ModRing {
  using value_type = std::uint64_t;
  std::uint64_t modulus;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % modulus; }
  void add(value_type& acc, value_type x) const {
    const std::uint64_t s = acc + x;
    acc = (s < acc || s >= modulus) ? s - modulus : s;
  }
  void sub(value_type& acc, value_type x) const {
    acc = acc >= x ? acc - x : acc + (modulus - x);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b %
                                   modulus);
  }
  bool is_zero(value_type x) const { return x == 0; }
  Count to_count(value_type x) const { return Count(x, modulus); }
};

/// Calls f with the ring matching `mode`.
template <class F>
decltype(auto) with_ring(CountMode mode, F&& f) {
  if (mode.is_modular()) return f(ModRing{mode.modulus});
  return f(ExactRing{});
}

}  // namespace posetcount::detail

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
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace posetcount {

/// How counts are represented: exact big integers, or residues modulo a
/// machine word. A single computation never mixes the two.
struct CountMode {
  std::uint64_t modulus = 0;  // 0 means exact

  static CountMode exact() { return {}; }
  /// Throws std::invalid_argument for moduli below 2.
  static CountMode modulo(std::uint64_t m);

  bool is_modular() const noexcept { return modulus != 0; }
  friend bool operator==(const CountMode&, const CountMode&) = default;
};

/// A nonnegative count, either exact or a residue.
class Count {
 public:
  Count() = default;
  explicit Count(mpz_class value);
  Count(std::uint64_t residue, std::uint64_t modulus);

  bool is_modular() const noexcept { return modulus_ != 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  CountMode mode() const noexcept { return {modulus_}; }

  /// The exact value, or the residue in [0, modulus).
  const mpz_class& value() const noexcept { return value_; }
  bool is_zero() const { return value_ == 0; }

  /// This count reduced modulo m. Throws std::logic_error for a modular count
  /// with a different modulus.
  Count reduced(std::uint64_t m) const;

  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const Count& a, const Count& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Count& c) {
    return os << c.value_;
  }

 private:
  mpz_class value_ = 0;
  std::uint64_t modulus_ = 0;
};

}  // namespace posetcount

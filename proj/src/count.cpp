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

#include "posetcount/count.hpp"

#include <stdexcept>

namespace posetcount {

CountMode CountMode::modulo(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  return {m};
}

Count::Count(mpz_class value) : value_(std::move(value)) {
  if (value_ < 0) throw std::invalid_argument("counts are nonnegative");
}

Count::Count(std::uint64_t residue, std::uint64_t modulus)
    : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  residue %= modulus;
  // mpz_class has no uint64_t constructor on every platform.
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof residue, 0, 0, &residue);
}

Count Count::reduced(std::uint64_t m) const {
  if (is_modular()) {
    if (modulus_ != m) {
      throw std::logic_error("cannot reduce a residue to a different modulus");
    }
    return *this;
  }
  mpz_class mod;
  mpz_import(mod.get_mpz_t(), 1, 1, sizeof m, 0, 0, &m);
  mpz_class r = value_ % mod;
  std::uint64_t residue = 0;
  mpz_export(&residue, nullptr, 1, sizeof residue, 0, 0, r.get_mpz_t());
  return Count(residue, m);
}

}  // namespace posetcount

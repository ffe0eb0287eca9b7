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
#include <stdexcept>
#include <string>
#include <vector>

namespace posetcount {

using Element = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The arc set handed to poset_from_arcs contains a directed cycle.
class CycleDetected : public Error {
 public:
  explicit CycleDetected(std::vector<Element> cycle);
  /// Elements of one cycle, in arc order; the last element precedes the first.
  const std::vector<Element>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<Element> cycle_;
};

class ElementOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A vertex ordering is not a linear extension of the poset it is used with.
class InvalidExtension : public Error {
 public:
  using Error::Error;
};

/// The graph handed to the fast counter is not the incomparability graph of
/// the accompanying poset.
class GraphPosetMismatch : public Error {
 public:
  using Error::Error;
};

class KOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration refused because the instance is too large.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedCombination : public Error {
 public:
  using Error::Error;
};

}  // namespace posetcount

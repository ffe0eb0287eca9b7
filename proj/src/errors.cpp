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

#include "posetcount/errors.hpp"

#include <sstream>

namespace posetcount {

namespace {

std::string describe_cycle(const std::vector<Element>& cycle) {
  std::ostringstream os;
  os << "arcs contain a directed cycle:";
  for (Element v : cycle) os << ' ' << v + 1;
  return os.str();
}

}  // namespace

CycleDetected::CycleDetected(std::vector<Element> cycle)
    : Error(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

}  // namespace posetcount

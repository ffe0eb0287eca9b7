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

#include "posetcount/io.hpp"

#include <limits>
#include <sstream>
#include <string>

namespace posetcount::io {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line with content, or false at end of input.
  bool next(std::istringstream& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      fields.clear();
      fields.str(line);
      return true;
    }
    return false;
  }

  std::size_t line() const { return number_; }
  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(number_, reason);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::uint64_t read_number(LineReader& reader, std::istringstream& fields,
                          const char* what) {
  std::string token;
  if (!(fields >> token)) reader.fail(std::string("missing ") + what);
  if (token.find_first_not_of("0123456789") != std::string::npos) {
    reader.fail(std::string("bad ") + what + " '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    reader.fail(std::string(what) + " too large");
  }
}

Element read_id(LineReader& reader, std::istringstream& fields, std::size_t n,
                const char* what) {
  const std::uint64_t id = read_number(reader, fields, what);
  if (id < 1 || id > n) {
    reader.fail(std::string(what) + " " + std::to_string(id) +
                " outside 1.." + std::to_string(n));
  }
  return static_cast<Element>(id - 1);
}

void expect_end(LineReader& reader, std::istringstream& fields) {
  std::string extra;
  if (fields >> extra) reader.fail("unexpected '" + extra + "'");
}

void expect_keyword(LineReader& reader, std::istringstream& fields,
                    const std::string& keyword) {
  std::string word;
  fields >> word;
  if (word != keyword) {
    reader.fail("expected '" + keyword + "', found '" + word + "'");
  }
}

std::size_t read_size(LineReader& reader, std::istringstream& fields) {
  const std::uint64_t n = read_number(reader, fields, "element count");
  if (n > std::numeric_limits<Element>::max() - 2) {
    reader.fail("element count too large");
  }
  return static_cast<std::size_t>(n);
}

void expect_eof(LineReader& reader) {
  std::istringstream fields;
  if (reader.next(fields)) reader.fail("trailing content");
}

template <class Pair>
std::vector<Pair> read_pairs(LineReader& reader, std::size_t n,
                             std::uint64_t count, const char* keyword,
                             bool reject_loops = false) {
  std::vector<Pair> pairs;
  std::istringstream fields;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!reader.next(fields)) {
      throw ParseError(reader.line(), "expected " + std::to_string(count) +
                                          " '" + keyword + "' lines, got " +
                                          std::to_string(i));
    }
    expect_keyword(reader, fields, keyword);
    const Element u = read_id(reader, fields, n, "element");
    const Element v = read_id(reader, fields, n, "element");
    expect_end(reader, fields);
    if (reject_loops && u == v) {
      reader.fail("self loop at " + std::to_string(u + 1));
    }
    pairs.emplace_back(u, v);
  }
  expect_eof(reader);
  return pairs;
}

}  // namespace

Poset read_poset(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;
  if (!reader.next(fields)) throw ParseError(reader.line(), "empty input");
  expect_keyword(reader, fields, "poset");
  const std::size_t n = read_size(reader, fields);
  const std::uint64_t count = read_number(reader, fields, "arc count");
  expect_end(reader, fields);
  const auto arcs = read_pairs<Arc>(reader, n, count, "a");
  return poset_from_arcs(n, arcs);
}

std::vector<std::uint32_t> read_permutation(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;
  if (!reader.next(fields)) throw ParseError(reader.line(), "empty input");
  expect_keyword(reader, fields, "perm");
  const std::size_t n = read_size(reader, fields);
  std::vector<std::uint32_t> pi;
  pi.reserve(n);
  // Values may follow on the header line or spread over later lines.
  for (;;) {
    std::string token;
    while (fields >> token) {
      if (pi.size() == n) reader.fail("more than " + std::to_string(n) + " values");
      std::istringstream one(token);
      pi.push_back(read_id(reader, one, n, "value"));
    }
    if (pi.size() == n) break;
    if (!reader.next(fields)) {
      throw ParseError(reader.line(), "expected " + std::to_string(n) +
                                          " values, got " +
                                          std::to_string(pi.size()));
    }
  }
  expect_eof(reader);
  require_permutation(pi);
  return pi;
}

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;
  if (!reader.next(fields)) throw ParseError(reader.line(), "empty input");
  expect_keyword(reader, fields, "graph");
  const std::size_t n = read_size(reader, fields);
  const std::uint64_t m = read_number(reader, fields, "edge count");
  expect_end(reader, fields);
  const auto edges = read_pairs<Edge>(reader, n, m, "e", true);
  return Graph::from_edges(n, edges);
}

void write_poset(std::ostream& out, const Poset& p) {
  const auto arcs = cover_relation(p).base_cover_arcs();
  out << "poset " << p.size() << ' ' << arcs.size() << '\n';
  for (const auto& [u, v] : arcs) out << "a " << u + 1 << ' ' << v + 1 << '\n';
}

void write_permutation(std::ostream& out,
                       const std::vector<std::uint32_t>& pi) {
  out << "perm " << pi.size() << '\n';
  for (std::size_t i = 0; i < pi.size(); ++i) {
    out << (i == 0 ? "" : " ") << pi[i] + 1;
  }
  out << '\n';
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << "graph " << g.size() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace posetcount::io

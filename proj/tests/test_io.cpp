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

#include <sstream>

#include <gtest/gtest.h>

#include "posetcount/oracle.hpp"
#include "test_support.hpp"

namespace posetcount::io {
namespace {

template <class F>
std::size_t parse_error_line(const std::string& text, F read) {
  std::istringstream in(text);
  try {
    read(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(ReadPoset, CommentsAndClosure) {
  std::istringstream in("# path\n\nposet 3 2\na 1 2\n  # inner\na 2 3\n");
  const Poset p = read_poset(in);
  EXPECT_EQ(p, testing::chain(3));
  EXPECT_TRUE(p.precedes(0, 2));
}

TEST(ReadPoset, Errors) {
  const auto read = [](std::istream& in) { return read_poset(in); };
  EXPECT_EQ(parse_error_line("poset 3 1\na 1 4\n", read), 2u);
  EXPECT_EQ(parse_error_line("poset 3 2\na 1 2\n", read), 2u);
  EXPECT_EQ(parse_error_line("# x\nposet 3 1\n\nb 1 2\n", read), 4u);
  EXPECT_EQ(parse_error_line("graph 3 0\n", read), 1u);
  EXPECT_EQ(parse_error_line("poset x 0\n", read), 1u);
  EXPECT_EQ(parse_error_line("poset 2 1\na 1 2 3\n", read), 2u);
  EXPECT_EQ(parse_error_line("poset 2 0\nextra\n", read), 2u);
  EXPECT_EQ(parse_error_line("", read), 0u);
  std::istringstream cyclic("poset 2 2\na 1 2\na 2 1\n");
  EXPECT_THROW(read_poset(cyclic), CycleDetected);
}

TEST(ReadPermutation, Layouts) {
  std::istringstream one("perm 4 2 1 4 3\n");
  EXPECT_EQ(read_permutation(one), (std::vector<std::uint32_t>{1, 0, 3, 2}));
  std::istringstream spread("perm 4\n2 1\n# gap\n4 3\n");
  EXPECT_EQ(read_permutation(spread), (std::vector<std::uint32_t>{1, 0, 3, 2}));
  std::istringstream empty("perm 0\n");
  EXPECT_TRUE(read_permutation(empty).empty());
}

TEST(ReadPermutation, Errors) {
  const auto read = [](std::istream& in) { return read_permutation(in); };
  EXPECT_EQ(parse_error_line("perm 3\n1 2\n", read), 2u);
  EXPECT_EQ(parse_error_line("perm 2\n1 2 1\n", read), 2u);
  EXPECT_EQ(parse_error_line("perm 2\n0 1\n", read), 2u);
  std::istringstream repeated("perm 3\n1 1 2\n");
  EXPECT_THROW(read_permutation(repeated), NotAPermutation);
}

TEST(ReadGraph, EdgesAndErrors) {
  std::istringstream in("graph 4 2\ne 1 2\ne 3 4\n");
  const Graph g = read_graph(in);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(3, 2));
  const auto read = [](std::istream& s) { return read_graph(s); };
  EXPECT_EQ(parse_error_line("graph 3 2\ne 1 2\n\ne 2 2\n", read), 4u);
  EXPECT_EQ(parse_error_line("graph 3 1\ne 1 9\n", read), 2u);
}

TEST(RoundTrip, GeneratedInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const oracle::GeneratorSpec spec{seed % 16, 0.3, seed};
    const Poset p = oracle::random_poset(spec);
    std::stringstream poset_text;
    write_poset(poset_text, p);
    EXPECT_EQ(read_poset(poset_text), p);

    const auto pi = oracle::random_permutation(spec);
    std::stringstream perm_text;
    write_permutation(perm_text, pi);
    EXPECT_EQ(read_permutation(perm_text), pi);

    const Graph g = incomparability_graph(p);
    std::stringstream graph_text;
    write_graph(graph_text, g);
    EXPECT_EQ(read_graph(graph_text), g);
  }
}

}  // namespace
}  // namespace posetcount::io

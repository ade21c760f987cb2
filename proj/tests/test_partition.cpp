/*
 * Copyright (c) 2026 The parcolor Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "doctest.h"
#include "oracles.hpp"
#include "parcolor/partition.hpp"

using namespace parcolor;

namespace {

Graph gnp(std::uint64_t n, double prob, std::uint64_t seed) {
  return generate_synthetic(
      {.kind = SyntheticKind::gnp, .size_a = n, .probability = prob, .seed = seed});
}

// Blocks must be contiguous, ordered, disjoint, and cover [0, n).
void check_cover(const Graph& g, const Partitioning& part) {
  std::size_t total = 0;
  VertexId cursor = 0;
  for (std::uint32_t i = 0; i < part.block_count(); ++i) {
    const BlockRange r = part.block_range(i);
    CHECK(r.begin == cursor);
    CHECK(r.begin <= r.end);
    cursor = r.end;
    total += r.end - r.begin;
    for (VertexId v = r.begin; v != r.end; ++v) CHECK(part.block_of(v) == i);
  }
  CHECK(cursor == g.vertex_count());
  CHECK(total == g.vertex_count());
}

}  // namespace

TEST_CASE("partition_uniform splits with remainder in the last block") {
  const Graph g = generate_synthetic({.kind = SyntheticKind::path, .size_a = 10});
  const Partitioning part = partition_uniform(g, 3);
  CHECK(part.block_range(0) == BlockRange{0, 3});
  CHECK(part.block_range(1) == BlockRange{3, 6});
  CHECK(part.block_range(2) == BlockRange{6, 10});
  check_cover(g, part);
}

TEST_CASE("partition_uniform boundary on a split path") {
  const Graph g = generate_synthetic({.kind = SyntheticKind::path, .size_a = 6});
  const Partitioning part = partition_uniform(g, 2);
  for (VertexId v = 0; v < 6; ++v) CHECK(part.is_boundary(v) == (v == 2 || v == 3));
}

TEST_CASE("partition_uniform rejects zero blocks") {
  const Graph g = generate_synthetic({.kind = SyntheticKind::path, .size_a = 4});
  CHECK_THROWS_AS(partition_uniform(g, 0), std::invalid_argument);
}

TEST_CASE("partition_uniform with one block has no boundary") {
  const Graph g = gnp(120, 0.05, 2);
  const Partitioning part = partition_uniform(g, 1);
  check_cover(g, part);
  for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK_FALSE(part.is_boundary(v));
}

TEST_CASE("partition_uniform with more blocks than vertices") {
  const Graph g = generate_synthetic({.kind = SyntheticKind::path, .size_a = 3});
  const Partitioning part = partition_uniform(g, 5);
  CHECK(part.block_count() == 5);
  CHECK(part.block_range(0) == BlockRange{0, 1});
  CHECK(part.block_range(2) == BlockRange{2, 3});
  CHECK(part.block_range(3) == BlockRange{3, 3});
  CHECK(part.block_range(4) == BlockRange{3, 3});
  check_cover(g, part);
}

TEST_CASE("partition_uniform covers assorted (n, p) shapes") {
  for (std::size_t n : {0u, 1u, 2u, 7u, 64u, 101u}) {
    const Graph g = generate_synthetic({.kind = SyntheticKind::cycle, .size_a = n});
    for (std::uint32_t p : {1u, 2u, 3u, 5u, 8u, 150u}) check_cover(g, partition_uniform(g, p));
  }
}

TEST_CASE("boundary classification matches a brute-force edge scan") {
  const Graph g = gnp(1000, 0.01, 4);
  const Partitioning part = partition_uniform(g, 8);

  std::vector<std::pair<VertexId, VertexId>> ranges;
  for (std::uint32_t i = 0; i < part.block_count(); ++i)
    ranges.emplace_back(part.block_range(i).begin, part.block_range(i).end);
  const std::vector<bool> expected = oracles::boundary_scan(g, ranges);

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    CHECK(part.is_boundary(v) == expected[v]);
}

TEST_CASE("cross-block edges have both endpoints flagged boundary") {
  const Graph g = gnp(400, 0.02, 9);
  const Partitioning part = partition_uniform(g, 7);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId u : g.neighbors(v))
      if (part.block_of(u) != part.block_of(v)) {
        CHECK(part.is_boundary(v));
        CHECK(part.is_boundary(u));
      }
}

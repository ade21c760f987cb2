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

#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "parcolor/coloring.hpp"
#include "parcolor/graph.hpp"
#include "parcolor/partition.hpp"

namespace parcolor {

/// Optional instrumentation for the lock-based algorithms. Tests use it to
/// check that every color cell is written exactly once per run and that the
/// fine-grained variant never acquires vertex locks out of id order.
struct LockColorStats {
  explicit LockColorStats(std::size_t vertex_count) : writes(vertex_count) {}

  std::vector<std::atomic<std::uint32_t>> writes;
  std::atomic<std::uint64_t> lock_order_violations{0};
};

/// Single-pass parallel coloring with one worker per block. Internal
/// vertices are colored lock-free by their owning thread (their neighbors
/// are same-block by definition); boundary vertices are colored one at a
/// time under a single lock guarding the whole boundary set. Cross-block
/// neighbors are always boundary on both ends, so the global lock serializes
/// every pair of accesses that could otherwise race.
///
/// Throws std::invalid_argument if `part` was built for a different vertex
/// count than `g`.
Coloring coarse_color(const Graph& g, const Partitioning& part,
                      LockColorStats* stats = nullptr);

/// Like coarse_color, but each vertex has its own lock. To color a boundary
/// vertex v, the worker locks v together with all of v's neighbors in
/// increasing id order, picks the first free color, then releases the whole
/// set. The global acquisition order rules out deadlock; overlapping
/// neighborhoods serialize on their shared locks while disjoint ones proceed
/// concurrently.
Coloring fine_color(const Graph& g, const Partitioning& part,
                    LockColorStats* stats = nullptr);

}  // namespace parcolor

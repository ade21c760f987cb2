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

#include <cstdint>
#include <vector>

#include "parcolor/graph.hpp"

namespace parcolor {

/// Contiguous id interval [begin, end) owned by one block.
struct BlockRange {
  VertexId begin = 0;
  VertexId end = 0;

  bool operator==(const BlockRange&) const = default;
};

/// Assignment of vertices to p contiguous, id-ordered blocks, with each
/// vertex classified as internal (all neighbors in its own block) or
/// boundary (at least one neighbor elsewhere). Immutable after
/// construction; safe for concurrent reads.
class Partitioning {
 public:
  Partitioning(std::vector<BlockRange> ranges, std::vector<std::uint32_t> block_of,
               std::vector<std::uint8_t> boundary)
      : ranges_(std::move(ranges)),
        block_of_(std::move(block_of)),
        boundary_(std::move(boundary)) {}

  std::uint32_t block_count() const noexcept {
    return static_cast<std::uint32_t>(ranges_.size());
  }
  std::size_t vertex_count() const noexcept { return block_of_.size(); }

  BlockRange block_range(std::uint32_t block) const { return ranges_[block]; }
  std::uint32_t block_of(VertexId v) const { return block_of_[v]; }
  bool is_boundary(VertexId v) const { return boundary_[v] != 0; }

 private:
  std::vector<BlockRange> ranges_;
  std::vector<std::uint32_t> block_of_;
  std::vector<std::uint8_t> boundary_;
};

/// Splits [0, n) into p contiguous blocks of floor(n/p) ids each, with the
/// last block absorbing the remainder. When p > n the first n blocks get one
/// vertex apiece and the rest stay empty. Throws std::invalid_argument for
/// p = 0.
Partitioning partition_uniform(const Graph& g, std::uint32_t p);

}  // namespace parcolor

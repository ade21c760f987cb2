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

#include "parcolor/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace parcolor {

Partitioning partition_uniform(const Graph& g, std::uint32_t p) {
  if (p == 0) throw std::invalid_argument("block count must be positive");

  const std::size_t n = g.vertex_count();
  std::vector<BlockRange> ranges(p);
  if (p <= n) {
    const std::size_t base = n / p;
    for (std::uint32_t i = 0; i < p; ++i) {
      ranges[i].begin = static_cast<VertexId>(i * base);
      ranges[i].end = static_cast<VertexId>(i + 1 == p ? n : (i + 1) * base);
    }
  } else {
    for (std::uint32_t i = 0; i < p; ++i) {
      ranges[i].begin = static_cast<VertexId>(std::min<std::size_t>(i, n));
      ranges[i].end = static_cast<VertexId>(std::min<std::size_t>(i + 1, n));
    }
  }

  std::vector<std::uint32_t> block_of(n);
  for (std::uint32_t i = 0; i < p; ++i)
    for (VertexId v = ranges[i].begin; v != ranges[i].end; ++v) block_of[v] = i;

  std::vector<std::uint8_t> boundary(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(v)) {
      if (block_of[u] != block_of[v]) {
        boundary[v] = 1;
        break;
      }
    }
  }
  return Partitioning(std::move(ranges), std::move(block_of), std::move(boundary));
}

}  // namespace parcolor

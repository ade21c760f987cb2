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

#include <cassert>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "parcolor/graph.hpp"

namespace parcolor {

using Color = std::int32_t;

/// Sentinel for "not yet colored". Distinct from every palette color so the
/// algorithms can tell an uncolored vertex from one holding color 0.
inline constexpr Color kUnsetColor = -1;

/// Per-vertex color assignment over the palette {0, ..., palette_size - 1},
/// where palette_size = max_degree + 1 for the target graph.
struct Coloring {
  std::vector<Color> colors;
  Color palette_size = 0;

  bool complete() const noexcept {
    for (Color c : colors)
      if (c == kUnsetColor) return false;
    return true;
  }

  bool operator==(const Coloring&) const = default;
};

/// Membership structure over the palette {0, ..., max_color}. clear() is
/// O(1): entries are stamped with an epoch instead of being erased, so one
/// instance can be reused across many vertices.
class ForbiddenColors {
 public:
  explicit ForbiddenColors(Color max_color)
      : stamps_(static_cast<std::size_t>(max_color) + 1, 0), epoch_(1) {
    assert(max_color >= 0);
  }

  Color max_color() const noexcept { return static_cast<Color>(stamps_.size()) - 1; }

  void clear() noexcept { ++epoch_; }

  /// kUnsetColor is ignored; any real color must lie in the palette.
  void insert(Color c) {
    if (c == kUnsetColor) return;
    assert(c >= 0 && c < static_cast<Color>(stamps_.size()));
    stamps_[static_cast<std::size_t>(c)] = epoch_;
  }

  bool contains(Color c) const noexcept {
    return c >= 0 && c < static_cast<Color>(stamps_.size()) &&
           stamps_[static_cast<std::size_t>(c)] == epoch_;
  }

 private:
  std::vector<std::uint64_t> stamps_;
  std::uint64_t epoch_;
};

/// Smallest palette color not in `forbidden`. A vertex has at most
/// max_color neighbors, so a free color always exists; if every palette
/// color is forbidden the caller broke that contract and this throws
/// std::logic_error.
Color first_fit(const ForbiddenColors& forbidden);

/// Greedy baseline: visits vertices in increasing id order and gives each
/// the first color not used by an already-colored neighbor. Deterministic;
/// uses at most max_degree + 1 colors.
Coloring sequential_color(const Graph& g);

/// Monochromatic edge, normalized to u < v.
struct ConflictEdge {
  VertexId u = 0;
  VertexId v = 0;

  auto operator<=>(const ConflictEdge&) const = default;
};

struct ConflictReport {
  std::vector<ConflictEdge> conflicts;

  bool proper() const noexcept { return conflicts.empty(); }
};

/// Thrown when a verifier or exporter meets an unset vertex color.
class IncompleteColoringError : public std::runtime_error {
 public:
  explicit IncompleteColoringError(VertexId vertex)
      : std::runtime_error("vertex " + std::to_string(vertex) + " has no color"),
        vertex_(vertex) {}

  VertexId vertex() const noexcept { return vertex_; }

 private:
  VertexId vertex_;
};

/// Scans every edge and reports each monochromatic one exactly once. An
/// empty report means the coloring is proper. Throws
/// IncompleteColoringError if any vertex is unset.
ConflictReport verify_coloring(const Graph& g, const Coloring& c);

/// Number of distinct colors assigned. 0 for an empty graph.
std::size_t count_colors(const Coloring& c);

/// Writes "vertex_id color" lines, one per vertex, using original
/// (pre-remap) ids and sorted by that id.
void write_coloring(const Graph& g, const Coloring& c, std::ostream& out);

}  // namespace parcolor

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
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parcolor {

using VertexId = std::uint32_t;

/// Thrown by parse_edge_list on malformed input. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable simple undirected graph over dense vertex ids [0, n).
///
/// Adjacency lives in a compressed sparse row layout (offset array plus a
/// flat neighbor array). Per-vertex neighbor lists are strictly increasing,
/// symmetric, and free of self loops. The structure never changes after
/// construction, so any number of threads may read it concurrently.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from undirected edge pairs over ids in [0, vertex_count).
  /// Self loops are dropped and duplicate edges (either orientation)
  /// collapse to one. `original_ids`, when non-empty, maps each dense id
  /// back to the id it carried in the input file.
  static Graph from_edge_pairs(std::size_t vertex_count,
                               std::vector<std::pair<VertexId, VertexId>> edges,
                               std::vector<std::uint64_t> original_ids = {});

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  /// Position of v's neighbor list inside the flat neighbor array.
  /// Valid for v in [0, n]; adjacency_offset(n) is the total arc count.
  std::size_t adjacency_offset(VertexId v) const { return offsets_[v]; }

  /// The id this vertex carried in the source file (identity for graphs
  /// built without a remap table, e.g. synthetic ones).
  std::uint64_t original_id(VertexId v) const {
    return original_ids_.empty() ? v : original_ids_[v];
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::uint64_t> offsets_;      // size n+1
  std::vector<VertexId> neighbors_;         // size 2 * edge_count
  std::vector<std::uint64_t> original_ids_; // empty => identity mapping
  std::size_t edge_count_ = 0;
};

/// Reads whitespace-separated "u v" pairs, one edge per line. Lines whose
/// first non-blank character is '#' are comments. Raw ids are remapped to a
/// dense [0, n) range in order of first appearance; duplicate edges and self
/// loops are dropped. Throws ParseError on a malformed token.
Graph parse_edge_list(std::istream& in);

/// Writes the graph back out in the edge-list format, one "u v" line per
/// edge with u < v, using dense internal ids.
std::string serialize_edge_list(const Graph& g);

/// Maximum degree; 0 for empty or edgeless graphs.
std::size_t max_degree(const Graph& g) noexcept;

enum class SyntheticKind { path, cycle, complete, bipartite, gnp };

/// Description of a generated test graph. Parsed from strings of the form
/// "kind:params[:seed]", e.g. "path:1000", "bipartite:200,200",
/// "gnp:2000,0.01:5".
struct SyntheticSpec {
  SyntheticKind kind = SyntheticKind::path;
  std::uint64_t size_a = 0;
  std::uint64_t size_b = 0;   // second part size, bipartite only
  double probability = 0.0;   // gnp only
  std::uint64_t seed = 0;     // gnp only

  static SyntheticSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const SyntheticSpec&) const = default;
};

/// Deterministic for a fixed spec. Throws std::invalid_argument if the gnp
/// probability is outside [0, 1].
Graph generate_synthetic(const SyntheticSpec& spec);

}  // namespace parcolor

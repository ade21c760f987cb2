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
#include <utility>
#include <vector>

#include "parcolor/coloring.hpp"
#include "parcolor/graph.hpp"
#include "parcolor/partition.hpp"

namespace parcolor {

/// Per-run statistics of the barrier-synchronized algorithm.
///
/// `rounds` counts every pass through the round loop, including the final
/// pass in which all work sets are already empty and the threads merely
/// agree to stop. For p blocks it never exceeds p + 1.
struct RoundStats {
  std::uint32_t rounds = 0;

  /// Sum of |R_i| over all threads, one entry per round. The last entry is
  /// always 0.
  std::vector<std::uint64_t> recolors_per_round;

  /// Per vertex: how many times it was colored again after its first
  /// coloring. A vertex in 0-based block i is recolored at most p - 1 - i
  /// times.
  std::vector<std::uint32_t> recolor_count;
};

/// One thread's view of one round.
struct ThreadRoundRecord {
  std::vector<VertexId> work_set;     // U_i when the round began
  std::vector<VertexId> recolor_set;  // R_i when the round ended
};

struct RoundSnapshot {
  std::vector<ThreadRoundRecord> threads;
  std::vector<Color> colors;  // colors after this round's tentative phase
};

/// Full per-round execution record, for tests and debugging.
struct RoundTrace {
  std::vector<RoundSnapshot> rounds;

  /// Incremented whenever a thread is observed inside the tentative phase
  /// while another is still in the detection phase (or vice versa). Stays 0
  /// as long as the barriers separate the phases.
  std::uint64_t phase_overlaps = 0;
};

/// Colors the graph with one worker thread per partition block. Each round
/// runs a tentative first-fit pass over the thread's work set, a full
/// barrier, a cross-block conflict-detection pass, and a second barrier that
/// doubles as the vote on whether any work set is still nonempty. When two
/// cross-block neighbors end up with the same color, the endpoint in the
/// lower-indexed block re-enters its owner's work set for the next round.
///
/// The result is a proper coloring using at most max_degree + 1 colors.
/// Throws std::invalid_argument if `part` was built for a different vertex
/// count than `g`.
std::pair<Coloring, RoundStats> barrier_color(const Graph& g, const Partitioning& part);

/// Same execution as barrier_color, but records every round's work sets,
/// recolor sets, and colors.
RoundTrace round_trace(const Graph& g, const Partitioning& part);

/// Renders a trace as "round=<r> thread=<i> U=<size> R=<size>" lines.
std::string format_trace(const RoundTrace& trace);

}  // namespace parcolor

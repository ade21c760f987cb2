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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parcolor/barrier_coloring.hpp"
#include "parcolor/coloring.hpp"
#include "parcolor/graph.hpp"

namespace parcolor {

enum class Algorithm { sequential, barrier, coarse, fine };

std::string_view to_string(Algorithm a);

/// Accepts "seq", "barrier", "coarse", "fine"; throws std::invalid_argument
/// otherwise.
Algorithm algorithm_from_string(std::string_view text);

enum class OutputFormat { csv, json };

struct BenchConfig {
  std::string input_path;                // edge-list file, or
  std::optional<SyntheticSpec> synthetic; // generated graph (exactly one of the two)
  Algorithm algo = Algorithm::sequential;
  std::vector<unsigned> thread_counts = {1};
  unsigned repetitions = 10;
  bool verify = false;
  std::string out_path;                  // empty means stdout
  OutputFormat format = OutputFormat::csv;
};

/// One (algorithm, thread count) measurement. The timed window of each
/// repetition covers partitioning, boundary classification, and coloring;
/// graph loading and verification stay outside it. The sequential baseline
/// needs no partitioning, so its window is the coloring alone.
struct BenchResult {
  Algorithm algo = Algorithm::sequential;
  unsigned p = 1;
  double mean_time_s = 0.0;                 // arithmetic mean of rep_times_s
  std::vector<double> rep_times_s;
  std::vector<std::uint32_t> colors_used;   // per repetition
  std::vector<std::uint32_t> rounds;        // per repetition, barrier only
  std::optional<double> speedup;            // seq mean / this mean, parallel only

  bool operator==(const BenchResult&) const = default;
};

/// Monotonic clock, injectable so tests can pin the measured window down
/// exactly.
class Timer {
 public:
  virtual ~Timer() = default;
  virtual double now_seconds() const = 0;
};

class SteadyTimer final : public Timer {
 public:
  double now_seconds() const override;
};

/// Test hooks fired at the phase boundaries of a benchmark run. Any handler
/// may be empty.
struct BenchProbe {
  std::function<void()> on_loaded;
  std::function<void()> on_timer_start;
  std::function<void()> on_partition_done;
  std::function<void()> on_color_done;
  std::function<void()> on_timer_stop;
  std::function<void()> on_verify_done;
};

/// Raised when a verified benchmark run produced a conflicting coloring.
/// This is an algorithm bug, never an expected outcome.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& message, ConflictReport report)
      : std::runtime_error(message), report_(std::move(report)) {}

  const ConflictReport& report() const noexcept { return report_; }

 private:
  ConflictReport report_;
};

/// Loads or generates the configured graph (untimed), then measures every
/// requested thread count back to back, `repetitions` runs each. For a
/// parallel algorithm the sequential baseline is measured first in the same
/// process on the same graph and feeds each result's speedup field; only the
/// parallel results are returned. With cfg.verify set, every run's coloring
/// is checked after its timer stops; a conflict raises VerificationError.
std::vector<BenchResult> run_benchmark(const BenchConfig& cfg, const Timer& timer,
                                       const BenchProbe* probe = nullptr);
std::vector<BenchResult> run_benchmark(const BenchConfig& cfg);

/// Convenience used by the CLI: partitions (for the parallel algorithms) and
/// colors the graph once, untimed.
struct AlgoRun {
  Coloring coloring;
  std::optional<RoundStats> stats;  // barrier only
};
AlgoRun color_with(Algorithm algo, const Graph& g, unsigned p);

/// Accepts "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat output_format_from_string(std::string_view text);

/// Serializes results. CSV columns are
/// algorithm,p,mean_time_s,colors,rounds,speedup with colors and rounds
/// reduced to their per-repetition maxima and blank cells where a field does
/// not apply. JSON keeps the full per-repetition data and round-trips
/// exactly through results_from_json. Throws std::invalid_argument when
/// `results` is empty.
std::string emit_results(const std::vector<BenchResult>& results, OutputFormat format);

std::vector<BenchResult> results_from_json(const std::string& text);

/// Distinct (package, core) pairs from /sys, falling back to the logical
/// processor count. Never returns 0.
unsigned physical_core_count();

}  // namespace parcolor

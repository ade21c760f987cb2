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

#include "parcolor/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "parcolor/lock_coloring.hpp"
#include "parcolor/partition.hpp"

namespace parcolor {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::sequential: return "seq";
    case Algorithm::barrier: return "barrier";
    case Algorithm::coarse: return "coarse";
    case Algorithm::fine: return "fine";
  }
  return "?";
}

Algorithm algorithm_from_string(std::string_view text) {
  if (text == "seq") return Algorithm::sequential;
  if (text == "barrier") return Algorithm::barrier;
  if (text == "coarse") return Algorithm::coarse;
  if (text == "fine") return Algorithm::fine;
  throw std::invalid_argument("unknown algorithm: " + std::string(text));
}

double SteadyTimer::now_seconds() const {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

OutputFormat output_format_from_string(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format: " + std::string(text));
}

namespace {

void fire(const std::function<void()>& hook) {
  if (hook) hook();
}

Graph load_input(const BenchConfig& cfg) {
  if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw std::runtime_error("cannot open input file: " + cfg.input_path);
    return parse_edge_list(in);
  }
  if (cfg.synthetic) return generate_synthetic(*cfg.synthetic);
  throw std::invalid_argument("benchmark needs an input file or a synthetic spec");
}

struct RepOutcome {
  double seconds = 0.0;
  Coloring coloring;
  std::optional<RoundStats> stats;
};

// The measured window covers partitioning plus coloring and nothing else.
// The sequential baseline needs no partitioning, so only the coloring is
// inside its window.
RepOutcome run_once(const Graph& g, Algorithm algo, unsigned p, const Timer& timer,
                    const BenchProbe* probe) {
  RepOutcome out;
  const double start = timer.now_seconds();
  if (probe) fire(probe->on_timer_start);

  if (algo == Algorithm::sequential) {
    out.coloring = sequential_color(g);
  } else {
    const Partitioning part = partition_uniform(g, p);
    if (probe) fire(probe->on_partition_done);
    switch (algo) {
      case Algorithm::barrier: {
        auto [coloring, stats] = barrier_color(g, part);
        out.coloring = std::move(coloring);
        out.stats = std::move(stats);
        break;
      }
      case Algorithm::coarse:
        out.coloring = coarse_color(g, part);
        break;
      case Algorithm::fine:
        out.coloring = fine_color(g, part);
        break;
      case Algorithm::sequential:
        break;  // unreachable
    }
  }

  if (probe) fire(probe->on_color_done);
  out.seconds = timer.now_seconds() - start;
  if (probe) fire(probe->on_timer_stop);
  return out;
}

double mean_of(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace

AlgoRun color_with(Algorithm algo, const Graph& g, unsigned p) {
  if (algo == Algorithm::sequential) return {sequential_color(g), std::nullopt};
  const Partitioning part = partition_uniform(g, p);
  switch (algo) {
    case Algorithm::barrier: {
      auto [coloring, stats] = barrier_color(g, part);
      return {std::move(coloring), std::move(stats)};
    }
    case Algorithm::coarse:
      return {coarse_color(g, part), std::nullopt};
    case Algorithm::fine:
      return {fine_color(g, part), std::nullopt};
    default:
      return {sequential_color(g), std::nullopt};
  }
}

std::vector<BenchResult> run_benchmark(const BenchConfig& cfg, const Timer& timer,
                                       const BenchProbe* probe) {
  if (cfg.thread_counts.empty())
    throw std::invalid_argument("thread count list must be nonempty");
  for (unsigned p : cfg.thread_counts)
    if (p == 0) throw std::invalid_argument("thread counts must be positive");
  if (cfg.repetitions == 0) throw std::invalid_argument("repetitions must be positive");

  const Graph g = load_input(cfg);
  if (probe) fire(probe->on_loaded);

  auto measure = [&](Algorithm algo, unsigned p) {
    BenchResult result;
    result.algo = algo;
    result.p = p;
    for (unsigned rep = 0; rep < cfg.repetitions; ++rep) {
      RepOutcome out = run_once(g, algo, p, timer, probe);
      result.rep_times_s.push_back(out.seconds);
      result.colors_used.push_back(static_cast<std::uint32_t>(count_colors(out.coloring)));
      if (out.stats) result.rounds.push_back(out.stats->rounds);
      if (cfg.verify) {
        ConflictReport report = verify_coloring(g, out.coloring);
        if (probe) fire(probe->on_verify_done);
        if (!report.proper()) {
          std::ostringstream msg;
          msg << "improper coloring: algo=" << to_string(algo) << " p=" << p
              << " rep=" << rep << " conflicts=" << report.conflicts.size();
          throw VerificationError(msg.str(), std::move(report));
        }
      }
    }
    result.mean_time_s = mean_of(result.rep_times_s);
    return result;
  };

  std::vector<BenchResult> results;
  if (cfg.algo == Algorithm::sequential) {
    results.push_back(measure(Algorithm::sequential, 1));
    return results;
  }

  // Baseline measured on the same loaded graph in the same process, so the
  // speedup ratio is free of load time and machine drift.
  const BenchResult baseline = measure(Algorithm::sequential, 1);
  for (unsigned p : cfg.thread_counts) {
    BenchResult r = measure(cfg.algo, p);
    r.speedup = baseline.mean_time_s / r.mean_time_s;
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<BenchResult> run_benchmark(const BenchConfig& cfg) {
  static const SteadyTimer timer;
  return run_benchmark(cfg, timer, nullptr);
}

namespace {

std::string emit_csv(const std::vector<BenchResult>& results) {
  std::ostringstream out;
  out << "algorithm,p,mean_time_s,colors,rounds,speedup\n";
  for (const auto& r : results) {
    out << to_string(r.algo) << ',' << r.p << ',' << std::fixed
        << std::setprecision(9) << r.mean_time_s << ',';
    if (!r.colors_used.empty())
      out << *std::max_element(r.colors_used.begin(), r.colors_used.end());
    out << ',';
    if (!r.rounds.empty())
      out << *std::max_element(r.rounds.begin(), r.rounds.end());
    out << ',';
    if (r.speedup) out << std::setprecision(6) << *r.speedup;
    out << '\n';
  }
  return out.str();
}

std::string emit_json(const std::vector<BenchResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json row{{"algorithm", to_string(r.algo)},
                       {"p", r.p},
                       {"mean_time_s", r.mean_time_s},
                       {"rep_times_s", r.rep_times_s},
                       {"colors", r.colors_used}};
    if (!r.rounds.empty()) row["rounds"] = r.rounds;
    if (r.speedup) row["speedup"] = *r.speedup;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

}  // namespace

std::string emit_results(const std::vector<BenchResult>& results, OutputFormat format) {
  if (results.empty()) throw std::invalid_argument("no results to emit");
  switch (format) {
    case OutputFormat::csv: return emit_csv(results);
    case OutputFormat::json: return emit_json(results);
  }
  throw std::invalid_argument("unknown output format");
}

std::vector<BenchResult> results_from_json(const std::string& text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<BenchResult> results;
  for (const auto& row : arr) {
    BenchResult r;
    r.algo = algorithm_from_string(row.at("algorithm").get<std::string>());
    r.p = row.at("p").get<unsigned>();
    r.mean_time_s = row.at("mean_time_s").get<double>();
    r.rep_times_s = row.at("rep_times_s").get<std::vector<double>>();
    r.colors_used = row.at("colors").get<std::vector<std::uint32_t>>();
    if (row.contains("rounds"))
      r.rounds = row.at("rounds").get<std::vector<std::uint32_t>>();
    if (row.contains("speedup")) r.speedup = row.at("speedup").get<double>();
    results.push_back(std::move(r));
  }
  return results;
}

unsigned physical_core_count() {
  std::set<std::pair<long, long>> cores;
  for (unsigned cpu = 0; cpu < 4096; ++cpu) {
    const std::string dir =
        "/sys/devices/system/cpu/cpu" + std::to_string(cpu) + "/topology/";
    std::ifstream pkg(dir + "physical_package_id");
    std::ifstream core(dir + "core_id");
    if (!pkg || !core) break;
    long pkg_id = -1, core_id = -1;
    pkg >> pkg_id;
    core >> core_id;
    cores.emplace(pkg_id, core_id);
  }
  if (!cores.empty()) return static_cast<unsigned>(cores.size());
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace parcolor

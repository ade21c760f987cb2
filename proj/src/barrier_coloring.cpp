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

#include "parcolor/barrier_coloring.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "parcolor/sync.hpp"

namespace parcolor {
namespace {

// Thread-local slice of the execution record; merged after the workers join
// so tracing adds no cross-thread traffic.
struct LocalTrace {
  std::vector<ThreadRoundRecord> rounds;
  std::vector<std::vector<Color>> colors_after;  // filled by thread 0 only
};

struct Engine {
  const Graph& graph;
  const Partitioning& part;
  Color max_color;
  std::vector<Color>& colors;
  CyclicBarrier barrier;
  std::vector<std::uint32_t>& recolor_count;
  std::vector<std::vector<std::uint64_t>>& recolor_sizes;  // [thread][round]
  bool tracing;

  // Phase-overlap detectors, active while tracing. Both counts return to
  // zero before the barrier separating the phases, so a nonzero reading on
  // entry means a barrier failed to hold the phases apart.
  std::atomic<int> in_tentative{0};
  std::atomic<int> in_detection{0};
  std::atomic<std::uint64_t> overlaps{0};
};

void color_worker(Engine& e, std::uint32_t ti, LocalTrace* lt) {
  const BlockRange range = e.part.block_range(ti);
  const std::size_t base = e.graph.adjacency_offset(range.begin);

  // Latest color seen for each cross-block neighbor, one slot per adjacency
  // position of the owned block. Slots for same-block neighbors stay unused:
  // those colors are this thread's own writes and are read live.
  std::vector<Color> cross_color(e.graph.adjacency_offset(range.end) - base,
                                 kUnsetColor);
  ForbiddenColors forbidden(e.max_color);

  std::vector<VertexId> work, next;
  work.reserve(range.end - range.begin);
  for (VertexId v = range.begin; v != range.end; ++v) work.push_back(v);

  for (;;) {
    // Doubles as the end-of-round barrier: nobody starts a new round while
    // another thread is still detecting conflicts in the previous one.
    const bool again = e.barrier.arrive_and_vote(!work.empty());
    if (lt) lt->rounds.push_back({work, {}});
    if (!again) break;

    if (e.tracing) {
      if (e.in_detection.load(std::memory_order_relaxed) != 0)
        e.overlaps.fetch_add(1, std::memory_order_relaxed);
      e.in_tentative.fetch_add(1, std::memory_order_relaxed);
    }

    // Tentative phase: first-fit over the colors known for each neighbor.
    for (VertexId v : work) {
      forbidden.clear();
      const auto nbrs = e.graph.neighbors(v);
      const std::size_t voff = e.graph.adjacency_offset(v) - base;
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const VertexId u = nbrs[k];
        forbidden.insert(e.part.block_of(u) == ti ? e.colors[u]
                                                  : cross_color[voff + k]);
      }
      e.colors[v] = first_fit(forbidden);
    }

    if (e.tracing) e.in_tentative.fetch_sub(1, std::memory_order_relaxed);
    e.barrier.arrive_and_wait();
    if (e.tracing) {
      if (e.in_tentative.load(std::memory_order_relaxed) != 0)
        e.overlaps.fetch_add(1, std::memory_order_relaxed);
      e.in_detection.fetch_add(1, std::memory_order_relaxed);
    }
    // Colors are stable between the two barriers; the detection phase only
    // reads them, so thread 0 can snapshot while the others scan.
    if (lt && ti == 0) lt->colors_after.push_back(e.colors);

    // Detection phase: refresh cross-block color knowledge and re-enqueue
    // any owned vertex that collides with a neighbor in a higher block. The
    // lower-block endpoint of a conflict always yields, so the highest block
    // never recolors and the rounds drain block by block.
    next.clear();
    for (VertexId v : work) {
      if (!e.part.is_boundary(v)) continue;
      const Color own = e.colors[v];
      const auto nbrs = e.graph.neighbors(v);
      const std::size_t voff = e.graph.adjacency_offset(v) - base;
      bool conflicted = false;
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const VertexId u = nbrs[k];
        const std::uint32_t bu = e.part.block_of(u);
        if (bu == ti) continue;
        const Color cu = e.colors[u];
        cross_color[voff + k] = cu;
        if (cu == own && bu > ti) conflicted = true;
      }
      if (conflicted) {
        next.push_back(v);
        ++e.recolor_count[v];
      }
    }

    e.recolor_sizes[ti].push_back(next.size());
    if (lt) lt->rounds.back().recolor_set = next;
    if (e.tracing) e.in_detection.fetch_sub(1, std::memory_order_relaxed);
    work.swap(next);
  }
}

std::pair<Coloring, RoundStats> run(const Graph& g, const Partitioning& part,
                                    RoundTrace* trace) {
  if (part.vertex_count() != g.vertex_count())
    throw std::invalid_argument("partitioning was built for a different graph");

  const std::uint32_t p = part.block_count();
  const std::size_t n = g.vertex_count();
  const auto m = static_cast<Color>(max_degree(g));

  Coloring coloring{std::vector<Color>(n, kUnsetColor), m + 1};
  RoundStats stats;
  stats.recolor_count.assign(n, 0);

  std::vector<std::vector<std::uint64_t>> recolor_sizes(p);
  Engine engine{g,
                part,
                m,
                coloring.colors,
                CyclicBarrier(p),
                stats.recolor_count,
                recolor_sizes,
                trace != nullptr};

  std::vector<LocalTrace> locals(trace ? p : 0);
  std::vector<std::thread> workers;
  workers.reserve(p);
  for (std::uint32_t ti = 0; ti < p; ++ti)
    workers.emplace_back(color_worker, std::ref(engine), ti,
                         trace ? &locals[ti] : nullptr);
  for (auto& w : workers) w.join();

  const std::size_t full_rounds = recolor_sizes[0].size();
  stats.rounds = static_cast<std::uint32_t>(full_rounds + 1);
  stats.recolors_per_round.assign(full_rounds + 1, 0);
  for (std::size_t r = 0; r < full_rounds; ++r)
    for (std::uint32_t ti = 0; ti < p; ++ti)
      stats.recolors_per_round[r] += recolor_sizes[ti][r];

  if (trace) {
    trace->rounds.resize(stats.rounds);
    for (std::size_t r = 0; r < stats.rounds; ++r) {
      auto& snap = trace->rounds[r];
      snap.threads.resize(p);
      for (std::uint32_t ti = 0; ti < p; ++ti)
        snap.threads[ti] = std::move(locals[ti].rounds[r]);
      snap.colors = r < full_rounds ? std::move(locals[0].colors_after[r])
                                    : coloring.colors;
    }
    trace->phase_overlaps = engine.overlaps.load();
  }
  return {std::move(coloring), std::move(stats)};
}

}  // namespace

std::pair<Coloring, RoundStats> barrier_color(const Graph& g, const Partitioning& part) {
  return run(g, part, nullptr);
}

RoundTrace round_trace(const Graph& g, const Partitioning& part) {
  RoundTrace trace;
  run(g, part, &trace);
  return trace;
}

std::string format_trace(const RoundTrace& trace) {
  std::ostringstream out;
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    const auto& snap = trace.rounds[r];
    for (std::size_t ti = 0; ti < snap.threads.size(); ++ti)
      out << "round=" << r + 1 << " thread=" << ti
          << " U=" << snap.threads[ti].work_set.size()
          << " R=" << snap.threads[ti].recolor_set.size() << '\n';
  }
  return out.str();
}

}  // namespace parcolor

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

#include "parcolor/lock_coloring.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace parcolor {
namespace {

void check_match(const Graph& g, const Partitioning& part) {
  if (part.vertex_count() != g.vertex_count())
    throw std::invalid_argument("partitioning was built for a different graph");
}

struct Shared {
  const Graph& graph;
  const Partitioning& part;
  std::vector<Color>& colors;
  LockColorStats* stats;
};

// First fit over whatever neighbor colors are committed right now. An unset
// neighbor contributes nothing; it will see this vertex's color before
// choosing its own.
Color pick_color(const Shared& s, ForbiddenColors& forbidden, VertexId v) {
  forbidden.clear();
  for (VertexId u : s.graph.neighbors(v)) forbidden.insert(s.colors[u]);
  return first_fit(forbidden);
}

void assign(const Shared& s, ForbiddenColors& forbidden, VertexId v) {
  s.colors[v] = pick_color(s, forbidden, v);
  if (s.stats) s.stats->writes[v].fetch_add(1, std::memory_order_relaxed);
}

template <typename ColorBoundary>
void run_workers(const Shared& s, Color max_color, ColorBoundary&& color_boundary) {
  const std::uint32_t p = s.part.block_count();
  std::vector<std::thread> workers;
  workers.reserve(p);
  for (std::uint32_t ti = 0; ti < p; ++ti) {
    workers.emplace_back([&, ti] {
      const BlockRange range = s.part.block_range(ti);
      ForbiddenColors forbidden(max_color);
      // Internal vertices first, ascending; all their neighbors are owned by
      // this thread, so no lock is needed.
      for (VertexId v = range.begin; v != range.end; ++v)
        if (!s.part.is_boundary(v)) assign(s, forbidden, v);
      for (VertexId v = range.begin; v != range.end; ++v)
        if (s.part.is_boundary(v)) color_boundary(forbidden, v);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

Coloring coarse_color(const Graph& g, const Partitioning& part, LockColorStats* stats) {
  check_match(g, part);
  const auto m = static_cast<Color>(max_degree(g));
  Coloring coloring{std::vector<Color>(g.vertex_count(), kUnsetColor), m + 1};
  Shared shared{g, part, coloring.colors, stats};

  std::mutex boundary_lock;  // one lock over the whole boundary set
  run_workers(shared, m, [&](ForbiddenColors& forbidden, VertexId v) {
    std::lock_guard<std::mutex> guard(boundary_lock);
    assign(shared, forbidden, v);
  });
  return coloring;
}

Coloring fine_color(const Graph& g, const Partitioning& part, LockColorStats* stats) {
  check_match(g, part);
  const auto m = static_cast<Color>(max_degree(g));
  Coloring coloring{std::vector<Color>(g.vertex_count(), kUnsetColor), m + 1};
  Shared shared{g, part, coloring.colors, stats};

  std::vector<std::mutex> vertex_locks(g.vertex_count());

  run_workers(shared, m, [&](ForbiddenColors& forbidden, VertexId v) {
    // Lock v and all its neighbors in increasing id order. The neighbor list
    // is already sorted; v slots into its place.
    const auto nbrs = g.neighbors(v);
    std::int64_t last = -1;
    auto acquire = [&](VertexId id) {
      vertex_locks[id].lock();
      if (stats && static_cast<std::int64_t>(id) <= last)
        stats->lock_order_violations.fetch_add(1, std::memory_order_relaxed);
      last = id;
    };

    bool self_locked = false;
    for (VertexId u : nbrs) {
      if (!self_locked && v < u) {
        acquire(v);
        self_locked = true;
      }
      acquire(u);
    }
    if (!self_locked) acquire(v);

    assign(shared, forbidden, v);

    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) vertex_locks[*it].unlock();
    vertex_locks[v].unlock();
  });
  return coloring;
}

}  // namespace parcolor

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

#include "parcolor/coloring.hpp"

#include <algorithm>
#include <ostream>

namespace parcolor {

Color first_fit(const ForbiddenColors& forbidden) {
  for (Color c = 0; c <= forbidden.max_color(); ++c)
    if (!forbidden.contains(c)) return c;
  throw std::logic_error("first_fit: every palette color is forbidden");
}

Coloring sequential_color(const Graph& g) {
  const auto m = static_cast<Color>(max_degree(g));
  Coloring result{std::vector<Color>(g.vertex_count(), kUnsetColor), m + 1};

  ForbiddenColors forbidden(m);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    forbidden.clear();
    for (VertexId u : g.neighbors(v)) forbidden.insert(result.colors[u]);
    result.colors[v] = first_fit(forbidden);
  }
  return result;
}

ConflictReport verify_coloring(const Graph& g, const Coloring& c) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (c.colors[v] == kUnsetColor) throw IncompleteColoringError(v);

  ConflictReport report;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId u : g.neighbors(v))
      if (u > v && c.colors[u] == c.colors[v]) report.conflicts.push_back({v, u});
  return report;
}

std::size_t count_colors(const Coloring& c) {
  Color top = kUnsetColor;
  for (Color color : c.colors) top = std::max(top, color);
  if (top == kUnsetColor) return 0;

  std::vector<std::uint8_t> seen(static_cast<std::size_t>(top) + 1, 0);
  for (Color color : c.colors)
    if (color != kUnsetColor) seen[static_cast<std::size_t>(color)] = 1;
  std::size_t distinct = 0;
  for (std::uint8_t s : seen) distinct += s;
  return distinct;
}

void write_coloring(const Graph& g, const Coloring& c, std::ostream& out) {
  std::vector<std::pair<std::uint64_t, Color>> rows;
  rows.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    rows.emplace_back(g.original_id(v), c.colors[v]);
  std::sort(rows.begin(), rows.end());
  for (const auto& [id, color] : rows) out << id << ' ' << color << '\n';
}

}  // namespace parcolor

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

#include "parcolor/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace parcolor {

Graph Graph::from_edge_pairs(std::size_t vertex_count,
                             std::vector<std::pair<VertexId, VertexId>> edges,
                             std::vector<std::uint64_t> original_ids) {
  for (auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.edge_count_ = edges.size();
  g.original_ids_ = std::move(original_ids);
  g.offsets_.assign(vertex_count + 1, 0);
  for (const auto& [a, b] : edges) {
    ++g.offsets_[a + 1];
    ++g.offsets_[b + 1];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.neighbors_.resize(2 * edges.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    g.neighbors_[cursor[a]++] = b;
    g.neighbors_[cursor[b]++] = a;
  }
  for (std::size_t v = 0; v < vertex_count; ++v)
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  return g;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::uint64_t> originals;
  std::unordered_map<std::uint64_t, VertexId> dense_id;

  auto intern = [&](std::uint64_t raw) {
    auto [it, fresh] = dense_id.try_emplace(raw, static_cast<VertexId>(originals.size()));
    if (fresh) originals.push_back(raw);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end && is_space(*p)) ++p;
    if (p == end || *p == '#') continue;

    std::uint64_t ids[2];
    int count = 0;
    while (p != end) {
      if (count == 2) throw ParseError("expected two vertex ids", line_no);
      std::uint64_t value = 0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc{} || (next != end && !is_space(*next)))
        throw ParseError("malformed vertex id", line_no);
      ids[count++] = value;
      p = next;
      while (p != end && is_space(*p)) ++p;
    }
    if (count != 2) throw ParseError("expected two vertex ids", line_no);

    const VertexId u = intern(ids[0]);
    const VertexId v = intern(ids[1]);
    if (u != v) edges.emplace_back(u, v);
  }
  const std::size_t n = originals.size();
  return Graph::from_edge_pairs(n, std::move(edges), std::move(originals));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# nodes " << g.vertex_count() << " edges " << g.edge_count() << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId u : g.neighbors(v))
      if (u > v) out << v << ' ' << u << '\n';
  return out.str();
}

std::size_t max_degree(const Graph& g) noexcept {
  std::size_t m = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) m = std::max(m, g.degree(v));
  return m;
}

namespace {

constexpr std::string_view kind_name(SyntheticKind k) {
  switch (k) {
    case SyntheticKind::path: return "path";
    case SyntheticKind::cycle: return "cycle";
    case SyntheticKind::complete: return "complete";
    case SyntheticKind::bipartite: return "bipartite";
    case SyntheticKind::gnp: return "gnp";
  }
  return "?";
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  auto [next, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || next != text.data() + text.size())
    throw std::invalid_argument(std::string("synthetic spec: bad ") + what);
  return value;
}

double parse_prob(std::string_view text) {
  double value = 0.0;
  auto [next, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || next != text.data() + text.size())
    throw std::invalid_argument("synthetic spec: bad probability");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// G(n, p) by geometric edge skipping: each candidate pair is included with
// probability p without enumerating all of them.
std::vector<std::pair<VertexId, VertexId>> sample_gnp(std::uint64_t n, double p,
                                                      std::uint64_t seed) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n < 2 || p <= 0.0) return edges;
  if (p >= 1.0) {
    for (VertexId v = 1; v < n; ++v)
      for (VertexId u = 0; u < v; ++u) edges.emplace_back(u, v);
    return edges;
  }

  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0, 1); engine output is fully specified, so the graph
  // is reproducible for a given seed.
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1p-53; };
  const double log_q = std::log1p(-p);

  std::uint64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double skip = std::floor(std::log1p(-unit()) / log_q);
    w += 1 + static_cast<std::int64_t>(skip);
    while (v < n && w >= static_cast<std::int64_t>(v)) {
      w -= static_cast<std::int64_t>(v);
      ++v;
    }
    if (v < n)
      edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
  }
  return edges;
}

}  // namespace

SyntheticSpec SyntheticSpec::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3)
    throw std::invalid_argument("synthetic spec: want kind:params[:seed]");

  SyntheticSpec spec;
  if (parts[0] == "path") spec.kind = SyntheticKind::path;
  else if (parts[0] == "cycle") spec.kind = SyntheticKind::cycle;
  else if (parts[0] == "complete") spec.kind = SyntheticKind::complete;
  else if (parts[0] == "bipartite") spec.kind = SyntheticKind::bipartite;
  else if (parts[0] == "gnp") spec.kind = SyntheticKind::gnp;
  else throw std::invalid_argument("synthetic spec: unknown kind");

  const auto params = split(parts[1], ',');
  switch (spec.kind) {
    case SyntheticKind::path:
    case SyntheticKind::cycle:
    case SyntheticKind::complete:
      if (params.size() != 1)
        throw std::invalid_argument("synthetic spec: want one size");
      spec.size_a = parse_u64(params[0], "size");
      break;
    case SyntheticKind::bipartite:
      if (params.size() != 2)
        throw std::invalid_argument("synthetic spec: want two sizes");
      spec.size_a = parse_u64(params[0], "size");
      spec.size_b = parse_u64(params[1], "size");
      break;
    case SyntheticKind::gnp:
      if (params.size() != 2)
        throw std::invalid_argument("synthetic spec: want size,probability");
      spec.size_a = parse_u64(params[0], "size");
      spec.probability = parse_prob(params[1]);
      break;
  }
  if (parts.size() == 3) spec.seed = parse_u64(parts[2], "seed");
  return spec;
}

std::string SyntheticSpec::to_string() const {
  std::ostringstream out;
  out << kind_name(kind) << ':' << size_a;
  if (kind == SyntheticKind::bipartite) out << ',' << size_b;
  if (kind == SyntheticKind::gnp) out << ',' << probability << ':' << seed;
  return out.str();
}

Graph generate_synthetic(const SyntheticSpec& spec) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::size_t n = spec.size_a;

  switch (spec.kind) {
    case SyntheticKind::path:
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case SyntheticKind::cycle:
      for (VertexId v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
      break;
    case SyntheticKind::complete:
      for (VertexId v = 1; v < n; ++v)
        for (VertexId u = 0; u < v; ++u) edges.emplace_back(u, v);
      break;
    case SyntheticKind::bipartite:
      n = spec.size_a + spec.size_b;
      for (VertexId left = 0; left < spec.size_a; ++left)
        for (VertexId right = 0; right < spec.size_b; ++right)
          edges.emplace_back(left, static_cast<VertexId>(spec.size_a + right));
      break;
    case SyntheticKind::gnp:
      if (!(spec.probability >= 0.0 && spec.probability <= 1.0))
        throw std::invalid_argument("gnp probability must lie in [0, 1]");
      edges = sample_gnp(spec.size_a, spec.probability, spec.seed);
      break;
  }
  return Graph::from_edge_pairs(n, std::move(edges));
}

}  // namespace parcolor

// Copyright 2026 The hypersat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypersat/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>

namespace hypersat {

namespace detail {

struct CodegreeCache {
  std::once_flag pairs_once;
  std::unordered_map<std::uint64_t, std::vector<EdgeId>> pairs;
  std::once_flag top_once;
  ShadowCounts top;  // (r-1)-sets
};

}  // namespace detail

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Calls fn on every k-subset of `items` (as a sorted vector, given sorted input).
template <class Fn>
void for_each_subset(std::span<const Vertex> items, unsigned k, Fn&& fn) {
  const auto n = items.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> subset(k);
  while (true) {
    for (unsigned i = 0; i < k; ++i) subset[i] = items[idx[i]];
    fn(subset);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Hypergraph::Hypergraph() : cache_(std::make_shared<detail::CodegreeCache>()) {}

Hypergraph::Hypergraph(unsigned r, std::size_t n, std::vector<std::vector<Vertex>> edges)
    : Hypergraph(validate(edges, n, r)) {}

Hypergraph::Hypergraph(Trusted, unsigned r, std::size_t n, std::vector<Vertex> flat)
    : r_(r), n_(n), flat_(std::move(flat)), cache_(std::make_shared<detail::CodegreeCache>()) {
  build_incidence();
}

Hypergraph Hypergraph::empty(unsigned r, std::size_t n) {
  if (r < 2) throw PreconditionError("uniformity must be at least 2");
  return Hypergraph(Trusted{}, r, n, {});
}

void Hypergraph::build_incidence() {
  offsets_.assign(n_ + 1, 0);
  for (Vertex v : flat_) ++offsets_[v + 1];
  for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  incidence_.resize(flat_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  const auto m = edge_count();
  for (std::size_t e = 0; e < m; ++e) {
    for (Vertex v : edge(static_cast<EdgeId>(e))) incidence_[cursor[v]++] = static_cast<EdgeId>(e);
  }
}

Hypergraph validate(const std::vector<std::vector<Vertex>>& raw_edges, std::size_t n, unsigned r) {
  if (r < 2) throw PreconditionError("uniformity must be at least 2, got " + std::to_string(r));
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(raw_edges.size());
  for (const auto& raw : raw_edges) {
    if (raw.size() != r) {
      throw PreconditionError("edge has " + std::to_string(raw.size()) + " vertices, expected " +
                              std::to_string(r));
    }
    auto e = raw;
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= n) {
        throw PreconditionError("vertex " + std::to_string(e[i]) + " out of range for n = " + std::to_string(n));
      }
      if (i > 0 && e[i] == e[i - 1]) {
        throw PreconditionError("repeated vertex " + std::to_string(e[i]) + " in edge");
      }
    }
    edges.push_back(std::move(e));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Vertex> flat;
  flat.reserve(edges.size() * r);
  for (const auto& e : edges) flat.insert(flat.end(), e.begin(), e.end());
  return Hypergraph(Hypergraph::Trusted{}, r, n, std::move(flat));
}

std::size_t Hypergraph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::optional<EdgeId> Hypergraph::find_edge(std::span<const Vertex> vertices) const {
  if (vertices.size() != r_) return std::nullopt;
  std::vector<Vertex> key(vertices.begin(), vertices.end());
  std::sort(key.begin(), key.end());
  if (key.back() >= n_) return std::nullopt;
  Vertex pivot = key[0];
  for (Vertex v : key) {
    if (degree(v) < degree(pivot)) pivot = v;
  }
  for (EdgeId id : incident(pivot)) {
    const auto e = edge(id);
    if (std::equal(e.begin(), e.end(), key.begin())) return id;
  }
  return std::nullopt;
}

const detail::CodegreeCache& Hypergraph::cache() const { return *cache_; }

std::span<const EdgeId> Hypergraph::pair_edges(Vertex a, Vertex b) const {
  auto& c = *cache_;
  std::call_once(c.pairs_once, [&] {
    const auto m = edge_count();
    for (std::size_t id = 0; id < m; ++id) {
      const auto e = edge(static_cast<EdgeId>(id));
      for (unsigned i = 0; i < r_; ++i)
        for (unsigned j = i + 1; j < r_; ++j) c.pairs[pair_key(e[i], e[j])].push_back(static_cast<EdgeId>(id));
    }
  });
  auto it = c.pairs.find(pair_key(a, b));
  if (it == c.pairs.end()) return {};
  return it->second;
}

std::size_t Hypergraph::codegree(std::span<const Vertex> subset) const {
  if (subset.size() >= r_) {
    throw PreconditionError("codegree needs |X| < r (|X| = " + std::to_string(subset.size()) +
                            ", r = " + std::to_string(r_) + ")");
  }
  std::vector<Vertex> key(subset.begin(), subset.end());
  std::sort(key.begin(), key.end());
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] >= n_) throw PreconditionError("vertex " + std::to_string(key[i]) + " out of range");
    if (i > 0 && key[i] == key[i - 1]) throw PreconditionError("codegree subset has a repeated vertex");
  }
  if (key.empty()) return edge_count();
  if (key.size() == 1) return degree(key[0]);

  auto& c = *cache_;
  if (key.size() == 2) {
    return pair_edges(key[0], key[1]).size();
  }
  if (key.size() == r_ - 1) {
    std::call_once(c.top_once, [&] { c.top = shadow_counts(r_ - 1); });
    auto it = c.top.find(key);
    return it == c.top.end() ? 0 : it->second;
  }
  Vertex pivot = key[0];
  for (Vertex v : key) {
    if (degree(v) < degree(pivot)) pivot = v;
  }
  std::size_t count = 0;
  for (EdgeId id : incident(pivot)) {
    const auto e = edge(id);
    if (std::includes(e.begin(), e.end(), key.begin(), key.end())) ++count;
  }
  return count;
}

ShadowCounts Hypergraph::shadow_counts(unsigned k) const {
  ShadowCounts counts;
  const auto m = edge_count();
  for (std::size_t id = 0; id < m; ++id) {
    for_each_subset(edge(static_cast<EdgeId>(id)), k, [&](const std::vector<Vertex>& s) { ++counts[s]; });
  }
  return counts;
}

std::size_t Hypergraph::max_codegree(unsigned j) const {
  if (j < 1 || j >= r_) {
    throw PreconditionError("max_codegree needs 1 <= j < r");
  }
  if (j == 1) return max_degree();
  std::size_t best = 0;
  for (const auto& [subset, count] : shadow_counts(j)) best = std::max(best, count);
  return best;
}

bool Hypergraph::is_linear() const {
  std::unordered_map<std::uint64_t, std::size_t> seen;
  const auto m = edge_count();
  for (std::size_t id = 0; id < m; ++id) {
    const auto e = edge(static_cast<EdgeId>(id));
    for (unsigned a = 0; a < r_; ++a)
      for (unsigned b = a + 1; b < r_; ++b)
        if (++seen[pair_key(e[a], e[b])] > 1) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(edge_count());
  for (std::size_t id = 0; id < edge_count(); ++id) {
    const auto e = edge(static_cast<EdgeId>(id));
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : adjacency_(n) {
  for (auto [a, b] : edges) {
    if (a == b) throw PreconditionError("simple graph cannot have a loop");
    if (a >= n || b >= n) throw PreconditionError("graph vertex out of range");
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool SimpleGraph::adjacent(Vertex a, Vertex b) const {
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

PartitionedHypergraph::PartitionedHypergraph(Hypergraph graph, std::vector<unsigned> classes)
    : graph_(std::move(graph)), classes_(std::move(classes)) {
  const unsigned r = graph_.uniformity();
  if (classes_.size() != graph_.vertex_count()) {
    throw PreconditionError("class assignment must cover every vertex");
  }
  for (unsigned c : classes_) {
    if (c >= r) throw PreconditionError("class index " + std::to_string(c) + " out of range");
  }
  std::vector<char> hit(r);
  for (std::size_t id = 0; id < graph_.edge_count(); ++id) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Vertex v : graph_.edge(static_cast<EdgeId>(id))) {
      if (hit[classes_[v]]++) throw PreconditionError("edge " + std::to_string(id) + " is not transversal");
    }
  }
}

std::vector<Vertex> PartitionedHypergraph::members(unsigned c) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < classes_.size(); ++v)
    if (classes_[v] == c) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<Vertex> PartitionedHypergraph::live_members(unsigned c) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < classes_.size(); ++v)
    if (classes_[v] == c && graph_.degree(static_cast<Vertex>(v)) > 0) out.push_back(static_cast<Vertex>(v));
  return out;
}

Vertex PartitionedHypergraph::vertex_in_class(EdgeId id, unsigned c) const {
  for (Vertex v : graph_.edge(id))
    if (classes_[v] == c) return v;
  throw PreconditionError("edge misses class " + std::to_string(c));
}

SimpleGraph pair_shadow_graph(const PartitionedHypergraph& p, unsigned i, unsigned j) {
  if (i == j) throw PreconditionError("pair_shadow_graph needs two distinct classes");
  const unsigned r = p.class_count();
  if (i >= r || j >= r) throw PreconditionError("class index out of range");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(p.graph().edge_count());
  for (std::size_t id = 0; id < p.graph().edge_count(); ++id) {
    pairs.emplace_back(p.vertex_in_class(static_cast<EdgeId>(id), i), p.vertex_in_class(static_cast<EdgeId>(id), j));
  }
  return SimpleGraph(p.graph().vertex_count(), pairs);
}

Subhypergraph induced_subgraph(const Hypergraph& h, std::span<const Vertex> subset) {
  const auto n = h.vertex_count();
  std::vector<Vertex> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> relabel(n, kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n) throw PreconditionError("induced_subgraph vertex out of range");
    relabel[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> mapped(h.uniformity());
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    const auto e = h.edge(static_cast<EdgeId>(id));
    bool inside = true;
    for (unsigned k = 0; k < e.size() && inside; ++k) {
      mapped[k] = relabel[e[k]];
      inside = mapped[k] != kAbsent;
    }
    if (inside) edges.push_back(mapped);
  }
  return {validate(edges, keep.size(), h.uniformity()), std::move(keep)};
}

Subhypergraph peel_min_degree(const Hypergraph& h, std::size_t d_min) {
  const auto n = h.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0), edge_dead(h.edge_count(), 0);
  std::deque<Vertex> queue;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = h.degree(static_cast<Vertex>(v));
    if (deg[v] < d_min) {
      removed[v] = 1;
      queue.push_back(static_cast<Vertex>(v));
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (EdgeId id : h.incident(v)) {
      if (edge_dead[id]) continue;
      edge_dead[id] = 1;
      for (Vertex u : h.edge(id)) {
        if (removed[u]) continue;
        if (--deg[u] < d_min) {
          removed[u] = 1;
          queue.push_back(u);
        }
      }
    }
  }
  std::vector<Vertex> survivors;
  for (std::size_t v = 0; v < n; ++v)
    if (!removed[v]) survivors.push_back(static_cast<Vertex>(v));
  return induced_subgraph(h, survivors);
}

std::vector<std::size_t> distance_layers(const Hypergraph& h, Vertex x, std::size_t depth) {
  if (x >= h.vertex_count()) throw PreconditionError("distance_layers start vertex out of range");
  constexpr std::size_t kUnseen = ~std::size_t{0};
  std::vector<std::size_t> dist(h.vertex_count(), kUnseen);
  std::vector<char> edge_seen(h.edge_count(), 0);
  std::vector<std::size_t> layers(depth, 0);
  std::vector<Vertex> frontier{x}, next;
  dist[x] = 0;
  for (std::size_t d = 1; d <= depth && !frontier.empty(); ++d) {
    next.clear();
    for (Vertex v : frontier) {
      for (EdgeId id : h.incident(v)) {
        if (edge_seen[id]) continue;
        edge_seen[id] = 1;
        for (Vertex u : h.edge(id)) {
          if (dist[u] == kUnseen) {
            dist[u] = d;
            next.push_back(u);
          }
        }
      }
    }
    layers[d - 1] = next.size();
    frontier.swap(next);
  }
  return layers;
}

}  // namespace hypersat

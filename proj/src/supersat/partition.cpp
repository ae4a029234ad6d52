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


#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "hypersat/supersat.hpp"

namespace hypersat {

namespace {

using Wide = unsigned __int128;

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool transversal(std::span<const Vertex> e, const std::vector<unsigned>& classes, unsigned r) {
  std::uint64_t seen = 0;
  for (Vertex v : e) seen |= std::uint64_t{1} << classes[v];
  return static_cast<std::size_t>(std::popcount(seen)) == r;
}

std::size_t transversal_count(const Hypergraph& g, const std::vector<unsigned>& classes) {
  std::size_t count = 0;
  for (EdgeId id = 0; id < g.edge_count(); ++id) count += transversal(g.edge(id), classes, g.uniformity());
  return count;
}

PartitionedHypergraph transversal_part(const Hypergraph& g, const std::vector<unsigned>& classes) {
  std::vector<std::vector<Vertex>> kept;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto e = g.edge(id);
    if (transversal(e, classes, g.uniformity())) kept.emplace_back(e.begin(), e.end());
  }
  return PartitionedHypergraph(Hypergraph(g.uniformity(), g.vertex_count(), std::move(kept)), classes);
}

// r^r times the probability that edge e becomes transversal when the
// unassigned vertices get independent uniform classes.
Wide scaled_chance(std::span<const Vertex> e, const std::vector<int>& assigned, unsigned r) {
  std::uint64_t seen = 0;
  unsigned open = 0;
  for (Vertex v : e) {
    if (assigned[v] < 0) {
      ++open;
      continue;
    }
    const auto bit = std::uint64_t{1} << assigned[v];
    if (seen & bit) return 0;
    seen |= bit;
  }
  Wide out = 1;
  for (unsigned i = 2; i <= open; ++i) out *= i;
  for (unsigned i = open; i < r; ++i) out *= r;
  return out;
}

// Moves single vertices to another class while that strictly increases the
// transversal count.
std::size_t improve(const Hypergraph& g, std::vector<unsigned>& classes) {
  const unsigned r = g.uniformity();
  std::size_t moves = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const unsigned home = classes[v];
      std::size_t before = 0;
      for (EdgeId id : g.incident(v)) before += transversal(g.edge(id), classes, r);
      unsigned best = home;
      std::size_t best_count = before;
      for (unsigned c = 0; c < r; ++c) {
        if (c == home) continue;
        classes[v] = c;
        std::size_t after = 0;
        for (EdgeId id : g.incident(v)) after += transversal(g.edge(id), classes, r);
        if (after > best_count) {
          best = c;
          best_count = after;
        }
      }
      classes[v] = best;
      if (best != home) {
        ++moves;
        changed = true;
      }
    }
  }
  return moves;
}

}  // namespace

PartitionResult erdos_kleitman_partition(const Hypergraph& g, std::size_t trials, RngSeed seed, bool local_search) {
  const unsigned r = g.uniformity();
  if (g.edgeless()) throw PreconditionError("erdos_kleitman_partition needs at least one edge");
  if (r > 20) throw PreconditionError("erdos_kleitman_partition supports r <= 20");
  const std::size_t n = g.vertex_count();

  PartitionResult out;
  {
    const BigInt num = factorial(r) * g.edge_count();
    const BigInt den = ipow(BigInt(r), r);
    out.bound = (num + den - 1) / den;
  }

  std::vector<unsigned> classes(n);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(RngSeed{mix_seed(seed.value, t)});
    for (auto& c : classes) c = static_cast<unsigned>(rng.below(r));
    out.trials_used = t + 1;
    if (BigInt(transversal_count(g, classes)) >= out.bound) {
      if (local_search) out.moves = improve(g, classes);
      out.partition = transversal_part(g, classes);
      return out;
    }
  }

  // Each step keeps the conditional expectation from decreasing, so the final
  // count is at least the initial expectation r! e / r^r.
  out.fallback = true;
  std::vector<int> assigned(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    Wide best = 0;
    unsigned best_class = 0;
    for (unsigned c = 0; c < r; ++c) {
      assigned[v] = static_cast<int>(c);
      Wide total = 0;
      for (EdgeId id : g.incident(v)) total += scaled_chance(g.edge(id), assigned, r);
      if (c == 0 || total > best) {
        best = total;
        best_class = c;
      }
    }
    assigned[v] = static_cast<int>(best_class);
    classes[v] = best_class;
  }
  if (BigInt(transversal_count(g, classes)) < out.bound) {
    throw VerificationError("erdos-kleitman", "conditional expectation fell below the bound");
  }
  if (local_search) out.moves = improve(g, classes);
  out.partition = transversal_part(g, classes);
  return out;
}

Classification classify_types(const PartitionedHypergraph& p) {
  const Hypergraph& h = p.graph();
  const unsigned r = h.uniformity();
  if (h.edgeless()) throw PreconditionError("classify_types needs at least one edge");
  std::vector<std::vector<unsigned>> types(h.edge_count(), std::vector<unsigned>(r * (r - 1) / 2));
  Classification out;
  for (EdgeId id = 0; id < h.edge_count(); ++id) {
    const auto e = h.edge(id);
    for (unsigned a = 0; a < r; ++a) {
      for (unsigned b = a + 1; b < r; ++b) {
        const std::size_t d = h.pair_edges(e[a], e[b]).size();
        types[id][class_pair_index(r, p.class_of(e[a]), p.class_of(e[b]))] = dyadic_exponent(d);
      }
    }
    ++out.multiplicity[types[id]];
  }
  auto best = out.multiplicity.begin();
  for (auto it = out.multiplicity.begin(); it != out.multiplicity.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  out.type = TypeVector{r, best->first};
  std::vector<std::vector<Vertex>> kept;
  for (EdgeId id = 0; id < h.edge_count(); ++id) {
    if (types[id] == best->first) kept.emplace_back(h.edge(id).begin(), h.edge(id).end());
  }
  out.h0 = PartitionedHypergraph(Hypergraph(r, h.vertex_count(), std::move(kept)), p.classes());
  return out;
}

double default_cleanup_factor(std::size_t n, unsigned r) {
  const double base = 2.0 * r * std::log2(static_cast<double>(n));
  return std::pow(base, -static_cast<double>(r) * r);
}

CleanupResult codegree_cleanup(const PartitionedHypergraph& h0, const PartitionedHypergraph& host, double factor) {
  const Hypergraph& g0 = h0.graph();
  const Hypergraph& gh = host.graph();
  if (!(factor > 0.0 && factor <= 1.0)) throw PreconditionError("cleanup factor must lie in (0, 1]");
  if (g0.uniformity() != gh.uniformity() || g0.vertex_count() != gh.vertex_count() ||
      h0.classes() != host.classes()) {
    throw PreconditionError("cleanup needs h0 and host on the same partitioned vertex set");
  }
  for (EdgeId id = 0; id < g0.edge_count(); ++id) {
    if (!gh.contains_edge(g0.edge(id))) throw PreconditionError("h0 is not a subgraph of the host");
  }
  const unsigned r = g0.uniformity();

  std::unordered_map<std::uint64_t, std::size_t> current;
  for (EdgeId id = 0; id < g0.edge_count(); ++id) {
    const auto e = g0.edge(id);
    for (unsigned a = 0; a < r; ++a) {
      for (unsigned b = a + 1; b < r; ++b) ++current[pair_key(e[a], e[b])];
    }
  }
  std::deque<std::uint64_t> work;
  std::unordered_set<std::uint64_t> queued;
  for (const auto& [key, count] : current) {
    work.push_back(key);
    queued.insert(key);
  }
  std::sort(work.begin(), work.end());

  std::vector<char> alive(g0.edge_count(), 1);
  CleanupResult out;
  out.factor = factor;
  while (!work.empty()) {
    const std::uint64_t key = work.front();
    work.pop_front();
    queued.erase(key);
    const auto a = static_cast<Vertex>(key >> 32);
    const auto b = static_cast<Vertex>(key & 0xffffffffu);
    const std::size_t c = current[key];
    const std::size_t dh = gh.pair_edges(a, b).size();
    if (c == 0 || static_cast<long double>(c) >= static_cast<long double>(factor) * dh) continue;
    CleanupDeletion del{a, b, c, dh, 0};
    for (EdgeId id : g0.pair_edges(a, b)) {
      if (!alive[id]) continue;
      alive[id] = 0;
      ++del.removed;
      const auto e = g0.edge(id);
      for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = i + 1; j < r; ++j) {
          const auto k = pair_key(e[i], e[j]);
          --current[k];
          if (k != key && queued.insert(k).second) work.push_back(k);
        }
      }
    }
    out.audit.push_back(del);
  }

  std::vector<std::vector<Vertex>> kept;
  std::vector<char> live(g0.vertex_count(), 0);
  for (EdgeId id = 0; id < g0.edge_count(); ++id) {
    if (!alive[id]) continue;
    kept.emplace_back(g0.edge(id).begin(), g0.edge(id).end());
    for (Vertex v : g0.edge(id)) live[v] = 1;
  }
  for (Vertex v = 0; v < live.size(); ++v) {
    if (live[v]) out.live.push_back(v);
  }
  out.graph = PartitionedHypergraph(Hypergraph(r, g0.vertex_count(), std::move(kept)), h0.classes());
  return out;
}

ThirdVertexSets third_vertex_sets(const PartitionedHypergraph& h, Vertex u1, Vertex u2) {
  const Hypergraph& g = h.graph();
  const unsigned r = g.uniformity();
  if (r < 3) throw PreconditionError("third_vertex_sets needs r >= 3");
  if (u1 >= g.vertex_count() || u2 >= g.vertex_count()) throw PreconditionError("vertex out of range");
  if (h.class_of(u1) == h.class_of(u2)) throw PreconditionError("u1 and u2 lie in the same class");

  ThirdVertexSets out;
  out.by_class.resize(r);
  const auto through = g.pair_edges(u1, u2);
  out.codegree = through.size();
  for (EdgeId id : through) {
    for (Vertex x : g.edge(id)) {
      if (x != u1 && x != u2) out.by_class[h.class_of(x)].push_back(x);
    }
  }
  std::size_t largest = 0;
  for (auto& list : out.by_class) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    largest = std::max(largest, list.size());
  }
  if (out.codegree > 0) {
    std::size_t k = 1;
    while (true) {
      Wide power = 1;
      for (unsigned i = 0; i < r - 2 && power < out.codegree; ++i) power *= k;
      if (power >= out.codegree) break;
      ++k;
    }
    out.bound = k;
  }
  out.bound_met = largest >= out.bound;
  return out;
}

}  // namespace hypersat

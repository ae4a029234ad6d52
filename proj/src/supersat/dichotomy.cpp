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
#include <cmath>
#include <map>

#include "hypersat/supersat.hpp"

namespace hypersat {

namespace {

struct Shadow {
  unsigned missing = 0;
  std::vector<EdgeId> edges;
  std::size_t current = 0;
};

struct Group {
  std::size_t shadow = 0;
  std::size_t codegree = 0;
  std::vector<EdgeId> edges;
};

std::vector<Vertex> without(std::span<const Vertex> e, std::size_t skip) {
  std::vector<Vertex> out;
  out.reserve(e.size() - 1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i != skip) out.push_back(e[i]);
  }
  return out;
}

PartitionedHypergraph restrict_edges(const PartitionedHypergraph& p, const std::vector<EdgeId>& ids) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(ids.size());
  for (EdgeId id : ids) edges.emplace_back(p.graph().edge(id).begin(), p.graph().edge(id).end());
  return PartitionedHypergraph(Hypergraph(p.graph().uniformity(), p.graph().vertex_count(), std::move(edges)),
                               p.classes());
}

}  // namespace

DichotomyOutcome codegree_dichotomy(const PartitionedHypergraph& p, std::size_t a) {
  const Hypergraph& g = p.graph();
  const unsigned r = g.uniformity();
  const std::size_t n = g.vertex_count();
  const std::size_t e = g.edge_count();
  const BigInt tau_den = 4 * ipow(BigInt(n), r - 1);  // tau = e / tau_den
  if (a > n || BigInt(a) * tau_den <= e) throw PreconditionError("A must satisfy e/(4n^(r-1)) < A <= n");

  // Every edge owns r shadows; the one missing class c is edge minus its class-c vertex.
  std::map<std::vector<Vertex>, std::size_t> index;
  std::vector<Shadow> shadows;
  std::vector<std::vector<std::size_t>> owned(e);
  for (EdgeId id = 0; id < e; ++id) {
    const auto edge = g.edge(id);
    for (std::size_t k = 0; k < r; ++k) {
      auto [it, fresh] = index.try_emplace(without(edge, k), shadows.size());
      if (fresh) shadows.push_back({p.class_of(edge[k]), {}, 0});
      shadows[it->second].edges.push_back(id);
      ++shadows[it->second].current;
      owned[id].push_back(it->second);
    }
  }

  std::vector<char> alive(e, 1);
  std::vector<char> queued(shadows.size(), 1);
  std::vector<std::size_t> work(shadows.size());
  for (std::size_t i = 0; i < work.size(); ++i) work[i] = shadows.size() - 1 - i;
  std::vector<Group> groups;
  std::size_t survivors = e;
  while (!work.empty()) {
    const std::size_t s = work.back();
    work.pop_back();
    queued[s] = 0;
    const std::size_t c = shadows[s].current;
    if (c == 0 || c >= a) continue;
    Group grp{s, c, {}};
    for (EdgeId id : shadows[s].edges) {
      if (!alive[id]) continue;
      alive[id] = 0;
      --survivors;
      grp.edges.push_back(id);
      for (std::size_t t : owned[id]) {
        --shadows[t].current;
        if (!queued[t]) {
          queued[t] = 1;
          work.push_back(t);
        }
      }
    }
    groups.push_back(std::move(grp));
  }

  const double log_n = std::log2(static_cast<double>(n));
  if (2 * survivors >= e) {
    std::vector<EdgeId> kept;
    for (EdgeId id = 0; id < e; ++id) {
      if (alive[id]) kept.push_back(id);
    }
    DenseOutcome out{restrict_edges(p, kept), a};
    for (const auto& [sigma, count] : out.subgraph.graph().shadow_counts(r - 1)) {
      if (count < a) throw VerificationError("dichotomy", "dense shadow with codegree " + std::to_string(count));
    }
    return out;
  }

  // Bucket deleted groups by (missing class, floor log2 codegree); a bucket is
  // usable when its D = min(2^(k+1), A) exceeds tau.
  std::map<std::pair<unsigned, unsigned>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const unsigned k = dyadic_exponent(groups[i].codegree) - 1;
    buckets[{shadows[groups[i].shadow].missing, k}].push_back(i);
  }
  const std::vector<std::size_t>* best = nullptr;
  std::pair<unsigned, unsigned> best_key{};
  std::size_t best_edges = 0;
  for (const auto& [key, members] : buckets) {
    const std::size_t d = std::min<std::size_t>(std::size_t{1} << (key.second + 1), a);
    if (BigInt(d) * tau_den <= e) continue;
    std::size_t edges = 0;
    for (std::size_t i : members) edges += groups[i].edges.size();
    if (edges > best_edges) {
      best = &members;
      best_key = key;
      best_edges = edges;
    }
  }
  if (best == nullptr) throw VerificationError("dichotomy", "no admissible codegree bucket");

  std::vector<EdgeId> kept;
  for (std::size_t i : *best) kept.insert(kept.end(), groups[i].edges.begin(), groups[i].edges.end());
  std::sort(kept.begin(), kept.end());
  RegularOutcome out;
  out.subgraph = restrict_edges(p, kept);
  out.d = std::min<std::size_t>(std::size_t{1} << (best_key.second + 1), a);
  out.missing_class = best_key.first;
  for (unsigned c = 0; c < r; ++c) {
    if (c != out.missing_class) out.shadow_side.push_back(c);
  }

  const Hypergraph& hat = out.subgraph.graph();
  if (static_cast<long double>(hat.edge_count()) * 4 * r * log_n < static_cast<long double>(e)) {
    throw VerificationError("dichotomy", "regular subgraph below e/(4 r log2 n)");
  }
  for (const auto& [sigma, count] : hat.shadow_counts(r - 1)) {
    bool on_side = true;
    for (Vertex v : sigma) on_side = on_side && p.class_of(v) != out.missing_class;
    if (on_side && (2 * count < out.d || count >= out.d)) {
      throw VerificationError("dichotomy", "shadow codegree " + std::to_string(count) + " outside [D/2, D)");
    }
  }
  return out;
}

}  // namespace hypersat

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


#include "hypersat/constructions.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "hypersat/counting.hpp"

namespace hypersat {

namespace {

void require_uniformity(unsigned r, unsigned at_least) {
  if (r < at_least) {
    throw PreconditionError("uniformity must be at least " + std::to_string(at_least) + ", got " + std::to_string(r));
  }
}

// Advances a strictly increasing index vector over [0, n); false at the end.
bool next_combination(std::vector<Vertex>& c, std::size_t n) {
  const auto k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::vector<Vertex> random_subset(Rng& rng, std::size_t n, unsigned r) {
  std::vector<Vertex> s;
  while (s.size() < r) {
    const auto v = static_cast<Vertex>(rng.below(n));
    if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = n - k + i;
    const BigInt next = BigInt(out) * num / i;
    if (next > kMax) return kMax;
    out = next.convert_to<std::size_t>();
  }
  return out;
}

Hypergraph single_edge(unsigned r) {
  require_uniformity(r, 2);
  std::vector<Vertex> e(r);
  for (unsigned i = 0; i < r; ++i) e[i] = i;
  return Hypergraph(r, r, {e});
}

Hypergraph linear_cycle(unsigned r, unsigned length) {
  require_uniformity(r, 3);
  if (length < 2) throw PreconditionError("a linear cycle needs at least 2 edges");
  const std::size_t n = static_cast<std::size_t>(r - 1) * length;
  std::vector<std::vector<Vertex>> edges;
  for (unsigned i = 0; i < length; ++i) {
    std::vector<Vertex> e;
    for (unsigned j = 0; j < r; ++j) e.push_back(static_cast<Vertex>((static_cast<std::size_t>(r - 1) * i + j) % n));
    edges.push_back(std::move(e));
  }
  return Hypergraph(r, n, std::move(edges));
}

Hypergraph linear_path(unsigned r, unsigned length) {
  require_uniformity(r, 2);
  if (length < 1) throw PreconditionError("a linear path needs at least 1 edge");
  const std::size_t n = static_cast<std::size_t>(r - 1) * length + 1;
  std::vector<std::vector<Vertex>> edges;
  for (unsigned i = 0; i < length; ++i) {
    std::vector<Vertex> e;
    for (unsigned j = 0; j < r; ++j) e.push_back(static_cast<Vertex>((r - 1) * i + j));
    edges.push_back(std::move(e));
  }
  return Hypergraph(r, n, std::move(edges));
}

Hypergraph complete_hypergraph(unsigned r, std::size_t n) {
  require_uniformity(r, 2);
  std::vector<std::vector<Vertex>> edges;
  if (n >= r) {
    std::vector<Vertex> c(r);
    for (unsigned i = 0; i < r; ++i) c[i] = i;
    do {
      edges.push_back(c);
    } while (next_combination(c, n));
  }
  return Hypergraph(r, n, std::move(edges));
}

PartitionedHypergraph complete_partite(unsigned r, std::size_t s) {
  require_uniformity(r, 2);
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::size_t> idx(r, 0);
  if (s > 0) {
    while (true) {
      std::vector<Vertex> e(r);
      for (unsigned c = 0; c < r; ++c) e[c] = static_cast<Vertex>(c * s + idx[c]);
      edges.push_back(std::move(e));
      int c = static_cast<int>(r) - 1;
      while (c >= 0 && idx[c] + 1 == s) idx[c--] = 0;
      if (c < 0) break;
      ++idx[c];
    }
  }
  std::vector<unsigned> classes(r * s);
  for (std::size_t v = 0; v < classes.size(); ++v) classes[v] = static_cast<unsigned>(v / s);
  return PartitionedHypergraph(Hypergraph(r, r * s, std::move(edges)), std::move(classes));
}

Hypergraph blow_up(const Hypergraph& h, std::size_t t) {
  if (t < 1) throw PreconditionError("blow-up factor must be at least 1");
  const unsigned r = h.uniformity();
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::size_t> copy(r);
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    const auto e = h.edge(static_cast<EdgeId>(id));
    std::fill(copy.begin(), copy.end(), 0);
    while (true) {
      std::vector<Vertex> be(r);
      for (unsigned j = 0; j < r; ++j) be[j] = static_cast<Vertex>(e[j] * t + copy[j]);
      edges.push_back(std::move(be));
      int j = static_cast<int>(r) - 1;
      while (j >= 0 && copy[j] + 1 == t) copy[j--] = 0;
      if (j < 0) break;
      ++copy[j];
    }
  }
  return Hypergraph(r, h.vertex_count() * t, std::move(edges));
}

Hypergraph tensor_product(const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.uniformity() != h2.uniformity()) throw PreconditionError("tensor product needs equal uniformity");
  const unsigned r = h1.uniformity();
  const std::size_t n2 = h2.vertex_count();
  std::vector<std::vector<Vertex>> edges;
  std::vector<unsigned> perm(r);
  for (std::size_t a = 0; a < h1.edge_count(); ++a) {
    const auto e1 = h1.edge(static_cast<EdgeId>(a));
    for (std::size_t b = 0; b < h2.edge_count(); ++b) {
      const auto e2 = h2.edge(static_cast<EdgeId>(b));
      for (unsigned i = 0; i < r; ++i) perm[i] = i;
      do {
        std::vector<Vertex> e(r);
        for (unsigned i = 0; i < r; ++i) e[i] = static_cast<Vertex>(e1[i] * n2 + e2[perm[i]]);
        edges.push_back(std::move(e));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return Hypergraph(r, h1.vertex_count() * n2, std::move(edges));
}

Hypergraph random_uniform(std::size_t n, unsigned r, std::size_t m, RngSeed seed) {
  require_uniformity(r, 2);
  const std::size_t total = binomial(n, r);
  if (m > total) {
    throw PreconditionError("cannot draw " + std::to_string(m) + " distinct edges from C(" + std::to_string(n) + ", " +
                            std::to_string(r) + ") = " + std::to_string(total));
  }
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  if (total <= (std::size_t{1} << 20) && 2 * m >= total) {
    std::vector<Vertex> c(r);
    for (unsigned i = 0; i < r; ++i) c[i] = i;
    do {
      edges.push_back(c);
    } while (next_combination(c, n));
    for (std::size_t i = 0; i < m; ++i) std::swap(edges[i], edges[i + rng.below(edges.size() - i)]);
    edges.resize(m);
  } else {
    std::set<std::vector<Vertex>> seen;
    while (edges.size() < m) {
      auto e = random_subset(rng, n, r);
      if (seen.insert(e).second) edges.push_back(std::move(e));
    }
  }
  return Hypergraph(r, n, std::move(edges));
}

Percolation percolate_vertices(const Hypergraph& h, double p, RngSeed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("percolation probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Vertex> kept;
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    if (rng.bernoulli(p)) kept.push_back(static_cast<Vertex>(v));
  Percolation out;
  out.result = induced_subgraph(h, kept);
  out.kept_vertices = kept.size();
  out.surviving_edges = out.result.graph.edge_count();
  return out;
}

Hypergraph greedy_high_girth(std::size_t n, unsigned r, unsigned g_min, std::size_t attempts, RngSeed seed) {
  require_uniformity(r, 2);
  if (g_min < 2) throw PreconditionError("g_min must be at least 2");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  std::set<std::vector<Vertex>> seen;
  std::vector<std::vector<std::size_t>> incident(n);
  const std::size_t reach = g_min - 2;  // a Berge path this short between two candidate vertices closes a short cycle

  constexpr std::size_t kUnseen = ~std::size_t{0};
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<Vertex> touched, frontier, next;

  auto too_close = [&](const std::vector<Vertex>& cand) {
    if (reach == 0) return false;
    for (unsigned a = 0; a + 1 < r; ++a) {
      for (Vertex x : touched) dist[x] = kUnseen;
      touched.assign(1, cand[a]);
      dist[cand[a]] = 0;
      frontier.assign(1, cand[a]);
      for (std::size_t d = 1; d <= reach && !frontier.empty(); ++d) {
        next.clear();
        for (Vertex v : frontier) {
          for (std::size_t id : incident[v]) {
            for (Vertex u : edges[id]) {
              if (dist[u] != kUnseen) continue;
              dist[u] = d;
              touched.push_back(u);
              next.push_back(u);
            }
          }
        }
        frontier.swap(next);
      }
      for (unsigned b = a + 1; b < r; ++b)
        if (dist[cand[b]] != kUnseen) return true;
    }
    return false;
  };

  if (n >= r) {
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
      auto cand = random_subset(rng, n, r);
      if (seen.count(cand) || too_close(cand)) continue;
      for (Vertex v : cand) incident[v].push_back(edges.size());
      seen.insert(cand);
      edges.push_back(std::move(cand));
    }
  }
  Hypergraph out(r, n, std::move(edges));
  const auto girth = berge_girth(out).girth;
  if (girth && *girth < g_min) throw Error("internal error: greedy high-girth output has girth " + std::to_string(*girth));
  return out;
}

Hypergraph steiner_triple_9() {
  std::vector<std::vector<Vertex>> lines;
  auto point = [](unsigned x, unsigned y) { return static_cast<Vertex>(3 * (x % 3) + (y % 3)); };
  for (unsigned c = 0; c < 3; ++c) {
    lines.push_back({point(0, c), point(1, c), point(2, c)});
    lines.push_back({point(c, 0), point(c, 1), point(c, 2)});
    lines.push_back({point(0, c), point(1, 1 + c), point(2, 2 + c)});
    lines.push_back({point(0, c), point(1, 2 + c), point(2, 4 + c)});
  }
  return Hypergraph(3, 9, std::move(lines));
}

}  // namespace hypersat

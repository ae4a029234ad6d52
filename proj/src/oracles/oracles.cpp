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


#include "hypersat/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace hypersat::oracle {

namespace {

void check_size(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap) {
    throw BudgetExceeded(std::string(what) + " " + std::to_string(value) + " exceeds oracle budget " + std::to_string(cap));
  }
}

std::set<std::vector<Vertex>> edge_set(const Hypergraph& h) {
  std::set<std::vector<Vertex>> out;
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    const auto e = h.edge(static_cast<EdgeId>(id));
    out.emplace(e.begin(), e.end());
  }
  return out;
}

// Visits every map [0, k) -> [0, n) in odometer order.
template <class Fn>
void for_each_map(std::size_t k, std::size_t n, Fn&& fn) {
  std::vector<Vertex> phi(k, 0);
  if (k > 0 && n == 0) return;
  while (true) {
    fn(phi);
    std::size_t i = 0;
    while (i < k && phi[i] + 1 == n) phi[i++] = 0;
    if (i == k) return;
    ++phi[i];
  }
}

bool is_hom(const Hypergraph& f, const std::set<std::vector<Vertex>>& host, const std::vector<Vertex>& phi) {
  std::vector<Vertex> img;
  for (std::size_t id = 0; id < f.edge_count(); ++id) {
    img.clear();
    for (Vertex v : f.edge(static_cast<EdgeId>(id))) img.push_back(phi[v]);
    std::sort(img.begin(), img.end());
    if (!host.count(img)) return false;
  }
  return true;
}

bool injective(const std::vector<Vertex>& phi) {
  std::vector<Vertex> s = phi;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

BigInt brute_hom(const Hypergraph& f, const Hypergraph& h, const OracleBudget& budget) {
  check_size(f.vertex_count(), budget.max_pattern_vertices, "pattern vertex count");
  check_size(h.vertex_count(), budget.max_host_vertices, "host vertex count");
  if (f.uniformity() != h.uniformity()) throw PreconditionError("uniformity mismatch");
  const auto host = edge_set(h);
  BigInt count = 0;
  for_each_map(f.vertex_count(), h.vertex_count(), [&](const std::vector<Vertex>& phi) {
    if (is_hom(f, host, phi)) ++count;
  });
  return count;
}

BigInt brute_copies(const Hypergraph& f, const Hypergraph& h, const OracleBudget& budget) {
  check_size(f.vertex_count(), budget.max_pattern_vertices, "pattern vertex count");
  check_size(h.vertex_count(), budget.max_host_vertices, "host vertex count");
  if (f.uniformity() != h.uniformity()) throw PreconditionError("uniformity mismatch");
  const auto host = edge_set(h);
  BigInt count = 0;
  for_each_map(f.vertex_count(), h.vertex_count(), [&](const std::vector<Vertex>& phi) {
    if (injective(phi) && is_hom(f, host, phi)) ++count;
  });
  return count;
}

std::optional<std::size_t> brute_berge_girth(const Hypergraph& h, const OracleBudget& budget) {
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  check_size(std::min(n, m), budget.max_sequence_length, "longest possible Berge cycle");
  auto contains = [&](std::size_t id, Vertex v) {
    const auto e = h.edge(static_cast<EdgeId>(id));
    return std::find(e.begin(), e.end(), v) != e.end();
  };
  std::vector<Vertex> vs;
  std::vector<std::size_t> es;
  // vs[0..i] and es[0..i-1] chosen; extend to length k.
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (vs.size() == k) {
      for (std::size_t id = 0; id < m; ++id) {
        if (std::find(es.begin(), es.end(), id) != es.end()) continue;
        if (contains(id, vs.back()) && contains(id, vs.front())) return true;
      }
      return false;
    }
    for (std::size_t id = 0; id < m; ++id) {
      if (std::find(es.begin(), es.end(), id) != es.end() || !contains(id, vs.back())) continue;
      for (Vertex u : h.edge(static_cast<EdgeId>(id))) {
        if (std::find(vs.begin(), vs.end(), u) != vs.end()) continue;
        vs.push_back(u);
        es.push_back(id);
        const bool found = self(self, k);
        vs.pop_back();
        es.pop_back();
        if (found) return true;
      }
    }
    return false;
  };
  for (std::size_t k = 2; k <= std::min(n, m); ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      vs.assign(1, static_cast<Vertex>(v));
      es.clear();
      if (search(search, k)) return k;
    }
  }
  return std::nullopt;
}

BigInt brute_automorphisms(const Hypergraph& f, const OracleBudget& budget) {
  check_size(f.vertex_count(), budget.max_pattern_vertices, "vertex count");
  const auto edges = edge_set(f);
  std::vector<Vertex> perm(f.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  BigInt count = 0;
  do {
    bool ok = true;
    for (const auto& e : edges) {
      std::vector<Vertex> img;
      for (Vertex v : e) img.push_back(perm[v]);
      std::sort(img.begin(), img.end());
      if (!edges.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

BigInt brute_linear_trees(const Hypergraph& h, std::size_t max_edges, const OracleBudget& budget) {
  const std::size_t m = h.edge_count();
  check_size(m, 24, "edge count");
  check_size(h.vertex_count(), 64, "vertex count");
  BigInt count = h.vertex_count();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k > max_edges) continue;
    std::vector<std::size_t> chosen;
    std::set<Vertex> verts;
    std::size_t rank = 0;
    for (std::size_t id = 0; id < m; ++id) {
      if (!(mask >> id & 1U)) continue;
      chosen.push_back(id);
      for (Vertex v : h.edge(static_cast<EdgeId>(id))) verts.insert(v);
      rank += h.uniformity() - 1;
    }
    if (rank + 1 != verts.size()) continue;
    // connectivity by repeated merging from the first edge
    std::set<Vertex> reached(h.edge(static_cast<EdgeId>(chosen[0])).begin(), h.edge(static_cast<EdgeId>(chosen[0])).end());
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto id : chosen) {
        const auto e = h.edge(static_cast<EdgeId>(id));
        const bool touches = std::any_of(e.begin(), e.end(), [&](Vertex v) { return reached.count(v) > 0; });
        const bool inside = std::all_of(e.begin(), e.end(), [&](Vertex v) { return reached.count(v) > 0; });
        if (touches && !inside) {
          reached.insert(e.begin(), e.end());
          grew = true;
        }
      }
    }
    if (reached.size() == verts.size()) ++count;
  }
  (void)budget;
  return count;
}

std::size_t brute_even_cycles(const SimpleGraph& g, unsigned half_length, const OracleBudget& budget) {
  const std::size_t len = 2 * static_cast<std::size_t>(half_length);
  check_size(g.vertex_count(), 16, "graph vertex count");
  check_size(len, budget.max_sequence_length, "cycle length");
  std::size_t closed = 0;
  std::vector<Vertex> seq;
  auto extend = [&](auto&& self) -> void {
    if (seq.size() == len) {
      if (g.adjacent(seq.back(), seq.front())) ++closed;
      return;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (std::find(seq.begin(), seq.end(), static_cast<Vertex>(v)) != seq.end()) continue;
      if (!seq.empty() && !g.adjacent(seq.back(), static_cast<Vertex>(v))) continue;
      seq.push_back(static_cast<Vertex>(v));
      self(self);
      seq.pop_back();
    }
  };
  extend(extend);
  return closed / (2 * len);
}

std::size_t brute_codegree(const Hypergraph& h, std::span<const Vertex> subset) {
  std::size_t count = 0;
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    const auto e = h.edge(static_cast<EdgeId>(id));
    if (std::all_of(subset.begin(), subset.end(), [&](Vertex v) { return std::find(e.begin(), e.end(), v) != e.end(); }))
      ++count;
  }
  return count;
}

bool brute_is_linear_cycle(const std::vector<std::vector<Vertex>>& edges, unsigned r) {
  const std::size_t k = edges.size();
  if (k < 3) return false;
  std::set<Vertex> verts;
  for (const auto& e : edges) {
    std::set<Vertex> s(e.begin(), e.end());
    if (s.size() != r || e.size() != r) return false;
    verts.insert(e.begin(), e.end());
  }
  if (verts.size() != (r - 1) * k) return false;
  std::vector<std::vector<std::size_t>> meets(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::size_t common = 0;
      for (Vertex v : edges[a]) common += std::count(edges[b].begin(), edges[b].end(), v);
      if (common > 1) return false;
      if (common == 1) {
        meets[a].push_back(b);
        meets[b].push_back(a);
      }
    }
  }
  for (const auto& m : meets)
    if (m.size() != 2) return false;
  std::vector<char> seen(k, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto a = stack.back();
    stack.pop_back();
    for (auto b : meets[a]) {
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached == k;
}

std::size_t brute_transversal_edges(const Hypergraph& h, std::span<const unsigned> classes) {
  std::size_t count = 0;
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    std::set<unsigned> hit;
    for (Vertex v : h.edge(static_cast<EdgeId>(id))) hit.insert(classes[v]);
    if (hit.size() == h.uniformity()) ++count;
  }
  return count;
}

}  // namespace hypersat::oracle

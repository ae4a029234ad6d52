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


#include "hypersat/counting.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace hypersat {

namespace {

constexpr Vertex kUnset = ~Vertex{0};

struct Step {
  EdgeId edge = 0;
  std::vector<Vertex> placed;
  std::vector<Vertex> fresh;  // constrained vertices first, then free ones
  unsigned free_count = 0;    // trailing fresh vertices used by no later step
};

void require_same_uniformity(const Hypergraph& f, const Hypergraph& h) {
  if (f.uniformity() != h.uniformity()) {
    throw PreconditionError("uniformity mismatch: pattern is " + std::to_string(f.uniformity()) +
                            "-uniform, host is " + std::to_string(h.uniformity()) + "-uniform");
  }
  if (f.uniformity() > 64) throw PreconditionError("uniformity above 64 is not supported");
}

// Orders the given pattern edges so that each edge shares as many vertices as
// possible with earlier ones; ties go to the lowest id.
std::vector<Step> plan(const Hypergraph& f, const std::vector<EdgeId>& edges, bool allow_free) {
  std::vector<char> placed(f.vertex_count(), 0), done(edges.size(), 0);
  std::vector<EdgeId> order;
  for (std::size_t round = 0; round < edges.size(); ++round) {
    std::size_t best = edges.size();
    int best_score = -1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (done[i]) continue;
      int score = 0;
      for (Vertex v : f.edge(edges[i])) score += placed[v];
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    done[best] = 1;
    order.push_back(edges[best]);
    for (Vertex v : f.edge(edges[best])) placed[v] = 1;
  }

  std::vector<std::size_t> last_use(f.vertex_count(), 0);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (Vertex v : f.edge(order[k])) last_use[v] = k;

  std::fill(placed.begin(), placed.end(), 0);
  std::vector<Step> steps;
  for (std::size_t k = 0; k < order.size(); ++k) {
    Step s;
    s.edge = order[k];
    std::vector<Vertex> free;
    for (Vertex v : f.edge(order[k])) {
      if (placed[v]) {
        s.placed.push_back(v);
      } else if (allow_free && last_use[v] == k) {
        free.push_back(v);
      } else {
        s.fresh.push_back(v);
      }
    }
    s.free_count = static_cast<unsigned>(free.size());
    s.fresh.insert(s.fresh.end(), free.begin(), free.end());
    for (Vertex v : f.edge(order[k])) placed[v] = 1;
    steps.push_back(std::move(s));
  }
  return steps;
}

std::vector<std::vector<EdgeId>> edge_components(const Hypergraph& f) {
  std::vector<std::size_t> parent(f.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t id = 0; id < f.edge_count(); ++id) {
    const auto e = f.edge(static_cast<EdgeId>(id));
    for (Vertex v : e) parent[find(v)] = find(e[0]);
  }
  std::unordered_map<std::size_t, std::size_t> index;
  std::vector<std::vector<EdgeId>> out;
  for (std::size_t id = 0; id < f.edge_count(); ++id) {
    const auto root = find(f.edge(static_cast<EdgeId>(id))[0]);
    auto [it, fresh] = index.emplace(root, out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(static_cast<EdgeId>(id));
  }
  return out;
}

std::vector<Vertex> isolated_vertices(const Hypergraph& f) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < f.vertex_count(); ++v)
    if (f.degree(static_cast<Vertex>(v)) == 0) out.push_back(static_cast<Vertex>(v));
  return out;
}

class Engine {
 public:
  using Visitor = std::function<void(std::span<const Vertex>)>;

  Engine(const Hypergraph& f, const Hypergraph& h, const std::vector<Step>& steps, bool injective,
         const Visitor* visit, std::vector<Vertex> isolated)
      : f_(f),
        h_(h),
        steps_(steps),
        injective_(injective),
        visit_(visit),
        isolated_(std::move(isolated)),
        image_(f.vertex_count(), kUnset),
        used_(injective ? h.vertex_count() : 0, 0) {}

  // Runs the search with the first level's host edges drawn from `next`.
  void run(std::atomic<std::size_t>& next) {
    if (steps_.empty()) {
      leaf();
      return;
    }
    const std::size_t m = h_.edge_count();
    for (std::size_t id = next++; id < m; id = next++) try_edge(0, static_cast<EdgeId>(id));
  }

  std::uint64_t count() const { return count_; }

 private:
  void descend(std::size_t k) {
    if (k == steps_.size()) {
      leaf();
      return;
    }
    const Step& s = steps_[k];
    if (s.placed.empty()) {
      for (std::size_t id = 0; id < h_.edge_count(); ++id) try_edge(k, static_cast<EdgeId>(id));
      return;
    }
    if (s.placed.size() >= 2) {
      const Vertex a = image_[s.placed[0]];
      const Vertex b = image_[s.placed[1]];
      if (a == b) return;
      for (EdgeId id : h_.pair_edges(a, b)) try_edge(k, id);
      return;
    }
    for (EdgeId id : h_.incident(image_[s.placed[0]])) try_edge(k, id);
  }

  void try_edge(std::size_t k, EdgeId id) {
    const Step& s = steps_[k];
    const auto e = h_.edge(id);
    std::uint64_t taken = 0;
    for (Vertex p : s.placed) {
      const Vertex target = image_[p];
      unsigned pos = 0;
      while (pos < e.size() && e[pos] != target) ++pos;
      if (pos == e.size() || (taken >> pos & 1U)) return;
      taken |= std::uint64_t{1} << pos;
    }
    if (visit_ == nullptr && k + 1 == steps_.size()) {
      // Last edge: count the completions instead of enumerating them.
      std::uint64_t open = 0;
      for (unsigned pos = 0; pos < e.size(); ++pos)
        if (!(taken >> pos & 1U) && !(injective_ && used_[e[pos]])) ++open;
      const std::size_t fixed = s.fresh.size() - s.free_count;
      std::uint64_t ways = 1;
      for (std::size_t i = 0; i < fixed; ++i) ways *= open < i ? 0 : open - i;
      count_ += ways;
      return;
    }
    assign(k, e, taken, 0);
  }

  void assign(std::size_t k, std::span<const Vertex> e, std::uint64_t taken, std::size_t j) {
    const Step& s = steps_[k];
    if (j + s.free_count == s.fresh.size()) {
      descend(k + 1);
      return;
    }
    const Vertex pv = s.fresh[j];
    for (unsigned pos = 0; pos < e.size(); ++pos) {
      if (taken >> pos & 1U) continue;
      const Vertex hv = e[pos];
      if (injective_ && used_[hv]) continue;
      image_[pv] = hv;
      if (injective_) used_[hv] = 1;
      assign(k, e, taken | (std::uint64_t{1} << pos), j + 1);
      if (injective_) used_[hv] = 0;
    }
    image_[pv] = kUnset;
  }

  void leaf() {
    if (visit_ == nullptr) {
      ++count_;
      return;
    }
    place_isolated(0);
  }

  void place_isolated(std::size_t i) {
    if (i == isolated_.size()) {
      (*visit_)(image_);
      return;
    }
    for (std::size_t hv = 0; hv < h_.vertex_count(); ++hv) {
      if (injective_ && used_[hv]) continue;
      image_[isolated_[i]] = static_cast<Vertex>(hv);
      if (injective_) used_[hv] = 1;
      place_isolated(i + 1);
      if (injective_) used_[hv] = 0;
    }
    image_[isolated_[i]] = kUnset;
  }

  const Hypergraph& f_;
  const Hypergraph& h_;
  const std::vector<Step>& steps_;
  bool injective_;
  const Visitor* visit_;
  std::vector<Vertex> isolated_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::uint64_t count_ = 0;
};

BigInt run_count(const Hypergraph& f, const Hypergraph& h, const std::vector<Step>& steps, bool injective,
                 unsigned threads) {
  if (steps.empty()) return 1;
  // Free vertices contribute a factor independent of the branch.
  BigInt weight = 1;
  for (const Step& s : steps)
    for (unsigned i = 2; i <= s.free_count; ++i) weight *= i;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, h.edge_count()))));
  std::atomic<std::size_t> next{0};
  if (threads == 1) {
    Engine engine(f, h, steps, injective, nullptr, {});
    engine.run(next);
    return weight * engine.count();
  }
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Engine engine(f, h, steps, injective, nullptr, {});
      engine.run(next);
      partial[t] = engine.count();
    });
  }
  for (auto& th : pool) th.join();
  BigInt total = 0;
  for (auto c : partial) total += c;
  return weight * total;
}

}  // namespace

HomCount hom_count(const Hypergraph& f, const Hypergraph& h, unsigned threads) {
  require_same_uniformity(f, h);
  BigInt value = 1;
  for (const auto& component : edge_components(f)) {
    value *= run_count(f, h, plan(f, component, true), false, threads);
    if (value == 0) break;
  }
  const auto iso = isolated_vertices(f).size();
  value *= ipow(BigInt(h.vertex_count()), static_cast<unsigned>(iso));
  return {value, f.vertex_count(), h.vertex_count()};
}

HomCount labeled_copy_count(const Hypergraph& f, const Hypergraph& h, unsigned threads) {
  require_same_uniformity(f, h);
  if (f.vertex_count() > h.vertex_count()) return {0, f.vertex_count(), h.vertex_count()};
  std::vector<EdgeId> all(f.edge_count());
  std::iota(all.begin(), all.end(), EdgeId{0});
  BigInt value = run_count(f, h, plan(f, all, false), true, threads);
  const auto iso = isolated_vertices(f).size();
  std::size_t avail = h.vertex_count() - (f.vertex_count() - iso);
  for (std::size_t i = 0; i < iso; ++i) value *= avail - i;
  return {value, f.vertex_count(), h.vertex_count()};
}

BigInt automorphism_count(const Hypergraph& f) { return labeled_copy_count(f, f).value; }

void for_each_homomorphism(const Hypergraph& f, const Hypergraph& h, bool injective,
                           const std::function<void(std::span<const Vertex>)>& visit) {
  require_same_uniformity(f, h);
  std::vector<EdgeId> all(f.edge_count());
  std::iota(all.begin(), all.end(), EdgeId{0});
  const auto steps = plan(f, all, false);
  Engine engine(f, h, steps, injective, &visit, isolated_vertices(f));
  std::atomic<std::size_t> next{0};
  engine.run(next);
}

// Shortest cycle of the vertex/edge incidence graph, found by breadth-first
// search from every vertex node; a Berge cycle of length k is an incidence
// cycle of length 2k.
GirthReport berge_girth(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  const std::size_t nodes = n + m;
  constexpr std::size_t kUnseen = ~std::size_t{0};
  std::vector<std::size_t> dist(nodes, kUnseen), parent(nodes, kUnseen), touched;
  std::size_t best = kUnseen;  // incidence cycle length
  std::size_t best_root = 0, best_a = 0, best_b = 0;
  std::vector<std::size_t> queue;

  auto neighbors = [&](std::size_t x, auto&& fn) {
    if (x < n) {
      for (EdgeId id : h.incident(static_cast<Vertex>(x))) fn(n + id);
    } else {
      for (Vertex v : h.edge(static_cast<EdgeId>(x - n))) fn(static_cast<std::size_t>(v));
    }
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (h.degree(static_cast<Vertex>(root)) < 2) continue;
    for (auto x : touched) dist[x] = parent[x] = kUnseen;
    touched.clear();
    queue.clear();
    dist[root] = 0;
    touched.push_back(root);
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto x = queue[head];
      if (best != kUnseen && 2 * dist[x] >= best) break;
      neighbors(x, [&](std::size_t y) {
        if (y == parent[x]) return;
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          touched.push_back(y);
          queue.push_back(y);
        } else if (dist[x] + dist[y] + 1 < best) {
          best = dist[x] + dist[y] + 1;
          best_root = root;
          best_a = x;
          best_b = y;
        }
      });
    }
    if (best == 4) break;
  }

  GirthReport report;
  if (best == kUnseen) return report;

  // Rebuild both tree paths for the recorded closing pair.
  for (auto x : touched) dist[x] = parent[x] = kUnseen;
  touched.clear();
  queue.assign(1, best_root);
  dist[best_root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    neighbors(x, [&](std::size_t y) {
      if (dist[y] == kUnseen) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      }
    });
  }
  std::vector<std::size_t> path_a, path_b;
  for (auto x = best_a; x != kUnseen; x = parent[x]) path_a.push_back(x);
  for (auto x = best_b; x != kUnseen; x = parent[x]) path_b.push_back(x);
  std::reverse(path_a.begin(), path_a.end());  // root ... a
  std::vector<std::size_t> cycle = path_a;
  cycle.insert(cycle.end(), path_b.begin(), path_b.end() - 1);  // b ... child of root
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto x = cycle[i];
    if (x < n) {
      report.witness_vertices.push_back(static_cast<Vertex>(x));
      report.witness_edges.push_back(static_cast<EdgeId>(cycle[(i + 1) % cycle.size()] - n));
    }
  }
  if (!is_berge_cycle(h, report.witness_vertices, report.witness_edges) || report.witness_vertices.size() * 2 != best) {
    throw Error("internal error: girth witness failed verification");
  }
  report.girth = best / 2;
  return report;
}

bool is_berge_cycle(const Hypergraph& h, std::span<const Vertex> vertices, std::span<const EdgeId> edges) {
  const auto k = vertices.size();
  if (k < 2 || edges.size() != k) return false;
  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  std::vector<EdgeId> es(edges.begin(), edges.end());
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (edges[i] >= h.edge_count() || vertices[i] >= h.vertex_count()) return false;
    const auto e = h.edge(edges[i]);
    const auto a = vertices[i];
    const auto b = vertices[(i + 1) % k];
    if (std::find(e.begin(), e.end(), a) == e.end() || std::find(e.begin(), e.end(), b) == e.end()) return false;
  }
  return true;
}

namespace {

// ESU-style enumeration of connected edge sets in the edge-adjacency graph,
// pruned to sets that stay linear trees.
class TreeWalker {
 public:
  TreeWalker(const Hypergraph& h, std::size_t max_edges, const std::function<void(std::span<const EdgeId>)>& visit)
      : h_(h),
        max_edges_(max_edges),
        visit_(visit),
        by_size_(max_edges + 1, 0),
        vertex_mult_(h.vertex_count(), 0),
        blocked_(h.edge_count(), 0) {}

  void run() {
    by_size_[0] = h_.vertex_count();
    if (max_edges_ == 0) return;
    for (std::size_t root = 0; root < h_.edge_count(); ++root) {
      root_ = static_cast<EdgeId>(root);
      add(root_);
      std::vector<EdgeId> ext;
      for (EdgeId nb : neighbors(root_))
        if (nb > root_) ext.push_back(nb);
      block(root_, +1);
      extend(ext);
      block(root_, -1);
      remove(root_);
    }
  }

  const std::vector<std::uint64_t>& by_size() const { return by_size_; }

 private:
  std::vector<EdgeId> neighbors(EdgeId id) const {
    std::vector<EdgeId> out;
    for (Vertex v : h_.edge(id))
      for (EdgeId nb : h_.incident(v))
        if (nb != id) out.push_back(nb);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Marks id and its neighbors as belonging to the closed neighborhood.
  void block(EdgeId id, int delta) {
    blocked_[id] += delta;
    for (EdgeId nb : neighbors(id)) blocked_[nb] += delta;
  }

  void add(EdgeId id) {
    tree_.push_back(id);
    for (Vertex v : h_.edge(id)) ++vertex_mult_[v];
    ++by_size_[tree_.size()];
    if (visit_) visit_(tree_);
  }

  void remove(EdgeId id) {
    tree_.pop_back();
    for (Vertex v : h_.edge(id)) --vertex_mult_[v];
  }

  bool attaches_once(EdgeId id) const {
    int hits = 0;
    for (Vertex v : h_.edge(id)) hits += vertex_mult_[v] > 0;
    return hits == 1;
  }

  void extend(std::vector<EdgeId> ext) {
    if (tree_.size() == max_edges_) return;
    while (!ext.empty()) {
      const EdgeId w = ext.back();
      ext.pop_back();
      if (!attaches_once(w)) continue;
      std::vector<EdgeId> next = ext;
      for (EdgeId u : neighbors(w)) {
        if (u > root_ && blocked_[u] == 0) next.push_back(u);
      }
      add(w);
      block(w, +1);
      extend(std::move(next));
      block(w, -1);
      remove(w);
    }
  }

  const Hypergraph& h_;
  std::size_t max_edges_;
  const std::function<void(std::span<const EdgeId>)>& visit_;
  std::vector<std::uint64_t> by_size_;
  std::vector<int> vertex_mult_;
  std::vector<int> blocked_;
  std::vector<EdgeId> tree_;
  EdgeId root_ = 0;
};

}  // namespace

TreeCount enumerate_linear_trees(const Hypergraph& h, std::size_t max_edges,
                                 const std::function<void(std::span<const EdgeId>)>& visit) {
  if (!h.is_linear()) throw PreconditionError("enumerate_linear_trees needs a linear hypergraph");
  TreeWalker walker(h, max_edges, visit);
  walker.run();
  TreeCount out;
  for (auto c : walker.by_size()) {
    out.by_size.emplace_back(c);
    out.total += c;
  }
  const BigInt base = BigInt(1 + max_edges * (h.uniformity() - 1)) * std::max<std::size_t>(h.max_degree(), 1);
  out.bound = BigInt(h.vertex_count()) * (max_edges + 1) * ipow(base, static_cast<unsigned>(max_edges));
  return out;
}

ImageProfile homomorphic_image_profile(const Hypergraph& f, const Hypergraph& h) {
  std::unordered_map<std::vector<Vertex>, std::pair<bool, std::size_t>, SubsetHash> cache;
  std::map<std::pair<bool, std::size_t>, std::uint64_t> counts;
  std::vector<Vertex> key;
  for_each_homomorphism(f, h, false, [&](std::span<const Vertex> image) {
    key.assign(image.begin(), image.end());
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = cache.find(key);
    if (it == cache.end()) {
      const auto sub = induced_subgraph(h, key).graph;
      std::size_t rank = 0;
      for (std::size_t id = 0; id < sub.edge_count(); ++id) rank += sub.uniformity() - 1;
      bool connected = true;
      if (sub.vertex_count() > 1) {
        const auto layers = distance_layers(sub, 0, sub.vertex_count());
        connected = 1 + std::accumulate(layers.begin(), layers.end(), std::size_t{0}) == sub.vertex_count();
      }
      const bool tree = connected && rank + 1 == sub.vertex_count();
      it = cache.emplace(key, std::make_pair(tree, sub.edge_count())).first;
    }
    ++counts[it->second];
  });
  ImageProfile out;
  for (const auto& [k, c] : counts) {
    out.counts[k] = c;
    out.total += c;
  }
  return out;
}

EvenCycles even_cycle_enumerate(const SimpleGraph& g, unsigned half_length, std::size_t budget) {
  if (half_length < 2) throw PreconditionError("even cycles need L >= 2");
  const std::size_t len = 2 * static_cast<std::size_t>(half_length);
  EvenCycles out;
  std::vector<Vertex> path;
  std::vector<char> on_path(g.vertex_count(), 0);
  bool full = false;

  auto dfs = [&](auto&& self, Vertex start) -> void {
    const Vertex tail = path.back();
    if (path.size() == len) {
      if (g.adjacent(tail, start) && path[1] < path.back()) {
        if (out.cycles.size() == budget) {
          full = true;
          return;
        }
        out.cycles.push_back(path);
      }
      return;
    }
    for (Vertex nb : g.neighbors(tail)) {
      if (full) return;
      if (nb <= start || on_path[nb]) continue;
      if (path.size() + 1 == len && !g.adjacent(nb, start)) continue;
      path.push_back(nb);
      on_path[nb] = 1;
      self(self, start);
      on_path[nb] = 0;
      path.pop_back();
    }
  };

  for (std::size_t s = 0; s < g.vertex_count() && !full; ++s) {
    path.assign(1, static_cast<Vertex>(s));
    on_path[s] = 1;
    dfs(dfs, static_cast<Vertex>(s));
    on_path[s] = 0;
  }
  out.complete = !full;
  return out;
}

}  // namespace hypersat

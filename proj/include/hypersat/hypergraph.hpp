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

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hypersat/common.hpp"

namespace hypersat {

/// Hash for sorted vertex tuples used as shadow keys.
struct SubsetHash {
  std::size_t operator()(const std::vector<Vertex>& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : s) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using ShadowCounts = std::unordered_map<std::vector<Vertex>, std::size_t, SubsetHash>;

namespace detail {
struct CodegreeCache;
}

/// An r-uniform hypergraph on vertices [0, n) with set semantics.
///
/// Edges are stored as strictly increasing r-tuples in lexicographic order,
/// so two hypergraphs with the same edge set compare equal. Values are
/// immutable; every operation that changes the edge set returns a new value.
/// Codegree indices over pairs and (r-1)-sets are built lazily on first use
/// and shared between copies; concurrent readers are safe.
class Hypergraph {
 public:
  /// Edgeless 2-uniform hypergraph on zero vertices.
  Hypergraph();

  /// Validating constructor; see validate().
  Hypergraph(unsigned r, std::size_t n, std::vector<std::vector<Vertex>> edges);

  static Hypergraph empty(unsigned r, std::size_t n);

  unsigned uniformity() const { return r_; }
  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return r_ == 0 ? 0 : flat_.size() / r_; }
  bool edgeless() const { return flat_.empty(); }

  std::span<const Vertex> edge(EdgeId id) const {
    return {flat_.data() + static_cast<std::size_t>(id) * r_, r_};
  }
  std::span<const EdgeId> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  /// Id of the edge with exactly these vertices (any order), if present.
  std::optional<EdgeId> find_edge(std::span<const Vertex> vertices) const;
  bool contains_edge(std::span<const Vertex> vertices) const { return find_edge(vertices).has_value(); }

  /// Ids of the edges containing both a and b (a != b), ascending.
  std::span<const EdgeId> pair_edges(Vertex a, Vertex b) const;

  /// Number of edges containing the vertex set X. Requires |X| < r.
  std::size_t codegree(std::span<const Vertex> subset) const;

  /// Largest codegree over j-sets contained in some edge; 0 when edgeless.
  std::size_t max_codegree(unsigned j) const;

  /// Codegree of every k-shadow (k-set inside some edge).
  ShadowCounts shadow_counts(unsigned k) const;

  /// No two edges share two or more vertices.
  bool is_linear() const;

  std::vector<std::vector<Vertex>> edge_list() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.flat_ == b.flat_;
  }

 private:
  friend Hypergraph validate(const std::vector<std::vector<Vertex>>&, std::size_t, unsigned);
  struct Trusted {};
  Hypergraph(Trusted, unsigned r, std::size_t n, std::vector<Vertex> flat);
  void build_incidence();
  const detail::CodegreeCache& cache() const;

  unsigned r_ = 2;
  std::size_t n_ = 0;
  std::vector<Vertex> flat_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
  std::shared_ptr<detail::CodegreeCache> cache_;
};

/// Builds a hypergraph from raw tuples: vertex order inside an edge is
/// normalized and duplicate edges collapse. Throws PreconditionError on
/// r < 2, an edge of the wrong size, a repeated vertex, or a vertex >= n.
Hypergraph validate(const std::vector<std::vector<Vertex>>& raw_edges, std::size_t n, unsigned r);

/// Hypergraph with a vertex relabeling back to the graph it was cut from:
/// vertex i of `graph` is vertex `to_original[i]` of the source.
struct Subhypergraph {
  Hypergraph graph;
  std::vector<Vertex> to_original;
};

/// Simple undirected graph on [0, n) with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Loops are rejected; parallel edges collapse.
  SimpleGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex a, Vertex b) const;
  /// Edges as (min, max) pairs in lexicographic order.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// r-partite hypergraph: every edge meets each of the r classes exactly once.
class PartitionedHypergraph {
 public:
  PartitionedHypergraph() = default;
  /// Throws PreconditionError unless classes has one entry per vertex, each
  /// in [0, r), and every edge is transversal.
  PartitionedHypergraph(Hypergraph graph, std::vector<unsigned> classes);

  const Hypergraph& graph() const { return graph_; }
  const std::vector<unsigned>& classes() const { return classes_; }
  unsigned class_of(Vertex v) const { return classes_[v]; }
  unsigned class_count() const { return graph_.uniformity(); }
  std::vector<Vertex> members(unsigned c) const;
  /// Vertices of class c that lie in at least one edge.
  std::vector<Vertex> live_members(unsigned c) const;

  /// Vertex of edge `id` lying in class c.
  Vertex vertex_in_class(EdgeId id, unsigned c) const;

 private:
  Hypergraph graph_;
  std::vector<unsigned> classes_;
};

/// Bipartite 2-shadow between classes i and j on the full vertex range.
SimpleGraph pair_shadow_graph(const PartitionedHypergraph& p, unsigned i, unsigned j);

/// Edges with every vertex in S, vertices renumbered densely in increasing
/// original order.
Subhypergraph induced_subgraph(const Hypergraph& h, std::span<const Vertex> subset);

/// Largest sub-hypergraph with minimum degree >= d_min; the result is the
/// induced subgraph on the surviving vertices.
Subhypergraph peel_min_degree(const Hypergraph& h, std::size_t d_min);

/// m_1..m_depth: number of vertices at path distance i from x.
std::vector<std::size_t> distance_layers(const Hypergraph& h, Vertex x, std::size_t depth);

}  // namespace hypersat

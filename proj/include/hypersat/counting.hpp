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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypersat/hypergraph.hpp"

namespace hypersat {

struct HomCount {
  BigInt value;
  std::size_t pattern_vertices = 0;
  std::size_t host_vertices = 0;
};

/// Number of maps V(F) -> V(H) sending every edge of F onto an edge of H.
/// `threads` > 1 splits the first backtracking level across workers.
HomCount hom_count(const Hypergraph& f, const Hypergraph& h, unsigned threads = 1);

/// Injective homomorphisms (labeled copies of F in H).
HomCount labeled_copy_count(const Hypergraph& f, const Hypergraph& h, unsigned threads = 1);

/// Number of vertex permutations of F preserving its edge set.
BigInt automorphism_count(const Hypergraph& f);

/// Calls `visit` with the image of every vertex of F, once per homomorphism
/// (or per injective homomorphism). The span is only valid during the call.
void for_each_homomorphism(const Hypergraph& f, const Hypergraph& h, bool injective,
                           const std::function<void(std::span<const Vertex>)>& visit);

struct GirthReport {
  std::optional<std::size_t> girth;  // nullopt: Berge-acyclic
  std::vector<Vertex> witness_vertices;
  std::vector<EdgeId> witness_edges;  // {v_i, v_{i+1}} lies in witness_edges[i]
};

GirthReport berge_girth(const Hypergraph& h);

/// True iff the vertices and edges form a Berge cycle of their common length.
bool is_berge_cycle(const Hypergraph& h, std::span<const Vertex> vertices, std::span<const EdgeId> edges);

struct TreeCount {
  BigInt total;                 // single vertices included
  std::vector<BigInt> by_size;  // by_size[k]: trees with k edges
  BigInt bound;                 // n (L+1) ((1 + L(r-1)) max(D, 1))^L
};

/// Counts connected Berge-acyclic edge sets with at most max_edges edges in
/// a linear hypergraph; every vertex counts as a tree with no edges.
/// `visit`, when set, receives the edge ids of each tree with >= 1 edge.
TreeCount enumerate_linear_trees(const Hypergraph& h, std::size_t max_edges,
                                 const std::function<void(std::span<const EdgeId>)>& visit = {});

/// Homomorphism counts keyed by (image induces a linear tree, edges induced
/// on the image).
struct ImageProfile {
  std::map<std::pair<bool, std::size_t>, BigInt> counts;
  BigInt total;
};

ImageProfile homomorphic_image_profile(const Hypergraph& f, const Hypergraph& h);

struct EvenCycles {
  std::vector<std::vector<Vertex>> cycles;  // each starts at its minimum vertex
  bool complete = true;                     // false when the budget cut enumeration short
};

/// Distinct cycles of length 2L in a simple graph, in lexicographic order of
/// their canonical vertex sequence, up to `budget` of them.
EvenCycles even_cycle_enumerate(const SimpleGraph& g, unsigned half_length, std::size_t budget);

}  // namespace hypersat

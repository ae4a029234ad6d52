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
#include <vector>

#include "hypersat/hypergraph.hpp"
#include "hypersat/rng.hpp"

namespace hypersat {

/// K^r_r: r vertices, one edge.
Hypergraph single_edge(unsigned r);

/// Linear cycle C^r_L on (r-1)L vertices. Edge i is
/// {v_{(r-1)i}, ..., v_{(r-1)(i+1)}} with indices mod (r-1)L, so the hinge
/// vertices are the multiples of r-1.
Hypergraph linear_cycle(unsigned r, unsigned length);

/// Linear path with L edges on (r-1)L+1 vertices.
Hypergraph linear_path(unsigned r, unsigned length);

/// All r-subsets of [0, n).
Hypergraph complete_hypergraph(unsigned r, std::size_t n);

/// Complete r-partite r-graph with r parts of size s; vertex v lies in
/// class v / s.
PartitionedHypergraph complete_partite(unsigned r, std::size_t s);

/// H[t]: vertex (v, i) becomes v*t + i.
Hypergraph blow_up(const Hypergraph& h, std::size_t t);

/// Set-semantics tensor product: vertex (x, y) becomes x*v(H2) + y, and
/// there is one edge per bijection between an edge of H1 and an edge of H2.
Hypergraph tensor_product(const Hypergraph& h1, const Hypergraph& h2);

/// Exactly m distinct r-sets, uniform without replacement.
Hypergraph random_uniform(std::size_t n, unsigned r, std::size_t m, RngSeed seed);

struct Percolation {
  Subhypergraph result;  // result.to_original lists the kept vertices
  std::size_t kept_vertices = 0;
  std::size_t surviving_edges = 0;
};

/// Keeps each vertex independently with probability p.
Percolation percolate_vertices(const Hypergraph& h, double p, RngSeed seed);

/// Random greedy insertion of r-sets, rejecting any candidate that would
/// close a Berge cycle shorter than g_min. The result's girth is re-checked
/// before returning.
Hypergraph greedy_high_girth(std::size_t n, unsigned r, unsigned g_min, std::size_t attempts, RngSeed seed);

/// The 12 lines of the affine plane of order 3; point (x, y) is 3x + y.
Hypergraph steiner_triple_9();

/// Binomial coefficient, saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace hypersat

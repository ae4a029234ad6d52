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

// Brute-force reference implementations. Nothing here calls into the
// counting engines; these only read edges through Hypergraph::edge().

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypersat/hypergraph.hpp"

namespace hypersat::oracle {

/// Hard caps; an oracle refuses larger inputs with BudgetExceeded.
struct OracleBudget {
  std::size_t max_pattern_vertices = 10;
  std::size_t max_host_vertices = 9;
  std::size_t max_sequence_length = 8;
};

/// Tries every map V(F) -> V(H).
BigInt brute_hom(const Hypergraph& f, const Hypergraph& h, const OracleBudget& budget = {});

/// Tries every map and keeps the injective homomorphisms.
BigInt brute_copies(const Hypergraph& f, const Hypergraph& h, const OracleBudget& budget = {});

/// Smallest k for which some sequence of k distinct vertices and k distinct
/// edges closes up; nullopt when none exists. Needs min(n, m) within
/// max_sequence_length so that every possible length is examined.
std::optional<std::size_t> brute_berge_girth(const Hypergraph& h, const OracleBudget& budget = {});

/// Vertex permutations preserving the edge set, by trying all n! of them.
BigInt brute_automorphisms(const Hypergraph& f, const OracleBudget& budget = {});

/// Edge subsets of size 1..max_edges that are connected and satisfy
/// sum(|e| - 1) = |V| - 1, plus one per vertex.
BigInt brute_linear_trees(const Hypergraph& h, std::size_t max_edges, const OracleBudget& budget = {});

/// Cycles of length 2L in a simple graph, from all closed vertex sequences
/// divided by the 4L rotations and reflections.
std::size_t brute_even_cycles(const SimpleGraph& g, unsigned half_length, const OracleBudget& budget = {});

/// Edges containing every vertex of X, by a full scan.
std::size_t brute_codegree(const Hypergraph& h, std::span<const Vertex> subset);

/// True iff the edges (given as vertex tuples) form a linear cycle: each edge
/// meets exactly two others, in one vertex each, and the edges are connected.
bool brute_is_linear_cycle(const std::vector<std::vector<Vertex>>& edges, unsigned r);

/// Edges hitting every class exactly once.
std::size_t brute_transversal_edges(const Hypergraph& h, std::span<const unsigned> classes);

}  // namespace hypersat::oracle

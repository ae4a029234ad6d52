#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "hypersat/constructions.hpp"
#include "hypersat/hypergraph.hpp"
#include "hypersat/oracles.hpp"
#include "support.hpp"

using namespace hypersat;

TEST_CASE("validate normalizes and deduplicates") {
  const auto one = validate({{0, 1, 2}}, 3, 3);
  CHECK(one.edge_count() == 1);
  for (Vertex v = 0; v < 3; ++v) CHECK(one.degree(v) == 1);

  const auto dup = validate({{2, 1, 0}, {0, 1, 2}}, 3, 3);
  CHECK(dup.edge_count() == 1);
  CHECK(dup == one);

  CHECK_THROWS_AS(validate({{0, 0, 1}}, 2, 3), PreconditionError);
  CHECK_THROWS_AS(validate({{0, 1, 3}}, 3, 3), PreconditionError);
  CHECK_THROWS_AS(validate({{0}}, 3, 1), PreconditionError);
  CHECK_THROWS_AS(validate({{0, 1}}, 3, 3), PreconditionError);
}

TEST_CASE("codegree") {
  const auto c33 = linear_cycle(3, 3);
  const std::vector<Vertex> hinge_pair{0, 1};
  CHECK(c33.codegree(hinge_pair) == 1);

  const auto e = single_edge(3);
  const std::vector<Vertex> x0{0};
  CHECK(e.codegree(x0) == 1);
  const auto e4 = Hypergraph(3, 4, {{0, 1, 2}});
  const std::vector<Vertex> x03{0, 3};
  CHECK(e4.codegree(x03) == 0);

  const std::vector<Vertex> whole{0, 1, 2};
  CHECK_THROWS_AS(e.codegree(whole), PreconditionError);
}

TEST_CASE("max_codegree") {
  CHECK(complete_hypergraph(3, 4).max_codegree(2) == 2);
  CHECK(single_edge(3).max_codegree(2) == 1);
  CHECK(Hypergraph::empty(3, 5).max_codegree(1) == 0);
  CHECK_THROWS_AS(single_edge(3).max_codegree(3), PreconditionError);
}

TEST_CASE("codegree agrees with a full scan and shadow sums") {
  for (unsigned r : {3U, 4U}) {
    for (const auto& h : test::small_corpus(r, 40, 11 + r)) {
      for (unsigned k = 1; k < r; ++k) {
        std::size_t sum = 0;
        for (const auto& [subset, c] : h.shadow_counts(k)) {
          CHECK(h.codegree(subset) == c);
          CHECK(oracle::brute_codegree(h, subset) == c);
          sum += c;
        }
        CHECK(sum == binomial(r, k) * h.edge_count());
      }
      std::size_t deg = 0;
      for (Vertex v = 0; v < h.vertex_count(); ++v) deg += h.degree(v);
      CHECK(deg == r * h.edge_count());
    }
  }
}

TEST_CASE("pair_shadow_graph") {
  const PartitionedHypergraph one(single_edge(3), {0, 1, 2});
  CHECK(pair_shadow_graph(one, 0, 1).edge_count() == 1);

  const PartitionedHypergraph two(Hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}}), {0, 1, 2, 2});
  CHECK(pair_shadow_graph(two, 0, 1).edge_count() == 1);
  CHECK(pair_shadow_graph(two, 0, 2).edge_count() == 2);

  const auto k222 = complete_partite(3, 2);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = i + 1; j < 3; ++j) CHECK(pair_shadow_graph(k222, i, j).edge_count() == 4);

  CHECK_THROWS_AS(pair_shadow_graph(k222, 1, 1), PreconditionError);
  CHECK_THROWS_AS(PartitionedHypergraph(single_edge(3), {0, 0, 1}), PreconditionError);
}

TEST_CASE("induced_subgraph") {
  const auto c33 = linear_cycle(3, 3);
  std::vector<Vertex> all(6);
  std::iota(all.begin(), all.end(), Vertex{0});
  CHECK(induced_subgraph(c33, all).graph == c33);
  CHECK(induced_subgraph(c33, {}).graph.edge_count() == 0);
  const auto e0 = c33.edge(0);
  const auto sub = induced_subgraph(c33, std::vector<Vertex>(e0.begin(), e0.end()));
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.to_original == std::vector<Vertex>(e0.begin(), e0.end()));
}

TEST_CASE("peel_min_degree") {
  const auto c33 = linear_cycle(3, 3);
  CHECK(peel_min_degree(c33, 0).graph == c33);
  const auto peeled = peel_min_degree(c33, 2);
  CHECK(peeled.graph.edge_count() == 0);
  CHECK(peeled.graph.vertex_count() == 0);
  CHECK(peel_min_degree(single_edge(3), 1).graph == single_edge(3));

  for (const auto& h : test::small_corpus(3, 40, 5)) {
    for (std::size_t d = 0; d <= 3; ++d) {
      const auto once = peel_min_degree(h, d);
      for (Vertex v = 0; v < once.graph.vertex_count(); ++v) CHECK(once.graph.degree(v) >= d);
      CHECK(peel_min_degree(once.graph, d).graph == once.graph);
    }
  }
}

TEST_CASE("distance_layers") {
  CHECK(distance_layers(single_edge(3), 0, 1) == std::vector<std::size_t>{2});
  const auto c33 = linear_cycle(3, 3);
  CHECK(distance_layers(c33, 0, 1) == std::vector<std::size_t>{4});
  CHECK(distance_layers(c33, 0, 2) == std::vector<std::size_t>{4, 1});
  CHECK(distance_layers(c33, 1, 1) == std::vector<std::size_t>{2});
  CHECK(distance_layers(Hypergraph::empty(3, 4), 2, 3) == std::vector<std::size_t>{0, 0, 0});
  CHECK_THROWS_AS(distance_layers(c33, 6, 1), PreconditionError);
}

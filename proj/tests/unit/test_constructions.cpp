#include <cmath>
#include <set>

#include "doctest.h"
#include "hypersat/constructions.hpp"
#include "hypersat/counting.hpp"
#include "hypersat/oracles.hpp"
#include "support.hpp"

using namespace hypersat;

TEST_CASE("named families") {
  CHECK(single_edge(3).vertex_count() == 3);
  CHECK(single_edge(4).edge_count() == 1);
  CHECK_THROWS_AS(single_edge(1), PreconditionError);

  const auto c33 = linear_cycle(3, 3);
  CHECK(c33.vertex_count() == 6);
  CHECK(c33.edge_count() == 3);
  for (EdgeId a = 0; a < 3; ++a) {
    for (EdgeId b = a + 1; b < 3; ++b) {
      std::size_t common = 0;
      for (Vertex v : c33.edge(a))
        for (Vertex u : c33.edge(b)) common += u == v;
      CHECK(common == 1);
    }
  }
  CHECK(linear_cycle(3, 5).vertex_count() == 10);
  CHECK(linear_cycle(3, 5).edge_count() == 5);
  CHECK(linear_cycle(4, 3).vertex_count() == 9);
  CHECK(oracle::brute_is_linear_cycle(linear_cycle(4, 4).edge_list(), 4));
  CHECK_THROWS_AS(linear_cycle(2, 3), PreconditionError);
  CHECK_THROWS_AS(linear_cycle(3, 1), PreconditionError);

  CHECK(linear_path(3, 1) == single_edge(3));
  CHECK(linear_path(3, 2).vertex_count() == 5);
  CHECK(linear_path(3, 2).edge_count() == 2);
  CHECK(linear_path(4, 3).vertex_count() == 10);
  CHECK_THROWS_AS(linear_path(3, 0), PreconditionError);

  CHECK(complete_hypergraph(3, 6).edge_count() == 20);
  CHECK(complete_partite(3, 4).graph().edge_count() == 64);
}

TEST_CASE("blow_up") {
  const auto b = blow_up(single_edge(3), 2);
  CHECK(b.vertex_count() == 6);
  CHECK(b.edge_count() == 8);
  CHECK(blow_up(linear_cycle(3, 3), 1) == linear_cycle(3, 3));
  const auto c = blow_up(linear_cycle(3, 3), 2);
  CHECK(c.vertex_count() == 12);
  CHECK(c.edge_count() == 24);
  CHECK_THROWS_AS(blow_up(single_edge(3), 0), PreconditionError);

  for (const auto& h : test::small_corpus(3, 20, 3)) {
    for (std::size_t t = 1; t <= 3; ++t) {
      const auto bt = blow_up(h, t);
      CHECK(bt.vertex_count() == h.vertex_count() * t);
      CHECK(bt.edge_count() == h.edge_count() * t * t * t);
    }
  }
}

TEST_CASE("tensor_product") {
  const auto t = tensor_product(single_edge(3), single_edge(3));
  CHECK(t.vertex_count() == 9);
  CHECK(t.edge_count() == 6);
  CHECK(tensor_product(linear_cycle(3, 3), Hypergraph::empty(3, 4)).edge_count() == 0);
  CHECK_THROWS_AS(tensor_product(single_edge(3), single_edge(4)), PreconditionError);

  // Every edge projects onto edges of both factors.
  const auto h = linear_cycle(3, 3);
  const auto hh = tensor_product(h, h);
  CHECK(hh.vertex_count() == 36);
  CHECK(hh.edge_count() == 6 * 3 * 3);
  for (const auto& e : hh.edge_list()) {
    std::vector<Vertex> x, y;
    for (Vertex v : e) {
      x.push_back(v / 6);
      y.push_back(v % 6);
    }
    CHECK(h.contains_edge(x));
    CHECK(h.contains_edge(y));
  }
}

TEST_CASE("random_uniform") {
  CHECK(random_uniform(5, 3, 10, RngSeed{7}).edge_count() == 10);
  CHECK(random_uniform(5, 3, 0, RngSeed{7}).edge_count() == 0);
  CHECK(random_uniform(30, 3, 50, RngSeed{9}) == random_uniform(30, 3, 50, RngSeed{9}));
  CHECK(random_uniform(30, 3, 50, RngSeed{9}).edge_count() == 50);
  CHECK_THROWS_AS(random_uniform(5, 3, 11, RngSeed{7}), PreconditionError);
}

TEST_CASE("percolate_vertices") {
  const auto h = linear_cycle(3, 5);
  CHECK(percolate_vertices(h, 1.0, RngSeed{1}).result.graph == h);
  CHECK(percolate_vertices(h, 0.0, RngSeed{1}).result.graph.vertex_count() == 0);
  CHECK_THROWS_AS(percolate_vertices(h, 1.5, RngSeed{1}), PreconditionError);

  // Kept-vertex mean and fixed-edge survival frequency.
  const auto big = random_uniform(100, 3, 40, RngSeed{3});
  const double p = 0.5;
  const int trials = 10000;
  double sum = 0;
  int survived = 0;
  const auto fixed = big.edge(0);
  for (int i = 0; i < trials; ++i) {
    const auto perc = percolate_vertices(big, p, RngSeed{mix_seed(42, i)});
    sum += perc.kept_vertices;
    const auto& kept = perc.result.to_original;
    bool all = true;
    for (Vertex v : fixed) all = all && std::binary_search(kept.begin(), kept.end(), v);
    survived += all;
  }
  const double mean = sum / trials;
  const double sigma_mean = std::sqrt(100 * p * (1 - p) / trials);
  CHECK(std::abs(mean - 100 * p) < 3 * sigma_mean);
  const double q = p * p * p;
  CHECK(std::abs(static_cast<double>(survived) / trials - q) < 4 * std::sqrt(q * (1 - q) / trials));
}

TEST_CASE("greedy_high_girth") {
  const auto g2 = greedy_high_girth(9, 3, 2, 40, RngSeed{5});
  std::set<std::vector<Vertex>> distinct;
  for (const auto& e : g2.edge_list()) distinct.insert(e);
  CHECK(distinct.size() == g2.edge_count());
  CHECK(g2.edge_count() > 0);

  CHECK(greedy_high_girth(12, 3, 3, 300, RngSeed{5}).is_linear());

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (unsigned g : {3U, 4U, 5U}) {
      const auto h = greedy_high_girth(9, 3, g, 200, RngSeed{seed});
      const auto girth = oracle::brute_berge_girth(h, {.max_sequence_length = 12});
      CHECK((!girth || *girth >= g));
    }
  }
  const auto g4 = greedy_high_girth(9, 3, 4, 2000, RngSeed{2});
  const auto girth = berge_girth(g4).girth;
  CHECK((!girth || *girth >= 4));
}

TEST_CASE("steiner_triple_9") {
  const auto s = steiner_triple_9();
  CHECK(s.vertex_count() == 9);
  CHECK(s.edge_count() == 12);
  for (Vertex a = 0; a < 9; ++a) {
    for (Vertex b = a + 1; b < 9; ++b) {
      const std::vector<Vertex> pair{a, b};
      CHECK(s.codegree(pair) == 1);
    }
  }
  CHECK(s.is_linear());
  // Three non-collinear points span a linear triangle.
  CHECK(oracle::brute_berge_girth(s, {.max_sequence_length = 9}) == std::optional<std::size_t>{3});
}

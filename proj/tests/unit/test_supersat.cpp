#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "hypersat/constructions.hpp"
#include "hypersat/counting.hpp"
#include "hypersat/oracles.hpp"
#include "hypersat/supersat.hpp"
#include "support.hpp"

using namespace hypersat;

namespace {

bool oracle_valid(const CycleCertificate& c, const Hypergraph& host) {
  for (const auto& e : c.edges) {
    if (!host.contains_edge(e)) return false;
  }
  return c.edges.size() == 2 * c.ell + 1 && oracle::brute_is_linear_cycle(c.edges, c.r);
}

// Greatest subgraph of h0 where no pair has 0 < d < factor * d_host, by
// repeated full scans.
std::set<std::vector<Vertex>> naive_cleanup(const Hypergraph& h0, const Hypergraph& host, double factor) {
  std::set<std::vector<Vertex>> edges;
  for (const auto& e : h0.edge_list()) edges.insert(e);
  bool changed = true;
  while (changed) {
    changed = false;
    const Hypergraph cur(h0.uniformity(), h0.vertex_count(), {edges.begin(), edges.end()});
    for (const auto& e : edges) {
      for (std::size_t a = 0; a < e.size() && !changed; ++a) {
        for (std::size_t b = a + 1; b < e.size() && !changed; ++b) {
          const std::vector<Vertex> pair{e[a], e[b]};
          const auto d = oracle::brute_codegree(cur, pair);
          if (d > 0 && d < factor * oracle::brute_codegree(host, pair)) {
            std::erase_if(edges, [&](const std::vector<Vertex>& f) {
              return std::count(f.begin(), f.end(), e[a]) && std::count(f.begin(), f.end(), e[b]);
            });
            changed = true;
          }
        }
      }
      if (changed) break;
    }
  }
  return edges;
}

PartitionedHypergraph random_partitioned(unsigned r, std::size_t per_class, std::size_t m, std::uint64_t seed) {
  Rng rng(RngSeed{seed});
  std::set<std::vector<Vertex>> edges;
  const std::size_t n = r * per_class;
  for (std::size_t t = 0; t < 4 * m && edges.size() < m; ++t) {
    std::vector<Vertex> e;
    for (unsigned c = 0; c < r; ++c) e.push_back(static_cast<Vertex>(c * per_class + rng.below(per_class)));
    edges.insert(e);
  }
  std::vector<unsigned> classes(n);
  for (std::size_t v = 0; v < n; ++v) classes[v] = static_cast<unsigned>(v / per_class);
  return PartitionedHypergraph(Hypergraph(r, n, {edges.begin(), edges.end()}), classes);
}

}  // namespace

TEST_CASE("erdos_kleitman_partition") {
  const auto k4 = complete_hypergraph(3, 4);
  const auto p = erdos_kleitman_partition(k4, 8, RngSeed{1});
  CHECK(p.bound == 1);
  CHECK(p.partition.graph().edge_count() >= 1);
  std::size_t best = 0;
  std::vector<unsigned> cls(4);
  for (unsigned code = 0; code < 81; ++code) {
    for (unsigned v = 0, c = code; v < 4; ++v, c /= 3) cls[v] = c % 3;
    best = std::max(best, oracle::brute_transversal_edges(k4, cls));
  }
  CHECK(best == 2);
  CHECK(p.partition.graph().edge_count() <= best);

  const auto balanced = erdos_kleitman_partition(complete_hypergraph(3, 12), 4, RngSeed{9});
  CHECK(balanced.partition.graph().edge_count() == 64);
  const auto raw = erdos_kleitman_partition(complete_hypergraph(3, 12), 4, RngSeed{9}, false);
  CHECK(BigInt(raw.partition.graph().edge_count()) >= raw.bound);
  CHECK(raw.moves == 0);

  const auto one = erdos_kleitman_partition(single_edge(3), 0, RngSeed{1});
  CHECK(one.fallback);
  CHECK(one.partition.graph().edge_count() == 1);
  CHECK_THROWS_AS(erdos_kleitman_partition(Hypergraph::empty(3, 4), 4, RngSeed{1}), PreconditionError);
}

TEST_CASE("erdos_kleitman_partition meets the floor, with and without trials") {
  Rng rng(RngSeed{71});
  for (unsigned r : {3u, 4u}) {
    for (int i = 0; i < 10; ++i) {
      const std::size_t n = 8 + rng.below(10);
      const auto g = random_uniform(n, r, 1 + rng.below(binomial(n, r) / 3), RngSeed{rng.next()});
      for (std::size_t trials : {std::size_t{0}, std::size_t{16}}) {
        const auto p = erdos_kleitman_partition(g, trials, RngSeed{rng.next()});
        const auto count = oracle::brute_transversal_edges(g, p.partition.classes());
        CHECK(count == p.partition.graph().edge_count());
        CHECK(BigInt(count) >= p.bound);
        CHECK(p.bound * ipow(BigInt(r), r) >= factorial(r) * g.edge_count());
      }
    }
  }
}

TEST_CASE("classify_types") {
  const auto cp = complete_partite(3, 2);
  const auto c = classify_types(cp);
  CHECK(c.type.y == std::vector<unsigned>{2, 2, 2});
  CHECK(c.type.delta(0, 1) == 4);
  CHECK(c.h0.graph() == cp.graph());
  CHECK(c.multiplicity.size() == 1);

  const auto path = linear_path(3, 3);
  const auto part = erdos_kleitman_partition(path, 16, RngSeed{3});
  const auto cl = classify_types(part.partition);
  CHECK(cl.type.y == std::vector<unsigned>{1, 1, 1});
  CHECK(cl.h0.graph() == part.partition.graph());

  for (int seed = 0; seed < 10; ++seed) {
    const auto p = random_partitioned(3, 4, 20, seed);
    const auto t = classify_types(p);
    std::size_t sum = 0;
    for (const auto& [y, m] : t.multiplicity) {
      sum += m;
      CHECK(m <= t.h0.graph().edge_count());
      for (unsigned v : y) CHECK(v >= 1);
    }
    CHECK(sum == p.graph().edge_count());
    CHECK(t.multiplicity.at(t.type.y) == t.h0.graph().edge_count());
  }
}

TEST_CASE("codegree_cleanup examples") {
  const auto cp = complete_partite(3, 3);
  const auto tiny = codegree_cleanup(cp, cp, 1e-9);
  CHECK(tiny.audit.empty());
  CHECK(tiny.graph.graph() == cp.graph());
  const auto full = codegree_cleanup(cp, cp, 1.0);
  CHECK(full.audit.empty());
  CHECK(full.live.size() == 9);

  // Pair (0, 1) carries ten host edges but one H0 edge.
  std::vector<std::vector<Vertex>> host_edges;
  for (Vertex x = 4; x < 14; ++x) host_edges.push_back({0, 1, x});
  host_edges.push_back({2, 3, 14});
  std::vector<unsigned> classes(15, 2);
  classes[0] = classes[2] = 0;
  classes[1] = classes[3] = 1;
  const PartitionedHypergraph host(Hypergraph(3, 15, host_edges), classes);
  const PartitionedHypergraph h0(Hypergraph(3, 15, {{0, 1, 4}, {2, 3, 14}}), classes);
  const auto out = codegree_cleanup(h0, host, 0.5);
  CHECK(out.graph.graph().edge_list() == std::vector<std::vector<Vertex>>{{2, 3, 14}});
  REQUIRE(out.audit.size() == 1);
  CHECK(out.audit[0].a == 0);
  CHECK(out.audit[0].b == 1);
  CHECK(out.audit[0].current == 1);
  CHECK(out.audit[0].host == 10);
  CHECK(out.live == std::vector<Vertex>{2, 3, 14});

  CHECK_THROWS_AS(codegree_cleanup(h0, host, 0.0), PreconditionError);
  CHECK_THROWS_AS(codegree_cleanup(host, h0, 0.5), PreconditionError);
}

TEST_CASE("codegree_cleanup is the greatest stable subgraph and a fixed point") {
  for (int seed = 0; seed < 15; ++seed) {
    const auto host = random_partitioned(3, 4, 30, 100 + seed);
    Rng rng(RngSeed{static_cast<std::uint64_t>(seed)});
    std::vector<std::vector<Vertex>> sub;
    for (const auto& e : host.graph().edge_list()) {
      if (rng.bernoulli(0.6)) sub.push_back(e);
    }
    const PartitionedHypergraph h0(Hypergraph(3, host.graph().vertex_count(), sub), host.classes());
    for (double factor : {0.3, 0.6, 1.0}) {
      const auto out = codegree_cleanup(h0, host, factor);
      const auto expect = naive_cleanup(h0.graph(), host.graph(), factor);
      const auto got = out.graph.graph().edge_list();
      CHECK(std::set<std::vector<Vertex>>(got.begin(), got.end()) == expect);
      CHECK(codegree_cleanup(out.graph, host, factor).audit.empty());
    }
  }
}

TEST_CASE("third_vertex_sets") {
  const auto cp = complete_partite(3, 4);
  const auto t = third_vertex_sets(cp, 0, 4);
  CHECK(t.codegree == 4);
  CHECK(t.by_class[2].size() == 4);
  CHECK(t.bound == 4);
  CHECK(t.bound_met);

  const PartitionedHypergraph sparse(Hypergraph(3, 6, {{0, 2, 4}}), {0, 0, 1, 1, 2, 2});
  const auto none = third_vertex_sets(sparse, 1, 3);
  CHECK(none.codegree == 0);
  for (const auto& s : none.by_class) CHECK(s.empty());
  CHECK(none.bound_met);

  // u1 = 0, u2 = 1, classes 2 and 3 hold {2,3,4} and {5,6,7}.
  std::vector<std::vector<Vertex>> edges;
  for (Vertex a = 2; a <= 4; ++a) {
    for (Vertex b = 5; b <= 7; ++b) edges.push_back({0, 1, a, b});
  }
  const PartitionedHypergraph four(Hypergraph(4, 8, edges), {0, 1, 2, 2, 2, 3, 3, 3});
  const auto f = third_vertex_sets(four, 0, 1);
  CHECK(f.codegree == 9);
  CHECK(f.bound == 3);
  CHECK(f.by_class[2].size() == 3);
  CHECK(f.by_class[3].size() == 3);
  CHECK(f.bound_met);

  CHECK_THROWS_AS(third_vertex_sets(cp, 0, 1), PreconditionError);
}

TEST_CASE("codegree_dichotomy examples") {
  for (unsigned r : {3u, 4u}) {
    const auto cp = complete_partite(r, 3);
    const auto out = codegree_dichotomy(cp, 3);
    REQUIRE(std::holds_alternative<DenseOutcome>(out));
    CHECK(std::get<DenseOutcome>(out).subgraph.graph() == cp.graph());
  }

  const PartitionedHypergraph matching(Hypergraph(3, 9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}),
                                       {0, 0, 0, 1, 1, 1, 2, 2, 2});
  const auto reg = codegree_dichotomy(matching, 2);
  REQUIRE(std::holds_alternative<RegularOutcome>(reg));
  const auto& ro = std::get<RegularOutcome>(reg);
  CHECK((ro.d == 1 || ro.d == 2));
  CHECK(ro.shadow_side.size() == 2);
  for (const auto& [sigma, count] : ro.subgraph.graph().shadow_counts(2)) {
    bool side = true;
    for (Vertex v : sigma) side = side && ro.subgraph.class_of(v) != ro.missing_class;
    if (side) CHECK((2 * count >= ro.d && count < ro.d));
  }

  CHECK_THROWS_AS(codegree_dichotomy(matching, 10), PreconditionError);
  CHECK_THROWS_AS(codegree_dichotomy(matching, 0), PreconditionError);
  CHECK_NOTHROW(codegree_dichotomy(complete_partite(3, 1), 1));
}

TEST_CASE("codegree_dichotomy invariants on random hosts") {
  Rng rng(RngSeed{5});
  for (int i = 0; i < 30; ++i) {
    const unsigned r = 3 + static_cast<unsigned>(rng.below(2));
    const auto p = random_partitioned(r, 3 + rng.below(3), 5 + rng.below(60), rng.next());
    const Hypergraph& g = p.graph();
    const std::size_t n = g.vertex_count();
    const std::size_t lo = static_cast<std::size_t>(g.edge_count() / (4 * ipow(BigInt(n), r - 1))) + 1;
    const std::size_t a = lo + rng.below(n - lo + 1);
    const auto out = codegree_dichotomy(p, a);
    if (const auto* d = std::get_if<DenseOutcome>(&out)) {
      const Hypergraph& s = d->subgraph.graph();
      CHECK(2 * s.edge_count() >= g.edge_count());
      for (const auto& e : s.edge_list()) {
        CHECK(g.contains_edge(e));
        for (std::size_t k = 0; k < r; ++k) {
          std::vector<Vertex> sigma = e;
          sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(k));
          CHECK(oracle::brute_codegree(s, sigma) >= a);
        }
      }
    } else {
      const auto& reg = std::get<RegularOutcome>(out);
      const Hypergraph& s = reg.subgraph.graph();
      CHECK(static_cast<double>(s.edge_count()) * 4 * r * std::log2(double(n)) >= g.edge_count());
      CHECK(reg.d <= a);
      CHECK(BigInt(reg.d) * 4 * ipow(BigInt(n), r - 1) > g.edge_count());
      for (const auto& e : s.edge_list()) {
        CHECK(g.contains_edge(e));
        std::vector<Vertex> sigma;
        for (Vertex v : e) {
          if (reg.subgraph.class_of(v) != reg.missing_class) sigma.push_back(v);
        }
        const auto c = oracle::brute_codegree(s, sigma);
        CHECK(2 * c >= reg.d);
        CHECK(c < reg.d);
      }
    }
  }
}

TEST_CASE("greedy schedule for C^3_5") {
  const auto s = greedy_schedule(3, 2);
  CHECK(s.label_count() == 10);
  CHECK(s.seed == std::vector<unsigned>{5, 0, 1});
  const std::vector<std::pair<std::vector<unsigned>, unsigned>> expect{
      {{0, 1}, 4}, {{1, 4}, 2}, {{4, 2}, 3}, {{1, 2}, 6}, {{2, 3}, 7}, {{3, 4}, 8}, {{4, 0}, 9}};
  REQUIRE(s.steps.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(s.steps[i].window == expect[i].first);
    CHECK(s.steps[i].target == expect[i].second);
  }
  for (unsigned r = 3; r <= 6; ++r) {
    for (unsigned ell = 1; ell <= 4; ++ell) {
      const auto g = greedy_schedule(r, ell);
      CHECK(g.steps.size() == 2 * ell * (r - 1) - 1);
      std::set<unsigned> targets(g.seed.begin(), g.seed.end());
      for (const auto& st : g.steps) {
        for (unsigned w : st.window) CHECK(targets.count(w) == 1);
        CHECK(targets.insert(st.target).second);
      }
      CHECK(targets.size() == g.label_count());
    }
  }
}

TEST_CASE("greedy_expand_cycles on complete 3-partite hosts") {
  GreedyOptions loose;
  loose.check_threshold = false;
  for (std::size_t s : {4u, 5u}) {
    const auto host = complete_partite(3, s).graph();
    std::set<CycleCertificate> seen;
    bool valid = true;
    const auto listed = greedy_expand_cycles(host, s, 2, 0, RngSeed{1}, loose, [&](const CycleCertificate& c) {
      valid = valid && oracle_valid(c, host) && !certificate_problem(c, host);
      seen.insert(c);
      return true;
    });
    CHECK(valid);
    CHECK(listed.exhausted);
    CHECK(BigInt(seen.size()) == listed.certificates);

    GreedyOptions counting = loose;
    counting.count_only = true;
    const auto counted = greedy_expand_cycles(host, s, 2, 0, RngSeed{1}, counting);
    CHECK(counted.certificates == listed.certificates);
    // Six orientations of each seed edge, then (s-1)^3 hinges and
    // (s-2)(s-3)(s-2)(s-2) interiors.
    const BigInt per = BigInt(s - 1) * (s - 1) * (s - 1) * (s - 2) * (s - 2) * (s - 2) * (s - 3);
    CHECK(counted.certificates == 6 * BigInt(host.edge_count()) * per);
  }

  const auto host = complete_partite(3, 11).graph();
  GreedyOptions counting;
  counting.count_only = true;
  const auto big = greedy_expand_cycles(host, 11, 2, 0, RngSeed{2}, counting);
  CHECK(big.certificates == 6 * BigInt(1331) * 1000 * 729 * 8);
  CHECK(big.floor == BigInt(1331));
  CHECK(big.certificates >= big.floor);
  counting.threads = 3;
  CHECK(greedy_expand_cycles(host, 11, 2, 0, RngSeed{2}, counting).certificates == big.certificates);
}

TEST_CASE("greedy_expand_cycles budget, sampling and preconditions") {
  const auto host = complete_partite(3, 11).graph();
  std::vector<CycleCertificate> got;
  const auto one = greedy_expand_cycles(host, 11, 2, 1, RngSeed{3}, {}, [&](const CycleCertificate& c) {
    got.push_back(c);
    return true;
  });
  CHECK(one.certificates == 1);
  CHECK_FALSE(one.exhausted);
  REQUIRE(got.size() == 1);
  CHECK(oracle_valid(got[0], host));

  GreedyOptions sample;
  sample.shuffle = true;
  std::set<CycleCertificate> seen;
  greedy_expand_cycles(host, 11, 2, 200, RngSeed{4}, sample, [&](const CycleCertificate& c) {
    CHECK(oracle_valid(c, host));
    seen.insert(c);
    return true;
  });
  CHECK(seen.size() == 200);

  CHECK_THROWS_AS(greedy_expand_cycles(host, 10, 2, 1, RngSeed{1}), PreconditionError);
  GreedyOptions strict;
  strict.strict_threshold = true;
  CHECK_THROWS_AS(greedy_expand_cycles(host, 11, 2, 1, RngSeed{1}, strict), PreconditionError);

  // A shadow of codegree below A is reported with its vertices.
  GreedyOptions loose;
  loose.check_threshold = false;
  try {
    greedy_expand_cycles(linear_cycle(3, 5), 2, 2, 0, RngSeed{1}, loose);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("shadow {") != std::string::npos);
  }
}

TEST_CASE("greedy_expand_cycles counts agree for r = 4") {
  GreedyOptions loose;
  loose.check_threshold = false;
  const auto host = complete_partite(4, 3).graph();
  std::size_t listed = 0;
  bool valid = true;
  greedy_expand_cycles(host, 3, 2, 0, RngSeed{1}, loose, [&](const CycleCertificate& c) {
    ++listed;
    if (listed % 97 == 0) valid = valid && oracle_valid(c, host);
    return true;
  });
  CHECK(valid);
  loose.count_only = true;
  CHECK(greedy_expand_cycles(host, 3, 2, 0, RngSeed{1}, loose).certificates == listed);
}

TEST_CASE("extend_even_cycles on complete 3-partite hosts") {
  for (std::size_t s : {4u, 5u}) {
    const auto cp = complete_partite(3, s);
    const auto& host = cp.graph();
    const auto cycles = even_cycle_enumerate(pair_shadow_graph(cp, 0, 1), 2, 100000);
    REQUIRE(cycles.complete);
    std::set<CycleCertificate> seen;
    bool valid = true;
    const auto rep = extend_even_cycles(cp, cycles.cycles, 0, {}, [&](const CycleCertificate& c) {
      valid = valid && oracle_valid(c, host);
      seen.insert(c);
    });
    CHECK(valid);
    CHECK(rep.skipped.empty());
    CHECK(BigInt(seen.size()) == rep.total);
    const BigInt per = BigInt(s) * (s - 1) * (s - 2) * (s - 2) * (s - 2) * (s - 3);
    for (const auto& c : rep.per_cycle) {
      CHECK(c.extensions == per);
      CHECK(c.closing == s);
      CHECK(c.vacuous);
    }
  }

  // Brute force over every closing vertex and interior choice for one cycle.
  const auto cp = complete_partite(3, 4);
  const std::vector<Vertex> cyc{0, 4, 1, 5};
  const auto rep = extend_even_cycles(cp, {cyc}, 0);
  std::size_t brute = 0;
  const std::size_t n = cp.graph().vertex_count();
  for (Vertex x = 0; x < n; ++x) {
    std::vector<Vertex> hinges = cyc;
    hinges.push_back(x);
    std::vector<Vertex> in(5);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == 5) {
        std::set<Vertex> all(hinges.begin(), hinges.end());
        all.insert(in.begin(), in.end());
        if (all.size() != 10) return;
        std::vector<std::vector<Vertex>> edges;
        for (std::size_t k = 0; k < 5; ++k) {
          std::vector<Vertex> e{in[k], hinges[k], hinges[(k + 1) % 5]};
          std::sort(e.begin(), e.end());
          if (!cp.graph().contains_edge(e)) return;
          edges.push_back(e);
        }
        brute += oracle::brute_is_linear_cycle(edges, 3);
        return;
      }
      for (Vertex v = 0; v < n; ++v) {
        in[i] = v;
        go(i + 1);
      }
    };
    go(0);
  }
  CHECK(rep.total == brute);

  CHECK(extend_even_cycles(cp, {}, 10).per_cycle.empty());
  CHECK_THROWS_AS(extend_even_cycles(cp, {{0, 1, 2, 3}}, 10), PreconditionError);
}

TEST_CASE("extend_even_cycles with unit pair codegrees") {
  // Each shadow pair of the 4-cycle 0-4-1-5 lies in one edge; the only closing
  // vertex 11 forces vertex 0 back in, so nothing extends.
  const PartitionedHypergraph h(Hypergraph(3, 12, {{0, 4, 8}, {1, 4, 9}, {1, 5, 10}, {0, 5, 11}}),
                                {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2});
  const auto rep = extend_even_cycles(h, {{0, 4, 1, 5}}, 10);
  CHECK(rep.skipped.empty());
  REQUIRE(rep.per_cycle.size() == 1);
  CHECK(rep.per_cycle[0].closing == 1);
  CHECK(rep.total == 0);

  const PartitionedHypergraph wide(
      Hypergraph(3, 12, {{0, 4, 8}, {1, 4, 9}, {1, 5, 10}, {0, 5, 11}, {5, 11, 2}, {0, 11, 6}}),
      {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2});
  std::size_t emitted = 0;
  const auto more = extend_even_cycles(wide, {{0, 4, 1, 5}}, 10, {}, [&](const CycleCertificate& c) {
    CHECK_FALSE(certificate_problem(c, wide.graph()));
    ++emitted;
  });
  CHECK(more.total == 1);
  CHECK(emitted == 1);
}

TEST_CASE("supersat_pipeline on the complete 3-graph") {
  const auto g = complete_hypergraph(3, 12);
  for (auto mode : {PipelineMode::shadow, PipelineMode::induction}) {
    const auto rep = supersat_pipeline(g, 2, mode, 500, RngSeed{9});
    CHECK(rep.modes == std::vector<PipelineMode>{PipelineMode::shadow});
    CHECK(!rep.certificates.empty());
    for (const auto& c : rep.certificates) CHECK(oracle_valid(c, g));
    for (const auto& t : rep.trace) CHECK(t.status != TraceRecord::Status::fail);
    CHECK(std::set<CycleCertificate>(rep.certificates.begin(), rep.certificates.end()).size() ==
          rep.certificates.size());
  }
}

TEST_CASE("supersat_pipeline edge cases") {
  const auto rep = supersat_pipeline(single_edge(3), 2, PipelineMode::shadow, 10, RngSeed{1});
  CHECK(rep.certificates.empty());
  for (const auto& t : rep.trace) CHECK(t.status != TraceRecord::Status::fail);
  CHECK_THROWS_AS(supersat_pipeline(Hypergraph::empty(3, 5), 2, PipelineMode::shadow, 10, RngSeed{1}),
                  PreconditionError);
  CHECK_THROWS_AS(supersat_pipeline(linear_cycle(3, 3), 1, PipelineMode::shadow, 10, RngSeed{1}),
                  PreconditionError);
  CHECK_THROWS_AS(supersat_pipeline(single_edge(2), 2, PipelineMode::shadow, 10, RngSeed{1}), PreconditionError);
}

TEST_CASE("supersat_pipeline induction for r = 4") {
  Rng rng(RngSeed{13});
  std::set<std::string> branches;
  for (int i = 0; i < 6; ++i) {
    const std::size_t n = 10 + rng.below(5);
    const auto g = random_uniform(n, 4, binomial(n, 4) / (1 + rng.below(4)), RngSeed{rng.next()});
    const auto rep = supersat_pipeline(g, 2, PipelineMode::induction, 200, RngSeed{rng.next()});
    CHECK(rep.modes.front() == PipelineMode::induction);
    for (const auto& c : rep.certificates) CHECK(oracle_valid(c, g));
    for (const auto& t : rep.trace) {
      CHECK(t.status != TraceRecord::Status::fail);
      if (t.stage == "dichotomy") branches.insert(t.values.front().second);
    }
  }
  MESSAGE("dichotomy branches seen: " << branches.size());
}

#pragma once

#include <vector>

#include "hypersat/constructions.hpp"
#include "hypersat/hypergraph.hpp"
#include "hypersat/rng.hpp"

namespace hypersat::test {

// Small random hypergraphs of mixed density for property checks.
inline std::vector<Hypergraph> small_corpus(unsigned r, std::size_t count, std::uint64_t seed) {
  std::vector<Hypergraph> out;
  Rng rng(RngSeed{seed});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = r + rng.below(6 - (r > 3 ? 1 : 0));
    const std::size_t cap = binomial(n, r);
    const std::size_t m = rng.below(std::min<std::size_t>(cap, 9) + 1);
    out.push_back(random_uniform(n, r, m, RngSeed{rng.next()}));
  }
  return out;
}

}  // namespace hypersat::test

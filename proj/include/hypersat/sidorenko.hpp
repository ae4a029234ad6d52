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
#include <optional>
#include <string>

#include "hypersat/hypergraph.hpp"
#include "hypersat/rng.hpp"

namespace hypersat {

struct DensityReport {
  BigInt hom;
  double log_tF = 0;  // -inf when hom = 0
  double log_tK = 0;  // -inf when e(H) = 0
  std::optional<double> gap;
  std::string gap_reason;  // why gap is undefined, empty otherwise
};

/// t_F(H) = hom(F, H) / v(H)^v(F) and t_K(H) = r! e(H) / v(H)^r in log space.
DensityReport hom_density(const Hypergraph& f, const Hypergraph& h, unsigned threads = 1);

enum class Sidorenko { holds, violated, undefined };

const char* to_string(Sidorenko s);

/// Decides t_F(H) >= t_K(H)^e(F) by comparing
/// hom(F, H) v(H)^(r e(F)) with (r! e(H))^e(F) v(H)^v(F) exactly.
Sidorenko sidorenko_check(const Hypergraph& f, const Hypergraph& h, unsigned threads = 1);

/// Same decision from an already computed homomorphism count.
Sidorenko sidorenko_check(const Hypergraph& f, const Hypergraph& h, const BigInt& hom);

/// log t_F / log t_K - e(F). Throws PreconditionError with the reason when
/// hom = 0 or t_K is not in (0, 1).
double gap_estimate(const Hypergraph& f, const Hypergraph& h, unsigned threads = 1);

/// (r ln n - ln e) / ln n: the exponent d with e = n^(r - d).
double edge_exponent(const Hypergraph& h);

struct RescaleOptions {
  double epsilon = 0.0;
  std::size_t max_trials = 64;
  std::optional<double> p_override;
  // Counts for H already known to the caller; trusted as given.
  std::optional<BigInt> known_hom;
  std::optional<BigInt> known_copies;
};

struct PercolationEvents {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  BigInt copies;
  bool a = false;  // vertices in [n/2, 3n/2]
  bool b = false;  // edges >= E[e] / 2
  bool c = false;  // copies < 2 E[copies]
};

struct RescaleReport {
  enum class Branch { blow_up, percolation };
  Branch branch = Branch::blow_up;
  double source_delta = 0;    // delta' of the witness
  double target_delta = 0;    // requested delta
  double achieved_delta = 0;  // delta'' of the output
  double target_n = 0;        // m t or m p
  std::size_t t = 1;
  double p = 1;
  bool p_capped = false;
  bool p_overridden = false;
  std::size_t achieved_vertices = 0;
  std::size_t achieved_edges = 0;
  BigInt source_hom;
  BigInt source_copies;
  BigInt copy_upper_observed;  // labeled copies of F in the output
  BigInt copy_bound;           // hom t^v(F) for blow-ups
  double expected_copies = 0;  // labeled copies p^v(F) for percolation
  double expected_edges = 0;
  std::size_t trials = 0;
  bool success = false;
  PercolationEvents events;  // last trial examined
  std::optional<Subhypergraph> output;
};

const char* to_string(RescaleReport::Branch b);

/// Rescales a gap witness H for F to edge exponent delta: a t-blow-up when
/// delta <= delta'(H), otherwise vertex percolation retried until the
/// vertex, edge and copy-count events hold together.
RescaleReport rescale_witness(const Hypergraph& h, double delta, const Hypergraph& f, RngSeed seed,
                              const RescaleOptions& options = {}, unsigned threads = 1);

/// sum over homomorphisms phi of prod_x (t)_{|phi^-1(x)|}: labeled copies of
/// F in H[t].
BigInt blow_up_copy_count(const Hypergraph& f, const Hypergraph& h, std::size_t t);

struct TensorCaps {
  std::size_t max_vertices = 100000;
  std::size_t max_edges = 2000000;
};

/// k-fold tensor power H (x) ... (x) H. Throws BudgetExceeded above the caps.
Hypergraph tensor_power_witness(const Hypergraph& h, unsigned k, const TensorCaps& caps = {});

struct TensorPowerReport {
  unsigned k = 1;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  BigInt hom;
  BigInt hom_power;  // hom(F, H)^k
  std::optional<double> gap;
  std::optional<double> adjusted_gap;  // with e(H^k) / r!^(k-1) edges
};

TensorPowerReport tensor_power_report(const Hypergraph& f, const Hypergraph& h, unsigned k,
                                      const TensorCaps& caps = {}, unsigned threads = 1);

}  // namespace hypersat

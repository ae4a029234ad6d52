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

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "hypersat/hypergraph.hpp"
#include "hypersat/rng.hpp"

namespace hypersat {

/// A stage postcondition failed; the message names the stage and a witness.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& stage, const std::string& what)
      : Error(stage + ": " + what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Labeled copy of the linear cycle C^r_{2l+1}: e_i = {v_{i,1..r-2}, w_{i-1}, w_i}
/// for 1 <= i <= 2l+1, with w_{2l+1} = w_0.
struct CycleCertificate {
  unsigned r = 0;
  unsigned ell = 0;
  std::vector<Vertex> hinges;                 // w_0 .. w_{2l}
  std::vector<std::vector<Vertex>> interior;  // interior[i-1] = v_{i,1..r-2}
  std::vector<std::vector<Vertex>> edges;     // edges[i-1] = e_i, sorted

  friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
  friend auto operator<=>(const CycleCertificate& a, const CycleCertificate& b) {
    return std::tie(a.hinges, a.interior) <=> std::tie(b.hinges, b.interior);
  }
};

/// Builds the certificate, filling edges from hinges and interiors.
CycleCertificate make_certificate(unsigned r, unsigned ell, std::vector<Vertex> hinges,
                                  std::vector<std::vector<Vertex>> interior);

/// Empty when the certificate is well formed and every edge lies in host;
/// otherwise the first violated condition.
std::optional<std::string> certificate_problem(const CycleCertificate& c, const Hypergraph& host);

// Partitioning.

struct PartitionResult {
  PartitionedHypergraph partition;  // transversal edges only, same vertex labels
  BigInt bound;                     // ceil(r! e(G) / r^r)
  std::size_t trials_used = 0;
  bool fallback = false;            // conditional expectations were needed
  std::size_t moves = 0;            // local-search vertex moves
};

/// Random r-colourings first, then the deterministic conditional-expectation
/// colouring, which always reaches the bound. With local_search, single
/// vertex moves then run while they gain transversal edges.
PartitionResult erdos_kleitman_partition(const Hypergraph& g, std::size_t trials, RngSeed seed,
                                         bool local_search = true);

/// Index of the unordered class pair {i, j} in 0..C(r,2)-1.
std::size_t class_pair_index(unsigned r, unsigned i, unsigned j);

/// Dyadic exponents y_ij >= 1 of pair codegrees; Delta_ij = 2^y_ij.
struct TypeVector {
  unsigned r = 0;
  std::vector<unsigned> y;  // by class_pair_index

  unsigned exponent(unsigned i, unsigned j) const { return y[class_pair_index(r, i, j)]; }
  std::uint64_t delta(unsigned i, unsigned j) const { return std::uint64_t{1} << exponent(i, j); }
  /// Same type after class c is renamed to order[c].
  TypeVector relabeled(const std::vector<unsigned>& order) const;
};

struct Classification {
  TypeVector type;
  PartitionedHypergraph h0;                                // edges of the chosen type
  std::map<std::vector<unsigned>, std::size_t> multiplicity;  // edges per type
};

/// Smallest y with d < 2^y.
unsigned dyadic_exponent(std::size_t d);

/// Types every edge by its exact pair codegrees and keeps the most populous
/// type, ties broken towards the lexicographically smallest vector.
Classification classify_types(const PartitionedHypergraph& p);

struct CleanupDeletion {
  Vertex a = 0;
  Vertex b = 0;
  std::size_t current = 0;  // codegree in the shrinking graph when deleted
  std::size_t host = 0;     // codegree in the host
  std::size_t removed = 0;
};

struct CleanupResult {
  PartitionedHypergraph graph;  // host labels; dropped vertices keep no edges
  std::vector<Vertex> live;     // vertices still in an edge, ascending
  std::vector<CleanupDeletion> audit;
  double factor = 0;
};

/// (2 log2(n^r))^(-r^2).
double default_cleanup_factor(std::size_t n, unsigned r);

/// Deletes every edge through a pair whose codegree drops below
/// factor * d_host, repeated to a fixed point. h0 must be a subgraph of host
/// with the same classes; factor in (0, 1].
CleanupResult codegree_cleanup(const PartitionedHypergraph& h0, const PartitionedHypergraph& host, double factor);

struct ThirdVertexSets {
  std::vector<std::vector<Vertex>> by_class;  // empty for the classes of u1, u2
  std::size_t codegree = 0;
  std::size_t bound = 0;  // smallest k with k^(r-2) >= codegree
  bool bound_met = true;
};

ThirdVertexSets third_vertex_sets(const PartitionedHypergraph& h, Vertex u1, Vertex u2);

// Codegree dichotomy.

struct DenseOutcome {
  PartitionedHypergraph subgraph;  // every (r-1)-shadow has codegree >= a
  std::size_t a = 0;
};

struct RegularOutcome {
  PartitionedHypergraph subgraph;
  std::size_t d = 0;
  unsigned missing_class = 0;       // the shadows live on the other classes
  std::vector<unsigned> shadow_side;
};

using DichotomyOutcome = std::variant<DenseOutcome, RegularOutcome>;

/// Requires e(p) / (4 n^(r-1)) < a <= n. Postconditions are re-checked by a
/// fresh codegree scan; a failure throws VerificationError.
DichotomyOutcome codegree_dichotomy(const PartitionedHypergraph& p, std::size_t a);

// Greedy expansion.

/// Fixed order in which the greedy expansion specifies vertices. Labels
/// 0..2l are the hinges w_0..w_{2l}; label 2l+1 + (i-1)(r-2) + (j-1) is v_{i,j}.
struct GreedySchedule {
  struct Step {
    std::vector<unsigned> window;  // labels of the (r-1)-shadow extended
    unsigned target = 0;           // label of the new vertex
  };
  unsigned r = 0;
  unsigned ell = 0;
  std::vector<unsigned> seed;  // labels of the ordered first edge
  std::vector<Step> steps;
  unsigned label_count() const { return (2 * ell + 1) * (r - 1); }
};

GreedySchedule greedy_schedule(unsigned r, unsigned ell);

struct GreedyOptions {
  bool count_only = false;        // count exhaustively, emit nothing
  bool shuffle = false;           // seeded candidate order
  bool strict_threshold = false;  // require a > 2(2l+1)(r-1) instead of a > (2l+1)(r-1)
  bool check_threshold = true;
  unsigned threads = 1;           // used by count_only
};

struct GreedyReport {
  BigInt certificates;  // emitted, or counted when count_only
  bool exhausted = true;
  BigInt floor;  // e (a - (2l+1)(r-1))^(2l(r-1)-1), 0 when the base is not positive
};

/// Runs the schedule over every ordered seed edge. budget caps the number of
/// emitted certificates (0: no cap); visit may return false to stop. A
/// shadow with codegree below a throws PreconditionError naming it.
GreedyReport greedy_expand_cycles(const Hypergraph& h, std::size_t a, unsigned ell, std::size_t budget,
                                  RngSeed seed, const GreedyOptions& options = {},
                                  const std::function<bool(const CycleCertificate&)>& visit = {});

// Even-cycle extension.

struct CycleExtension {
  std::size_t cycle = 0;          // index into the input
  std::size_t closing = 0;        // admissible x_{2l+1}
  unsigned closing_class = 0;     // class with the most closing vertices
  BigInt extensions;              // exact number of certificates
  double bound = 0;               // clamped product estimate
  bool vacuous = false;           // some factor of the estimate is not positive
};

struct ExtensionReport {
  std::vector<CycleExtension> per_cycle;
  std::vector<std::size_t> skipped;  // cycles without a closing vertex
  std::size_t emitted = 0;
  BigInt total;
};

struct ExtensionContext {
  std::optional<TypeVector> type;  // supplies Delta for the estimate
  std::size_t log_n = 0;           // n used inside logarithms; 0: vertex count
};

/// Each 2l-cycle x_1..x_{2l} of a pair shadow becomes hinges
/// w_0 = x_1, w_i = x_{i+1}, closed through a third-class vertex x_{2l+1}.
ExtensionReport extend_even_cycles(const PartitionedHypergraph& h, const std::vector<std::vector<Vertex>>& cycles,
                                   std::size_t budget, const ExtensionContext& context = {},
                                   const std::function<void(const CycleCertificate&)>& visit = {});

// Pipeline.

enum class PipelineMode { induction, shadow };

const char* to_string(PipelineMode m);

struct TraceRecord {
  enum class Status { pass, fail, report };
  unsigned r = 0;
  std::string stage;
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> values;
  Status status = Status::report;
};

const char* to_string(TraceRecord::Status s);

struct PipelineOptions {
  std::size_t partition_trials = 16;
  std::size_t cycle_budget = 20000;
  std::optional<double> cleanup_factor;  // default_cleanup_factor when unset
};

struct PipelineReport {
  unsigned r = 0;
  unsigned ell = 0;
  std::vector<PipelineMode> modes;  // route taken at each uniformity, outermost first
  std::vector<TraceRecord> trace;
  std::vector<CycleCertificate> certificates;
  bool truncated = false;  // budget reached
};

PipelineReport supersat_pipeline(const Hypergraph& g, unsigned ell, PipelineMode mode, std::size_t budget,
                                 RngSeed seed, const PipelineOptions& options = {});

}  // namespace hypersat

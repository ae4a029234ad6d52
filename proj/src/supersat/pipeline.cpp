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


#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypersat/bounds.hpp"
#include "hypersat/counting.hpp"
#include "hypersat/supersat.hpp"

namespace hypersat {

namespace {

using Status = TraceRecord::Status;

std::string num(const BigInt& x) { return x.str(); }
std::string num(std::size_t x) { return std::to_string(x); }
std::string dec(double x) { return decimal_string(x, 12); }
std::string yes(bool b) { return b ? "true" : "false"; }

class Level {
 public:
  Level(const Hypergraph& g, unsigned ell, std::size_t budget, RngSeed seed, const PipelineOptions& options,
        PipelineReport& report)
      : g_(g), r_(g.uniformity()), n_(g.vertex_count()), ell_(ell), budget_(budget), seed_(seed),
        options_(options), report_(report) {}

  std::vector<CycleCertificate> run(PipelineMode mode) {
    const PipelineMode used = r_ == 3 ? PipelineMode::shadow : mode;
    report_.modes.push_back(used);
    std::vector<CycleCertificate> out;
    if (!g_.edgeless()) {
      const PartitionResult part = partition();
      if (used == PipelineMode::shadow) {
        shadow_route(part.partition, out);
      } else {
        induction_route(part.partition, out);
      }
    }
    verify(out);
    return out;
  }

 private:
  TraceRecord& record(std::string stage, std::string anchor, Status status) {
    report_.trace.push_back({r_, std::move(stage), std::move(anchor), {}, status});
    return report_.trace.back();
  }

  void require(bool ok, const std::string& stage, const std::string& what) const {
    if (!ok) throw VerificationError(stage, what);
  }

  bool room(const std::vector<CycleCertificate>& out) const { return budget_ == 0 || out.size() < budget_; }

  PartitionResult partition() {
    PartitionResult part = erdos_kleitman_partition(g_, options_.partition_trials, RngSeed{mix_seed(seed_.value, r_)});
    const std::size_t eh = part.partition.graph().edge_count();
    require(BigInt(eh) >= part.bound, "partition", "transversal edges below r! e / r^r");
    auto& rec = record("partition", "r-partite subgraph with e(H) >= r! e(G) / r^r", Status::pass);
    rec.values = {{"e(G)", num(g_.edge_count())},
                  {"e(H)", num(eh)},
                  {"bound", num(part.bound)},
                  {"trials", num(part.trials_used)},
                  {"fallback", yes(part.fallback)},
                  {"local moves", num(part.moves)}};
    return part;
  }

  void shadow_route(const PartitionedHypergraph& h, std::vector<CycleCertificate>& out) {
    const std::size_t eh = h.graph().edge_count();
    const double log2_n = std::log2(static_cast<double>(n_));

    const Classification cls = classify_types(h);
    {
      std::size_t sum = 0;
      for (const auto& [t, count] : cls.multiplicity) sum += count;
      require(sum == eh, "types", "type multiplicities do not sum to e(H)");
      const std::size_t e0 = cls.h0.graph().edge_count();
      const std::size_t types = cls.multiplicity.size();
      require(e0 * types >= eh, "types", "chosen type below e(H) / #types");
      const double floor = eh * std::pow(r_ * log2_n, -static_cast<double>(r_ * (r_ - 1) / 2));
      require(static_cast<double>(e0) >= floor * (1 - 1e-12), "types", "chosen type below the pigeonhole floor");
      std::string y;
      for (unsigned i = 0; i < r_; ++i) {
        for (unsigned j = i + 1; j < r_; ++j) {
          y += (y.empty() ? "" : ",") + std::string("y") + std::to_string(i) + std::to_string(j) + "=" +
               std::to_string(cls.type.exponent(i, j));
        }
      }
      auto& rec = record("types", "most populous dyadic pair-codegree type", Status::pass);
      rec.values = {{"type", y},
                    {"e(H0)", num(e0)},
                    {"nonempty types", num(types)},
                    {"floor e(H)/(r log2 n)^C(r,2)", dec(floor)}};
    }

    const double factor = options_.cleanup_factor.value_or(default_cleanup_factor(n_, r_));
    const bool paper_factor = !options_.cleanup_factor.has_value();
    const CleanupResult clean = codegree_cleanup(cls.h0, h, factor);
    const Hypergraph& hp = clean.graph.graph();
    {
      const std::size_t e0 = cls.h0.graph().edge_count();
      const double scale = 2.0 * std::pow(2.0 * r_ * log2_n, static_cast<double>(r_) * r_);
      bool sandwich = true;
      bool lower = true;
      for (EdgeId id = 0; id < hp.edge_count(); ++id) {
        const auto e = hp.edge(id);
        for (unsigned a = 0; a < r_; ++a) {
          for (unsigned b = a + 1; b < r_; ++b) {
            const double d = static_cast<double>(hp.pair_edges(e[a], e[b]).size());
            const double dh = static_cast<double>(h.graph().pair_edges(e[a], e[b]).size());
            const double delta = static_cast<double>(cls.type.delta(h.class_of(e[a]), h.class_of(e[b])));
            sandwich = sandwich && d >= factor * dh && d <= delta;
            lower = lower && d >= delta / scale;
          }
        }
      }
      require(sandwich, "cleanup", "surviving pair outside [factor d_H, Delta]");
      const bool half = 2 * hp.edge_count() >= e0;
      if (paper_factor) {
        require(lower, "cleanup", "surviving pair below Delta / (2 (2 log2 n^r)^(r^2))");
        require(half, "cleanup", "cleanup removed more than half of H0");
      }
      std::size_t removed = 0;
      for (const auto& d : clean.audit) removed += d.removed;
      auto& rec = record("cleanup", "low-codegree pairs deleted to a fixed point; codegree sandwich; e(H') >= e(H0)/2",
                         paper_factor ? Status::pass : Status::report);
      rec.values = {{"ln factor", dec(std::log(factor))},   {"log base", "2"},
                    {"deletions", num(clean.audit.size())}, {"edges removed", num(removed)},
                    {"e(H')", num(hp.edge_count())}, {"live vertices", num(clean.live.size())},
                    {"sandwich lower bound", yes(lower)}, {"kept half", yes(half)}};
    }
    if (hp.edgeless()) return;

    // Relabel classes so that |U_0| >= |U_1| >= ...
    std::vector<std::size_t> sizes(r_, 0);
    for (Vertex v : clean.live) ++sizes[clean.graph.class_of(v)];
    std::vector<unsigned> by_size(r_);
    std::iota(by_size.begin(), by_size.end(), 0u);
    std::stable_sort(by_size.begin(), by_size.end(), [&](unsigned a, unsigned b) { return sizes[a] > sizes[b]; });
    std::vector<unsigned> rank(r_);
    for (unsigned k = 0; k < r_; ++k) rank[by_size[k]] = k;
    std::vector<unsigned> classes(n_);
    for (Vertex v = 0; v < n_; ++v) classes[v] = rank[clean.graph.class_of(v)];
    const PartitionedHypergraph sorted(hp, classes);
    const TypeVector type = cls.type.relabeled(rank);
    {
      std::string s;
      for (unsigned k = 0; k < r_; ++k) s += (k ? "," : "") + std::to_string(sizes[by_size[k]]);
      auto& rec = record("class order", "classes relabeled by decreasing live size", Status::pass);
      rec.values = {{"sizes", s}};
    }

    std::vector<std::size_t> shadow(r_ * r_, 0);
    for (unsigned i = 0; i < r_; ++i) {
      for (unsigned j = i + 1; j < r_; ++j) {
        shadow[i * r_ + j] = pair_shadow_graph(sorted, i, j).edge_count();
        const std::size_t prod = shadow[i * r_ + j] * type.delta(i, j);
        require(hp.edge_count() <= prod, "codegree product", "e(H') exceeds |shadow_ij| Delta_ij");
        require(prod <= n_ * n_ * type.delta(i, j), "codegree product", "|shadow_ij| exceeds n^2");
      }
    }
    record("codegree product", "e(H') <= |shadow_ij| Delta_ij <= n^2 Delta_ij for every class pair", Status::pass)
        .values = {{"e(H')", num(hp.edge_count())}};

    unsigned side = 1;
    {
      const double target = std::pow(static_cast<double>(g_.edge_count()), 1.0 / (r_ - 1)) *
                            std::pow(static_cast<double>(sizes[by_size[0]]), (r_ - 2.0) / (r_ - 1));
      auto& rec = record("shadow side", "a pair shadow at the largest class is large (selected, not asserted)",
                         Status::report);
      rec.values.push_back({"unscaled bound e(G)^(1/(r-1)) |U_0|^((r-2)/(r-1))", dec(target)});
      for (unsigned j = 1; j < r_; ++j) {
        rec.values.push_back({"|shadow_0" + std::to_string(j) + "|", num(shadow[j])});
        if (shadow[j] > shadow[side]) side = j;
      }
      rec.values.push_back({"selected", std::to_string(side)});
    }

    const SimpleGraph sg = pair_shadow_graph(sorted, 0, side);
    {
      bool met = true;
      for (const auto& [u1, u2] : sg.edges()) met = met && third_vertex_sets(sorted, u1, u2).bound_met;
      require(met, "third vertex", "a shadow pair misses its extension-vertex bound");
      record("third vertex", "extension vertices in some third class, at least d^(1/(r-2))", Status::pass)
          .values = {{"pairs checked", num(sg.edge_count())}};
    }

    const EvenCycles cycles = even_cycle_enumerate(sg, ell_, options_.cycle_budget);
    const std::size_t m = sizes[by_size[0]] + sizes[by_size[side]];
    {
      const double k = sg.edge_count() / std::pow(static_cast<double>(m), 1.0 + 1.0 / ell_);
      auto& rec = record("even cycles", "even cycles in the selected pair shadow", Status::report);
      rec.values = {{"cycles", num(cycles.cycles.size())}, {"complete", yes(cycles.complete)},
                    {"m", num(m)},
                    {"k = |shadow| / m^(1+1/l)", dec(k)}};
    }

    ExtensionContext ctx{type, n_};
    const ExtensionReport ext = extend_even_cycles(
        sorted, cycles.cycles, budget_ == 0 ? 0 : budget_ - std::min(budget_, out.size()), ctx,
        [&](const CycleCertificate& c) {
          if (room(out)) out.push_back(c);
        });
    {
      std::size_t vacuous = 0;
      bool above = true;
      for (const auto& c : ext.per_cycle) {
        vacuous += c.vacuous;
        above = above && (c.vacuous || static_cast<double>(c.extensions) >= c.bound);
      }
      require(above, "extension", "a cycle extends fewer times than its product estimate");
      auto& rec = record("extension", "each even cycle extends to odd linear cycles through a third class",
                         Status::pass);
      rec.values = {{"extended cycles", num(ext.per_cycle.size())},
                    {"skipped cycles", num(ext.skipped.size())},
                    {"vacuous estimates", num(vacuous)},
                    {"certificates counted", num(ext.total)},
                    {"certificates kept", num(out.size())}};
      chain(ext.total, Rational(2, r_ - 1));
    }
    if (!room(out) || ext.emitted > out.size()) report_.truncated = true;
  }

  void chain(const BigInt& observed, const Rational& excess) {
    const double ln_n = std::log(static_cast<double>(n_));
    const double ln_e = std::log(static_cast<double>(g_.edge_count()));
    const double main = (r_ - 1.0) * (2 * ell_ + 1) * ln_n +
                        (2 * ell_ + 1 + excess.convert_to<double>()) * (ln_e - r_ * ln_n);
    const double ln_p = static_cast<double>(r_) * r_ * std::log(2.0 * r_ * std::log2(static_cast<double>(n_)));
    auto& rec = record("count chain", "observed count against the main term, polylog factor P either way",
                       Status::report);
    rec.values = {{"P", "(2 log2 n^r)^(r^2)"},
                  {"ln main term", dec(main)},
                  {"ln main term * P", dec(main + ln_p)},
                  {"ln main term / P", dec(main - ln_p)},
                  {"ln observed", observed > 0 ? dec(log_big(observed)) : "-inf"}};
  }

  void induction_route(const PartitionedHypergraph& h, std::vector<CycleCertificate>& out) {
    const std::size_t eh = h.graph().edge_count();
    const BoundValues bv = bound_values(r_, ell_, n_, g_.edge_count());
    const BigInt tau_den = 4 * ipow(BigInt(n_), r_ - 1);
    const std::size_t lo = static_cast<std::size_t>(BigInt(eh) / tau_den) + 1;
    const double raw = bv.a_value.value_or(0.0);
    const std::size_t a = std::clamp<std::size_t>(static_cast<std::size_t>(std::floor(raw)), lo, n_);
    {
      auto& rec = record("threshold", "codegree threshold A from the exponents of f(r-1)", Status::report);
      rec.values = {{"f(r-1)", rational_string(*bv.f_prev)},
                    {"edge exponent", rational_string(*bv.a_edge_exponent)},
                    {"vertex exponent", rational_string(*bv.a_vertex_exponent)},
                    {"A formula", dec(raw)},
                    {"A", num(a)},
                    {"clamped", yes(static_cast<double>(a) != std::floor(raw))}};
    }
    if (lo > n_) return;

    const DichotomyOutcome outcome = codegree_dichotomy(h, a);
    if (const auto* dense = std::get_if<DenseOutcome>(&outcome)) {
      const Hypergraph& hat = dense->subgraph.graph();
      record("dichotomy", "every (r-1)-shadow has codegree at least A", Status::pass).values = {
          {"branch", "dense"}, {"e(hat H)", num(hat.edge_count())}, {"A", num(a)}};
      GreedyOptions go;
      go.check_threshold = false;
      const std::size_t span = (2 * ell_ + 1) * (r_ - 1);
      const std::size_t left = budget_ == 0 ? 0 : budget_ - std::min(budget_, out.size());
      const GreedyReport gr = greedy_expand_cycles(hat, a, ell_, left, seed_, go, [&](const CycleCertificate& c) {
        out.push_back(c);
        return true;
      });
      if (!gr.exhausted) report_.truncated = true;
      auto& rec = record("greedy", "greedy expansion from ordered seed edges", Status::report);
      rec.values = {{"certificates", num(gr.certificates)},
                    {"exhausted", yes(gr.exhausted)},
                    {"floor e (A - (2l+1)(r-1))^(2l(r-1)-1)", num(gr.floor)},
                    {"A > 2(2l+1)(r-1)", yes(a > 2 * span)}};
      chain(gr.certificates, bv.f_r);
      return;
    }

    const auto& reg = std::get<RegularOutcome>(outcome);
    const Hypergraph& hat = reg.subgraph.graph();
    std::vector<std::vector<Vertex>> lower_edges;
    for (EdgeId id = 0; id < hat.edge_count(); ++id) {
      std::vector<Vertex> sigma;
      for (Vertex v : hat.edge(id)) {
        if (reg.subgraph.class_of(v) != reg.missing_class) sigma.push_back(v);
      }
      lower_edges.push_back(std::move(sigma));
    }
    const Hypergraph lower(r_ - 1, n_, std::move(lower_edges));
    require(lower.edge_count() * reg.d >= hat.edge_count(), "dichotomy", "e(H') D below e(hat H)");
    record("dichotomy", "dyadically regular (r-1)-shadows, D/2 <= codegree < D", Status::pass).values = {
        {"branch", "regular"},
        {"e(hat H)", num(hat.edge_count())},
        {"D", num(reg.d)},
        {"missing class", std::to_string(reg.missing_class)},
        {"e(shadow graph)", num(lower.edge_count())}};

    Level inner(lower, ell_, budget_, RngSeed{mix_seed(seed_.value, 1000 + r_)}, options_, report_);
    const std::vector<CycleCertificate> base = inner.run(PipelineMode::induction);
    lift(hat, base, reg, out);
  }

  void lift(const Hypergraph& hat, const std::vector<CycleCertificate>& base, const RegularOutcome& reg,
            std::vector<CycleCertificate>& out) {
    std::vector<char> used(n_, 0);
    std::size_t min_choices = SIZE_MAX;
    bool restricted = true;
    std::size_t produced = 0;
    for (const auto& c : base) {
      if (!room(out)) {
        report_.truncated = true;
        break;
      }
      const std::size_t len = c.edges.size();
      std::vector<std::vector<Vertex>> choices(len);
      for (std::size_t i = 0; i < len; ++i) {
        const auto& sigma = c.edges[i];
        for (EdgeId id : hat.pair_edges(sigma[0], sigma[1])) {
          const auto e = hat.edge(id);
          if (!std::includes(e.begin(), e.end(), sigma.begin(), sigma.end())) continue;
          for (Vertex x : e) {
            if (!std::binary_search(sigma.begin(), sigma.end(), x)) choices[i].push_back(x);
          }
        }
        min_choices = std::min(min_choices, choices[i].size());
      }
      std::vector<Vertex> pick(len);
      const auto rec = [&](auto&& self, std::size_t i) -> void {
        if (!room(out)) return;
        if (i == len) {
          std::vector<std::vector<Vertex>> interior = c.interior;
          for (std::size_t k = 0; k < len; ++k) interior[k].push_back(pick[k]);
          CycleCertificate lifted = make_certificate(r_, ell_, c.hinges, std::move(interior));
          for (std::size_t k = 0; k < len; ++k) {
            std::vector<Vertex> back;
            for (Vertex v : lifted.edges[k]) {
              if (reg.subgraph.class_of(v) != reg.missing_class) back.push_back(v);
            }
            restricted = restricted && back == c.edges[k];
          }
          out.push_back(std::move(lifted));
          ++produced;
          return;
        }
        for (Vertex x : choices[i]) {
          if (used[x]) continue;
          used[x] = 1;
          pick[i] = x;
          self(self, i + 1);
          used[x] = 0;
        }
      };
      rec(rec, 0);
    }
    if (base.empty()) min_choices = 0;
    require(restricted, "lift", "lifted certificate does not restrict to its shadow certificate");
    require(base.empty() || 2 * min_choices >= reg.d, "lift", "a shadow extends in fewer than D/2 ways");
    const long long floor = static_cast<long long>(reg.d / 2) - 2 * static_cast<long long>(ell_);
    record("lift", "each shadow extends to an edge in at least D/2 - 2l ways", Status::pass).values = {
        {"shadow certificates", num(base.size())},
        {"lifted", num(produced)},
        {"fewest extensions", num(min_choices)},
        {"D/2 - 2l", std::to_string(floor)}};
  }

  void verify(const std::vector<CycleCertificate>& out) {
    for (const auto& c : out) {
      if (auto problem = certificate_problem(c, g_)) throw VerificationError("certificates", *problem);
    }
    record("certificates", "every certificate re-verified against the host", Status::pass).values = {
        {"count", num(out.size())}};
  }

  const Hypergraph& g_;
  unsigned r_;
  std::size_t n_;
  unsigned ell_;
  std::size_t budget_;
  RngSeed seed_;
  const PipelineOptions& options_;
  PipelineReport& report_;
};

}  // namespace

PipelineReport supersat_pipeline(const Hypergraph& g, unsigned ell, PipelineMode mode, std::size_t budget,
                                 RngSeed seed, const PipelineOptions& options) {
  if (g.uniformity() < 3) throw PreconditionError("supersat_pipeline needs r >= 3");
  if (ell < 2) throw PreconditionError("supersat_pipeline needs l >= 2");
  if (g.edgeless()) throw PreconditionError("supersat_pipeline needs at least one edge");
  PipelineReport report;
  report.r = g.uniformity();
  report.ell = ell;
  Level top(g, ell, budget, seed, options, report);
  report.certificates = top.run(mode);
  return report;
}

}  // namespace hypersat

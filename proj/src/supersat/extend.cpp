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

#include "hypersat/supersat.hpp"

namespace hypersat {

namespace {

class Extender {
 public:
  Extender(const PartitionedHypergraph& h, unsigned ell) : h_(h), g_(h.graph()), ell_(ell), used_(g_.vertex_count(), 0) {}

  std::function<void(const CycleCertificate&)> visit;
  std::size_t budget = 0;
  std::size_t emitted = 0;

  BigInt count(const std::vector<Vertex>& hinges) {
    load(hinges);
    BigInt out = 0;
    slot(0, &out);
    unload();
    return out;
  }

  bool emit(const std::vector<Vertex>& hinges) {
    load(hinges);
    slot(0, nullptr);
    unload();
    return !full();
  }

 private:
  bool full() const { return budget != 0 && emitted >= budget; }

  void load(const std::vector<Vertex>& hinges) {
    hinges_ = hinges;
    interior_.assign(hinges.size(), {});
    for (Vertex v : hinges_) used_[v] = 1;
  }
  void unload() {
    for (Vertex v : hinges_) used_[v] = 0;
  }

  // Edges through the slot's hinge pair whose other vertices are all free.
  void options(std::size_t i, std::vector<std::vector<Vertex>>& out) const {
    const std::size_t len = hinges_.size();
    const Vertex a = hinges_[i];
    const Vertex b = hinges_[(i + 1) % len];
    out.clear();
    for (EdgeId id : g_.pair_edges(a, b)) {
      std::vector<Vertex> rest;
      bool ok = true;
      for (Vertex x : g_.edge(id)) {
        if (x == a || x == b) continue;
        if (used_[x]) {
          ok = false;
          break;
        }
        rest.push_back(x);
      }
      if (ok) out.push_back(std::move(rest));
    }
  }

  void slot(std::size_t i, BigInt* total) {
    const std::size_t len = hinges_.size();
    if (i == len) {
      ++emitted;
      if (visit) visit(make_certificate(g_.uniformity(), ell_, hinges_, interior_));
      return;
    }
    std::vector<std::vector<Vertex>> choices;
    options(i, choices);
    if (total != nullptr && i + 1 == len) {
      *total += choices.size();
      return;
    }
    for (auto& rest : choices) {
      for (Vertex x : rest) used_[x] = 1;
      interior_[i] = rest;
      slot(i + 1, total);
      for (Vertex x : rest) used_[x] = 0;
      if (total == nullptr && full()) return;
    }
  }

  const PartitionedHypergraph& h_;
  const Hypergraph& g_;
  unsigned ell_;
  std::vector<char> used_;
  std::vector<Vertex> hinges_;
  std::vector<std::vector<Vertex>> interior_;
};

}  // namespace

ExtensionReport extend_even_cycles(const PartitionedHypergraph& h, const std::vector<std::vector<Vertex>>& cycles,
                                   std::size_t budget, const ExtensionContext& context,
                                   const std::function<void(const CycleCertificate&)>& visit) {
  const Hypergraph& g = h.graph();
  const unsigned r = g.uniformity();
  if (r < 3) throw PreconditionError("extend_even_cycles needs r >= 3");
  const std::size_t n_log = context.log_n != 0 ? context.log_n : g.vertex_count();
  const double scale = 2.0 * std::pow(2.0 * r * std::log2(static_cast<double>(std::max<std::size_t>(n_log, 2))),
                                      static_cast<double>(r) * r);
  ExtensionReport report;
  std::size_t emitted = 0;

  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    const auto& cyc = cycles[ci];
    const std::size_t len = cyc.size();
    if (len < 4 || len % 2 != 0) throw PreconditionError("shadow cycles must have even length >= 4");
    const unsigned ell = static_cast<unsigned>(len / 2);
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex a = cyc[i];
      const Vertex b = cyc[(i + 1) % len];
      if (a >= g.vertex_count() || b >= g.vertex_count()) throw PreconditionError("cycle vertex out of range");
      if (h.class_of(a) != h.class_of(cyc[i % 2]) || h.class_of(cyc[0]) == h.class_of(cyc[1])) {
        throw PreconditionError("cycle is not in a single pair shadow");
      }
      if (g.pair_edges(a, b).empty()) throw PreconditionError("cycle pair is not a 2-shadow");
    }

    const ThirdVertexSets third = third_vertex_sets(h, cyc[0], cyc[len - 1]);
    CycleExtension ext;
    ext.cycle = ci;
    std::vector<Vertex> closing;
    for (unsigned c = 0; c < r; ++c) {
      closing.insert(closing.end(), third.by_class[c].begin(), third.by_class[c].end());
      if (third.by_class[c].size() > third.by_class[ext.closing_class].size()) ext.closing_class = c;
    }
    std::sort(closing.begin(), closing.end());
    ext.closing = closing.size();
    if (closing.empty()) {
      report.skipped.push_back(ci);
      continue;
    }

    ext.vacuous = true;
    if (context.type) {
      const double avoid = 2.0 * ell * r * std::pow(static_cast<double>(n_log), static_cast<double>(r) - 3);
      const unsigned c1 = h.class_of(cyc[0]);
      const unsigned c2 = h.class_of(cyc[1]);
      const unsigned ca = ext.closing_class;
      const double base12 = context.type->delta(c1, c2) / scale - avoid;
      const double base1a = context.type->delta(h.class_of(cyc[len - 1]), ca) / scale - avoid;
      const double base2a = context.type->delta(c1, ca) / scale - avoid;
      ext.vacuous = base12 <= 0 || base1a <= 0 || base2a <= 0;
      ext.bound = ext.vacuous ? 0.0 : std::pow(base12, 2.0 * ell - 1) * base1a * base2a;
    }

    Extender counter(h, ell);
    Extender emitter(h, ell);
    emitter.visit = visit;
    for (Vertex x : closing) {
      std::vector<Vertex> hinges(cyc.begin(), cyc.end());
      hinges.push_back(x);
      ext.extensions += counter.count(hinges);
      if (visit && (budget == 0 || emitted < budget)) {
        emitter.budget = budget == 0 ? 0 : budget - emitted;
        emitter.emitted = 0;
        emitter.emit(hinges);
        emitted += emitter.emitted;
      }
    }
    report.total += ext.extensions;
    report.per_cycle.push_back(std::move(ext));
  }
  report.emitted = emitted;
  return report;
}

}  // namespace hypersat

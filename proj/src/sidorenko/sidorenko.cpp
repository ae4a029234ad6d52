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


#include "hypersat/sidorenko.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypersat/constructions.hpp"
#include "hypersat/counting.hpp"

namespace hypersat {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_t_k(const Hypergraph& h) {
  if (h.edge_count() == 0 || h.vertex_count() == 0) return kNegInf;
  return log_big(factorial(h.uniformity()) * h.edge_count()) - h.uniformity() * std::log(double(h.vertex_count()));
}

// Fills the gap fields of a report whose hom and log densities are set.
void fill_gap(DensityReport& out, const Hypergraph& f, const Hypergraph& h) {
  const unsigned r = h.uniformity();
  if (out.hom == 0) {
    out.gap_reason = "hom(F, H) = 0";
  } else if (h.edge_count() == 0) {
    out.gap_reason = "t_K(H) = 0";
  } else if (factorial(r) * h.edge_count() >= ipow(BigInt(h.vertex_count()), r)) {
    out.gap_reason = "t_K(H) >= 1";
  } else {
    out.gap = out.log_tF / out.log_tK - static_cast<double>(f.edge_count());
  }
}

}  // namespace

DensityReport hom_density(const Hypergraph& f, const Hypergraph& h, unsigned threads) {
  if (h.vertex_count() == 0) throw PreconditionError("density needs a host with at least one vertex");
  DensityReport out;
  out.hom = hom_count(f, h, threads).value;
  out.log_tF = out.hom == 0 ? kNegInf : log_big(out.hom) - f.vertex_count() * std::log(double(h.vertex_count()));
  out.log_tK = log_t_k(h);
  fill_gap(out, f, h);
  return out;
}

const char* to_string(Sidorenko s) {
  switch (s) {
    case Sidorenko::holds:
      return "holds";
    case Sidorenko::violated:
      return "violated";
    case Sidorenko::undefined:
      return "undefined";
  }
  return "undefined";
}

Sidorenko sidorenko_check(const Hypergraph& f, const Hypergraph& h, const BigInt& hom) {
  if (f.uniformity() != h.uniformity()) throw PreconditionError("uniformity mismatch");
  if (h.edge_count() == 0) return Sidorenko::undefined;
  const unsigned r = h.uniformity();
  const BigInt n = h.vertex_count();
  const auto ef = static_cast<unsigned>(f.edge_count());
  const BigInt lhs = hom * ipow(n, r * ef);
  const BigInt rhs = ipow(factorial(r) * h.edge_count(), ef) * ipow(n, static_cast<unsigned>(f.vertex_count()));
  return lhs < rhs ? Sidorenko::violated : Sidorenko::holds;
}

Sidorenko sidorenko_check(const Hypergraph& f, const Hypergraph& h, unsigned threads) {
  if (f.uniformity() != h.uniformity()) throw PreconditionError("uniformity mismatch");
  if (h.edge_count() == 0) return Sidorenko::undefined;
  return sidorenko_check(f, h, hom_count(f, h, threads).value);
}

double gap_estimate(const Hypergraph& f, const Hypergraph& h, unsigned threads) {
  const auto d = hom_density(f, h, threads);
  if (!d.gap) throw PreconditionError("gap estimate undefined: " + d.gap_reason);
  return *d.gap;
}

double edge_exponent(const Hypergraph& h) {
  if (h.edge_count() == 0 || h.vertex_count() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double ln_n = std::log(double(h.vertex_count()));
  return (h.uniformity() * ln_n - std::log(double(h.edge_count()))) / ln_n;
}

const char* to_string(RescaleReport::Branch b) {
  return b == RescaleReport::Branch::blow_up ? "blow_up" : "percolation";
}

BigInt blow_up_copy_count(const Hypergraph& f, const Hypergraph& h, std::size_t t) {
  if (t == 1) return labeled_copy_count(f, h).value;
  // Fibers of size k contribute (t)_k; tabulate for k <= v(F).
  const std::size_t v = f.vertex_count();
  std::vector<std::uint64_t> falling(v + 1, 1);
  for (std::size_t k = 1; k <= v; ++k) falling[k] = k > t ? 0 : falling[k - 1] * (t - k + 1);
  BigInt total = 0;
  std::uint64_t batch = 0;
  std::vector<Vertex> sorted(v);
  for_each_homomorphism(f, h, false, [&](std::span<const Vertex> image) {
    std::copy(image.begin(), image.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end());
    BigInt ways = 1;
    std::uint64_t small = 1;
    bool wide = false;
    for (std::size_t i = 0; i < v;) {
      std::size_t j = i;
      while (j < v && sorted[j] == sorted[i]) ++j;
      const auto factor = falling[j - i];
      if (factor == 0) return;
      if (!wide && small <= (~std::uint64_t{0}) / factor) {
        small *= factor;
      } else {
        if (!wide) ways = small;
        wide = true;
        ways *= factor;
      }
      i = j;
    }
    if (wide) {
      total += ways;
    } else if (batch > (~std::uint64_t{0}) - small) {
      total += batch;
      batch = small;
    } else {
      batch += small;
    }
  });
  return total + batch;
}

RescaleReport rescale_witness(const Hypergraph& h, double delta, const Hypergraph& f, RngSeed seed,
                              const RescaleOptions& options, unsigned threads) {
  if (!(delta > 0 && delta < 1)) throw PreconditionError("target delta must lie in (0, 1)");
  DensityReport density;
  if (options.known_hom) {
    if (h.vertex_count() == 0) throw PreconditionError("density needs a host with at least one vertex");
    density.hom = *options.known_hom;
    density.log_tF = density.hom == 0 ? kNegInf : log_big(density.hom) - f.vertex_count() * std::log(double(h.vertex_count()));
    density.log_tK = log_t_k(h);
    fill_gap(density, f, h);
  } else {
    density = hom_density(f, h, threads);
  }
  if (!density.gap || *density.gap <= 0) {
    throw PreconditionError("H is not a gap witness for F" +
                            (density.gap ? std::string(" (gap estimate is not positive)") : ": " + density.gap_reason));
  }
  const unsigned r = h.uniformity();
  const double m = double(h.vertex_count());
  RescaleReport out;
  out.source_delta = edge_exponent(h);
  out.target_delta = delta;
  out.source_hom = density.hom;
  out.source_copies = options.known_copies ? *options.known_copies : labeled_copy_count(f, h, threads).value;

  if (delta <= out.source_delta) {
    out.branch = RescaleReport::Branch::blow_up;
    const double raw = std::pow(m, out.source_delta / delta - 1.0);
    out.t = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    out.t = std::max<std::size_t>(out.t, 1);
    out.target_n = m * double(out.t);
    out.achieved_vertices = h.vertex_count() * out.t;
    const BigInt edges = BigInt(h.edge_count()) * ipow(BigInt(out.t), r);
    if (edges > 5000000) throw BudgetExceeded("blow-up with t = " + std::to_string(out.t) + " is too large");
    auto blown = blow_up(h, out.t);
    if (blown.edge_count() != edges || blown.vertex_count() != out.achieved_vertices) {
      throw Error("internal error: blow-up size mismatch");
    }
    out.achieved_edges = blown.edge_count();
    out.achieved_delta = edge_exponent(blown);
    out.copy_upper_observed = blow_up_copy_count(f, h, out.t);
    out.copy_bound = density.hom * ipow(BigInt(out.t), static_cast<unsigned>(f.vertex_count()));
    out.success = out.copy_upper_observed <= out.copy_bound;
    out.trials = 1;
    std::vector<Vertex> ids(blown.vertex_count());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Vertex>(i);
    out.output = Subhypergraph{std::move(blown), std::move(ids)};
    return out;
  }

  out.branch = RescaleReport::Branch::percolation;
  const double formula = std::pow(m, out.source_delta / delta - 1.0) * std::pow(1.5, 2.0 * r / delta);
  if (options.p_override) {
    if (!(*options.p_override > 0 && *options.p_override <= 1)) throw PreconditionError("p override must lie in (0, 1]");
    out.p = *options.p_override;
    out.p_overridden = true;
  } else {
    out.p = std::min(formula, 1.0);
  }
  out.p_capped = formula >= 1.0;
  out.target_n = m * out.p;
  out.expected_edges = double(h.edge_count()) * std::pow(out.p, r);
  out.expected_copies = out.source_copies.convert_to<double>() * std::pow(out.p, double(f.vertex_count()));

  for (std::size_t trial = 0; trial < options.max_trials; ++trial) {
    auto perc = percolate_vertices(h, out.p, RngSeed{mix_seed(seed.value, trial)});
    PercolationEvents ev;
    ev.vertices = perc.kept_vertices;
    ev.edges = perc.surviving_edges;
    ev.copies = labeled_copy_count(f, perc.result.graph, threads).value;
    ev.a = double(ev.vertices) >= out.target_n / 2 && double(ev.vertices) <= 1.5 * out.target_n;
    ev.b = double(ev.edges) >= out.expected_edges / 2;
    ev.c = ev.copies == 0 || ev.copies.convert_to<double>() < 2 * out.expected_copies;
    out.trials = trial + 1;
    out.events = ev;
    if (ev.a && ev.b && ev.c) {
      out.success = true;
      out.achieved_vertices = ev.vertices;
      out.achieved_edges = ev.edges;
      out.achieved_delta = edge_exponent(perc.result.graph);
      out.copy_upper_observed = ev.copies;
      out.output = std::move(perc.result);
      break;
    }
  }
  return out;
}

Hypergraph tensor_power_witness(const Hypergraph& h, unsigned k, const TensorCaps& caps) {
  if (k < 1) throw PreconditionError("tensor power needs k >= 1");
  const BigInt vertices = ipow(BigInt(h.vertex_count()), k);
  const BigInt edges = ipow(factorial(h.uniformity()), k - 1) * ipow(BigInt(h.edge_count()), k);
  if (vertices > caps.max_vertices || edges > caps.max_edges) {
    throw BudgetExceeded("tensor power k = " + std::to_string(k) + " needs " + vertices.str() + " vertices and " +
                         edges.str() + " edges");
  }
  Hypergraph out = h;
  for (unsigned i = 1; i < k; ++i) out = tensor_product(out, h);
  return out;
}

TensorPowerReport tensor_power_report(const Hypergraph& f, const Hypergraph& h, unsigned k, const TensorCaps& caps,
                                      unsigned threads) {
  const auto power = tensor_power_witness(h, k, caps);
  TensorPowerReport out;
  out.k = k;
  out.vertices = power.vertex_count();
  out.edges = power.edge_count();
  const auto density = hom_density(f, power, threads);
  out.hom = density.hom;
  out.hom_power = ipow(hom_count(f, h, threads).value, k);
  out.gap = density.gap;
  if (out.hom > 0 && h.edge_count() > 0) {
    const unsigned r = h.uniformity();
    const BigInt adjusted_tk_num = factorial(r) * ipow(BigInt(h.edge_count()), k);
    if (adjusted_tk_num < ipow(BigInt(power.vertex_count()), r)) {
      const double log_tk = log_big(adjusted_tk_num) - r * std::log(double(power.vertex_count()));
      out.adjusted_gap = density.log_tF / log_tk - double(f.edge_count());
    }
  }
  return out;
}

}  // namespace hypersat

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
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "hypersat/supersat.hpp"

namespace hypersat {

GreedySchedule greedy_schedule(unsigned r, unsigned ell) {
  if (r < 3 || ell < 1) throw PreconditionError("greedy schedule needs r >= 3 and l >= 1");
  GreedySchedule s;
  s.r = r;
  s.ell = ell;
  const unsigned len = 2 * ell + 1;
  const auto hinge = [&](unsigned k) { return k % len; };
  const auto inner = [&](unsigned i, unsigned j) { return len + (i - 1) * (r - 2) + (j - 1); };

  std::vector<unsigned> seq;
  for (unsigned j = 1; j <= r - 2; ++j) seq.push_back(inner(1, j));
  seq.push_back(hinge(0));
  seq.push_back(hinge(1));
  s.seed = seq;

  // f[i] is the ordered edge that first holds w_{i-1} and w_i.
  std::vector<std::vector<unsigned>> f(len + 2);
  f[1] = seq;
  const auto grow = [&](unsigned label, unsigned slot) {
    s.steps.push_back({std::vector<unsigned>(seq.end() - (r - 1), seq.end()), label});
    seq.push_back(label);
    f[slot].assign(seq.end() - r, seq.end());
  };
  for (unsigned i = 1; i + 1 <= ell; ++i) {
    grow(hinge(2 * ell + 1 - i), 2 * ell + 2 - i);
    grow(hinge(i + 1), i + 1);
  }
  grow(hinge(ell + 1), ell + 1);
  f[ell + 2] = f[ell + 1];

  for (unsigned i = 2; i <= len; ++i) {
    const unsigned a = hinge(i - 1);
    const unsigned b = hinge(i);
    std::vector<unsigned> order;
    for (unsigned x : f[i]) {
      if (x != a && x != b) order.push_back(x);
    }
    if (order.size() != r - 2) throw Error("greedy schedule: slot edge lost a hinge");
    order.push_back(a);
    order.push_back(b);
    for (unsigned j = 1; j <= r - 2; ++j) {
      std::vector<unsigned> window(order.begin() + 1, order.end());
      s.steps.push_back({window, inner(i, j)});
      window.push_back(inner(i, j));
      order = std::move(window);
    }
  }
  return s;
}

namespace {

using Wide = unsigned __int128;
using SignedWide = __int128;

// Distinct-representative counting over the tail of the schedule whose
// windows only use earlier labels.
struct Partitions {
  // Terms grouped by coefficient; flat holds [block count, block masks...]
  // per term in group order.
  struct Group {
    long long coeff = 0;
    std::size_t terms = 0;
  };
  std::vector<Group> groups;
  std::vector<unsigned char> flat;

  explicit Partitions(unsigned m) {
    std::vector<unsigned> block_of(m, 0);
    std::map<long long, std::vector<std::vector<unsigned char>>> by_coeff;
    recurse(block_of, 0, 0, m, by_coeff);
    for (auto& [coeff, terms] : by_coeff) {
      groups.push_back({coeff, terms.size()});
      for (auto& t : terms) {
        flat.push_back(static_cast<unsigned char>(t.size()));
        flat.insert(flat.end(), t.begin(), t.end());
      }
    }
  }

  void recurse(std::vector<unsigned>& block_of, unsigned i, unsigned blocks, unsigned m,
               std::map<long long, std::vector<std::vector<unsigned char>>>& out) {
    if (i == m) {
      std::vector<unsigned char> masks(blocks, 0);
      for (unsigned k = 0; k < m; ++k) masks[block_of[k]] |= static_cast<unsigned char>(1u << k);
      long long coeff = 1;
      for (unsigned mask : masks) {
        const int size = std::popcount(mask);
        long long c = size % 2 == 1 ? 1 : -1;
        for (int k = 2; k < size; ++k) c *= k;
        coeff *= c;
      }
      out[coeff].push_back(std::move(masks));
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      block_of[i] = b;
      recurse(block_of, i + 1, b == blocks ? blocks + 1 : blocks, m, out);
    }
  }
};

std::string shadow_name(std::span<const Vertex> w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "}";
}

struct PairBits {
  std::size_t words = 0;
  std::size_t n = 0;
  std::vector<std::int32_t> dense;
  std::unordered_map<std::uint64_t, std::int32_t> sparse;
  std::vector<std::uint64_t> bits;

  explicit PairBits(const Hypergraph& h) : words((h.vertex_count() + 63) / 64), n(h.vertex_count()) {
    if (n <= 2048) dense.assign(n * n, -1);
    for (EdgeId id = 0; id < h.edge_count(); ++id) {
      const auto e = h.edge(id);
      for (int i = 0; i < 3; ++i) {
        const Vertex x = e[(i + 2) % 3];
        std::uint64_t* row = slot(e[i], e[(i + 1) % 3], true);
        row[x / 64] |= std::uint64_t{1} << (x % 64);
      }
    }
  }

  std::uint64_t* slot(Vertex a, Vertex b, bool make) {
    if (a > b) std::swap(a, b);
    std::int32_t idx = -1;
    if (!dense.empty()) {
      idx = dense[static_cast<std::size_t>(a) * n + b];
    } else if (auto it = sparse.find((std::uint64_t{a} << 32) | b); it != sparse.end()) {
      idx = it->second;
    }
    if (idx < 0) {
      if (!make) return nullptr;
      idx = static_cast<std::int32_t>(bits.size() / words);
      bits.resize(bits.size() + words, 0);
      if (!dense.empty()) {
        dense[static_cast<std::size_t>(a) * n + b] = idx;
      } else {
        sparse[(std::uint64_t{a} << 32) | b] = idx;
      }
    }
    return bits.data() + static_cast<std::size_t>(idx) * words;
  }

  const std::uint64_t* find(Vertex a, Vertex b) const {
    if (dense.empty()) return const_cast<PairBits*>(this)->slot(a, b, false);
    if (a > b) std::swap(a, b);
    const std::int32_t idx = dense[static_cast<std::size_t>(a) * n + b];
    return idx < 0 ? nullptr : bits.data() + static_cast<std::size_t>(idx) * words;
  }
};

struct Shared {
  const Hypergraph& h;
  std::size_t a;
  const GreedySchedule& sched;
  const GreedyOptions& options;
  std::size_t suffix_start;  // count_only: steps from here are counted in bulk
  const Partitions* partitions = nullptr;
  const PairBits* pair_bits = nullptr;
};

class Worker {
 public:
  explicit Worker(const Shared& s)
      : s_(s),
        n_(s.h.vertex_count()),
        words_((n_ + 63) / 64),
        r_(s.h.uniformity()),
        assign_(s.sched.label_count(), 0),
        used_(n_, 0),
        used_bits_(words_, 0) {
    const std::size_t m = s.sched.steps.size() - s.suffix_start;
    suffix_sets_.assign(m * words_, 0);
    inter_.assign((std::size_t{1} << m) * words_, 0);
    window_.resize(r_ - 1);
    candidates_.resize(s.sched.steps.size());
  }

  Rng* rng = nullptr;
  std::function<bool(const CycleCertificate&)> visit;
  std::size_t budget = 0;
  std::size_t emitted = 0;
  bool stopped = false;

  void run_seed(EdgeId id) {
    std::vector<Vertex> order(s_.h.edge(id).begin(), s_.h.edge(id).end());
    do {
      for (std::size_t k = 0; k < r_; ++k) set(s_.sched.seed[k], order[k]);
      descend(0);
      for (std::size_t k = 0; k < r_; ++k) unset(s_.sched.seed[k]);
      if (stopped) return;
    } while (std::next_permutation(order.begin(), order.end()));
  }

  BigInt take_count() {
    flush();
    return std::exchange(count_, BigInt{});
  }

 private:
  void set(unsigned label, Vertex v) {
    assign_[label] = v;
    used_[v] = 1;
    used_bits_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  void unset(unsigned label) {
    const Vertex v = assign_[label];
    used_[v] = 0;
    used_bits_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  void flush() {
    if (acc_ != 0) {
      BigInt hi = static_cast<std::uint64_t>(acc_ >> 64);
      count_ += (hi << 64) + static_cast<std::uint64_t>(acc_);
      acc_ = 0;
    }
  }

  // Extension vertices of the window's shadow that are still free.
  void collect(const GreedySchedule::Step& step, std::vector<Vertex>& out) {
    for (std::size_t k = 0; k + 1 < r_; ++k) window_[k] = assign_[step.window[k]];
    sorted_ = window_;
    std::sort(sorted_.begin(), sorted_.end());
    const auto& sorted = sorted_;
    out.clear();
    std::size_t codegree = 0;
    for (EdgeId id : s_.h.pair_edges(sorted[0], sorted[1])) {
      const auto e = s_.h.edge(id);
      if (!std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) continue;
      ++codegree;
      for (Vertex x : e) {
        if (!std::binary_search(sorted.begin(), sorted.end(), x)) {
          if (!used_[x]) out.push_back(x);
          break;
        }
      }
    }
    if (codegree < s_.a) {
      throw PreconditionError("shadow " + shadow_name(sorted) + " has codegree " + std::to_string(codegree) +
                              " < A = " + std::to_string(s_.a));
    }
  }

  void descend(std::size_t k) {
    const auto& steps = s_.sched.steps;
    if (s_.options.count_only && k == s_.suffix_start) {
      bulk();
      return;
    }
    if (k == steps.size()) {
      emit();
      return;
    }
    auto& cand = candidates_[k];
    collect(steps[k], cand);
    if (rng != nullptr) rng->shuffle(cand.begin(), cand.end());
    const unsigned target = steps[k].target;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      set(target, cand[i]);
      descend(k + 1);
      unset(target);
      if (stopped) return;
    }
  }

  void emit() {
    const unsigned len = 2 * s_.sched.ell + 1;
    std::vector<Vertex> hinges(assign_.begin(), assign_.begin() + len);
    std::vector<std::vector<Vertex>> interior(len);
    for (unsigned i = 0; i < len; ++i) {
      const auto first = assign_.begin() + len + static_cast<std::ptrdiff_t>(i * (r_ - 2));
      interior[i].assign(first, first + (r_ - 2));
    }
    ++emitted;
    ++acc_;
    bool more = true;
    if (visit) more = visit(make_certificate(r_, s_.sched.ell, std::move(hinges), std::move(interior)));
    if (!more || (budget != 0 && emitted >= budget)) stopped = true;
  }

  // Popcounts of the intersection of every nonempty subfamily of suffix
  // sets; W > 0 fixes the word count at compile time.
  template <std::size_t W>
  void intersect(std::size_t m) {
    const std::size_t words = W == 0 ? words_ : W;
    const std::size_t masks = std::size_t{1} << m;
    for (std::size_t mask = 1; mask < masks; ++mask) {
      const std::size_t low = mask & (~mask + 1);
      const std::size_t rest = mask ^ low;
      const std::uint64_t* single = suffix_sets_.data() + static_cast<std::size_t>(std::countr_zero(low)) * words;
      std::uint64_t* out = inter_.data() + mask * words;
      unsigned pc = 0;
      if (rest == 0) {
        for (std::size_t w = 0; w < words; ++w) {
          out[w] = single[w];
          pc += static_cast<unsigned>(std::popcount(out[w]));
        }
      } else {
        const std::uint64_t* prev = inter_.data() + rest * words;
        for (std::size_t w = 0; w < words; ++w) {
          out[w] = prev[w] & single[w];
          pc += static_cast<unsigned>(std::popcount(out[w]));
        }
      }
      popcounts_[mask] = pc;
    }
  }

  void bulk() {
    const auto& steps = s_.sched.steps;
    const std::size_t m = steps.size() - s_.suffix_start;
    for (std::size_t k = 0; k < m; ++k) {
      const auto& step = steps[s_.suffix_start + k];
      std::uint64_t* dst = suffix_sets_.data() + k * words_;
      const std::uint64_t* src = nullptr;
      if (s_.pair_bits != nullptr) src = s_.pair_bits->find(assign_[step.window[0]], assign_[step.window[1]]);
      if (src != nullptr || s_.pair_bits != nullptr) {
        std::size_t codegree = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          const std::uint64_t row = src ? src[w] : 0;
          codegree += static_cast<std::size_t>(std::popcount(row));
          dst[w] = row & ~used_bits_[w];
        }
        if (codegree < s_.a) {
          std::vector<Vertex> sh{assign_[step.window[0]], assign_[step.window[1]]};
          std::sort(sh.begin(), sh.end());
          throw PreconditionError("shadow " + shadow_name(sh) + " has codegree " + std::to_string(codegree) +
                                  " < A = " + std::to_string(s_.a));
        }
      } else {
        collect(step, scratch_);
        std::fill(dst, dst + words_, 0);
        for (Vertex x : scratch_) dst[x / 64] |= std::uint64_t{1} << (x % 64);
      }
    }
    switch (words_) {
      case 1: intersect<1>(m); break;
      case 2: intersect<2>(m); break;
      case 3: intersect<3>(m); break;
      case 4: intersect<4>(m); break;
      default: intersect<0>(m); break;
    }
    const auto& parts = *s_.partitions;
    SignedWide total = 0;
    std::size_t at = 0;
    for (const auto& group : parts.groups) {
      std::uint64_t sum = 0;
      Wide wide = 0;
      for (std::size_t t = 0; t < group.terms; ++t) {
        const unsigned len = parts.flat[at++];
        std::uint64_t prod = 1;
        for (unsigned b = 0; b < len; ++b) prod *= popcounts_[parts.flat[at + b]];
        at += len;
        if (sum > (~std::uint64_t{0} >> 1)) {
          wide += sum;
          sum = 0;
        }
        sum += prod;
      }
      total += static_cast<SignedWide>(wide + sum) * group.coeff;
    }
    if (total < 0) throw Error("greedy count: negative inclusion-exclusion total");
    acc_ += static_cast<Wide>(total);
    if (acc_ >> 120) flush();
  }

  const Shared& s_;
  std::size_t n_;
  std::size_t words_;
  unsigned r_;
  std::vector<Vertex> assign_;
  std::vector<char> used_;
  std::vector<std::uint64_t> used_bits_;
  std::vector<std::uint64_t> suffix_sets_;
  std::vector<std::uint64_t> inter_;
  std::array<std::uint64_t, 64> popcounts_{};
  std::vector<Vertex> window_;
  std::vector<Vertex> sorted_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> scratch_;
  Wide acc_ = 0;
  BigInt count_;
};

// Longest tail of steps whose windows avoid the tail's own targets, capped so
// the bulk count stays small and fits in 128 bits.
std::size_t independent_suffix(const GreedySchedule& s, std::size_t n) {
  const double bits = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  const std::size_t cap = std::min<std::size_t>(6, std::max<std::size_t>(1, static_cast<std::size_t>(60.0 / bits)));
  std::size_t start = s.steps.size();
  while (start > 0 && s.steps.size() - start < cap) {
    const auto& cand = s.steps[start - 1];
    bool ok = true;
    for (std::size_t k = start; k < s.steps.size() && ok; ++k) {
      const auto& later = s.steps[k];
      ok = std::find(later.window.begin(), later.window.end(), cand.target) == later.window.end() &&
           std::find(cand.window.begin(), cand.window.end(), later.target) == cand.window.end();
    }
    if (!ok) break;
    --start;
  }
  return start;
}

}  // namespace

GreedyReport greedy_expand_cycles(const Hypergraph& h, std::size_t a, unsigned ell, std::size_t budget,
                                  RngSeed seed, const GreedyOptions& options,
                                  const std::function<bool(const CycleCertificate&)>& visit) {
  const unsigned r = h.uniformity();
  const GreedySchedule sched = greedy_schedule(r, ell);
  const std::size_t span = static_cast<std::size_t>(2 * ell + 1) * (r - 1);
  if (options.check_threshold) {
    const std::size_t need = options.strict_threshold ? 2 * span : span;
    if (a <= need) throw PreconditionError("greedy expansion needs A > " + std::to_string(need));
  }

  GreedyReport report;
  if (a > span) {
    report.floor = BigInt(h.edge_count()) * ipow(BigInt(a - span), 2 * ell * (r - 1) - 1);
  }

  std::optional<Partitions> partitions;
  std::optional<PairBits> pair_bits;
  std::size_t suffix = sched.steps.size();
  if (options.count_only) {
    suffix = independent_suffix(sched, h.vertex_count());
    partitions.emplace(static_cast<unsigned>(sched.steps.size() - suffix));
    if (r == 3) pair_bits.emplace(h);
  }
  const Shared shared{h, a, sched, options, suffix, partitions ? &*partitions : nullptr,
                      pair_bits ? &*pair_bits : nullptr};

  if (!options.count_only) {
    Worker w(shared);
    std::optional<Rng> rng;
    std::vector<EdgeId> order(h.edge_count());
    for (EdgeId id = 0; id < order.size(); ++id) order[id] = id;
    if (options.shuffle) {
      rng.emplace(seed);
      rng->shuffle(order.begin(), order.end());
      w.rng = &*rng;
    }
    w.visit = visit;
    w.budget = budget;
    for (EdgeId id : order) {
      w.run_seed(id);
      if (w.stopped) break;
    }
    report.certificates = w.emitted;
    report.exhausted = !w.stopped;
    return report;
  }

  const unsigned threads = std::max(1u, options.threads);
  std::atomic<EdgeId> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;
  BigInt total;
  const auto work = [&] {
    Worker w(shared);
    try {
      while (!failed.load()) {
        const EdgeId id = next.fetch_add(1);
        if (id >= h.edge_count()) break;
        w.run_seed(id);
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      failed = true;
    }
    std::lock_guard lock(mu);
    total += w.take_count();
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  report.certificates = total;
  return report;
}

}  // namespace hypersat

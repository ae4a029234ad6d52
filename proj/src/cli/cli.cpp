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

#include "hypersat/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypersat/bounds.hpp"
#include "hypersat/constructions.hpp"
#include "hypersat/counting.hpp"
#include "hypersat/io.hpp"
#include "hypersat/oracles.hpp"
#include "hypersat/report.hpp"
#include "hypersat/sidorenko.hpp"

namespace hypersat {

namespace {

struct Common {
  std::string format = "plain";
  std::string output;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Subcommand result; plain overrides the default plain rendering.
struct Outcome {
  Report report;
  std::optional<std::string> plain;
  int status = kExitOk;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"plain", "structured", "json"}));
  sub->add_option("--output", c.output, "Write the report here instead of stdout");
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

unsigned small(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || v > 100000) throw PreconditionError("bad " + what + " '" + s + "'");
  return static_cast<unsigned>(v);
}

void describe(ReportRecord& rec, const std::string& prefix, const Hypergraph& h) {
  rec.add(prefix + ".r", std::uint64_t{h.uniformity()});
  rec.add(prefix + ".n", std::uint64_t{h.vertex_count()});
  rec.add(prefix + ".m", std::uint64_t{h.edge_count()});
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

std::string optional_log(const std::optional<double>& x) { return x ? decimal_string(*x) : "undefined"; }

// generate

struct GenerateOptions {
  Common common;
  std::string family;
  unsigned r = 3;
  unsigned length = 3;
  std::size_t n = 9;
  std::size_t s = 2;
  std::size_t t = 2;
  std::size_t m = 0;
  double p = 0.5;
  unsigned girth = 3;
  std::size_t attempts = 10000;
  std::string input;
  std::string input2;
  std::string write;
};

Outcome generate(const GenerateOptions& o) {
  Hypergraph h;
  const auto& f = o.family;
  if (f == "edge") {
    h = single_edge(o.r);
  } else if (f == "cycle") {
    h = linear_cycle(o.r, o.length);
  } else if (f == "path") {
    h = linear_path(o.r, o.length);
  } else if (f == "complete") {
    h = complete_hypergraph(o.r, o.n);
  } else if (f == "partite") {
    h = complete_partite(o.r, o.s).graph();
  } else if (f == "sts9") {
    h = steiner_triple_9();
  } else if (f == "random") {
    h = random_uniform(o.n, o.r, o.m, RngSeed{o.common.seed});
  } else if (f == "high-girth") {
    h = greedy_high_girth(o.n, o.r, o.girth, o.attempts, RngSeed{o.common.seed});
  } else {
    if (o.input.empty()) throw PreconditionError("family '" + f + "' needs --input");
    const Hypergraph base = read_hypergraph(o.input);
    if (f == "blowup") {
      h = blow_up(base, o.t);
    } else if (f == "percolate") {
      h = percolate_vertices(base, o.p, RngSeed{o.common.seed}).result.graph;
    } else {
      if (o.input2.empty()) throw PreconditionError("family 'tensor' needs --input2");
      h = tensor_product(base, read_hypergraph(o.input2));
    }
  }
  Outcome out;
  ReportRecord rec{"generate", "", {}, ReportRecord::Status::report};
  rec.add("family", f);
  describe(rec, "graph", h);
  out.report.records.push_back(std::move(rec));
  const std::string text = format_hypergraph(h);
  if (!o.write.empty()) {
    write_hypergraph(h, o.write);
    out.plain = "wrote " + o.write + " (" + std::to_string(h.uniformity()) + " " + std::to_string(h.vertex_count()) +
                " " + std::to_string(h.edge_count()) + ")\n";
  } else {
    out.plain = text;
  }
  out.report.hypergraph = text;
  return out;
}

// count

struct CountOptions {
  Common common;
  std::string mode;
  std::string pattern;
  std::string host;
  std::size_t budget = 2;
};

Outcome count(const CountOptions& o) {
  const Hypergraph h = read_hypergraph(o.host);
  Outcome out;
  ReportRecord rec{"count", "", {}, ReportRecord::Status::report};
  rec.add("mode", o.mode);
  describe(rec, "host", h);
  std::string value;
  if (o.mode == "girth") {
    const auto g = berge_girth(h);
    value = g.girth ? std::to_string(*g.girth) : "inf";
    rec.add("girth", value);
  } else if (o.mode == "trees") {
    const auto t = enumerate_linear_trees(h, o.budget);
    rec.add("max_edges", std::uint64_t{o.budget});
    for (std::size_t k = 0; k < t.by_size.size(); ++k) rec.add("trees." + std::to_string(k), t.by_size[k]);
    rec.add("bound", t.bound);
    value = t.total.str();
    rec.add("total", value);
  } else {
    if (o.pattern.empty()) throw PreconditionError("mode '" + o.mode + "' needs --pattern");
    const Hypergraph f = resolve_pattern(o.pattern);
    rec.add("pattern", o.pattern);
    describe(rec, "pattern", f);
    if (o.mode == "hom") {
      value = hom_count(f, h, o.common.threads).value.str();
    } else if (o.mode == "labeled") {
      value = labeled_copy_count(f, h, o.common.threads).value.str();
    } else if (o.mode == "unlabeled") {
      const BigInt labeled = labeled_copy_count(f, h, o.common.threads).value;
      const BigInt aut = automorphism_count(f);
      rec.add("labeled", labeled);
      rec.add("automorphisms", aut);
      value = BigInt(labeled / aut).str();
    } else {
      const auto prof = homomorphic_image_profile(f, h);
      for (const auto& [key, c] : prof.counts) {
        rec.add(std::string(key.first ? "linear_tree." : "other.") + std::to_string(key.second), c);
      }
      value = prof.total.str();
    }
    rec.add(o.mode == "profile" ? "total" : "value", value);
  }
  out.report.records.push_back(std::move(rec));
  out.plain = value + "\n";
  return out;
}

// girth

struct HostOptions {
  Common common;
  std::string host;
};

Outcome girth(const HostOptions& o) {
  const Hypergraph h = read_hypergraph(o.host);
  const auto g = berge_girth(h);
  Outcome out;
  ReportRecord rec{"girth", "", {}, ReportRecord::Status::report};
  describe(rec, "host", h);
  const std::string value = g.girth ? std::to_string(*g.girth) : "inf";
  rec.add("girth", value);
  rec.add("linear", h.is_linear());
  if (g.girth) {
    rec.add("witness_vertices", join(g.witness_vertices));
    rec.add("witness_edges", join(g.witness_edges));
  }
  out.report.records.push_back(std::move(rec));
  out.plain = value + "\n";
  return out;
}

// density, gap

struct PairOptions {
  Common common;
  std::string pattern;
  std::string host;
  unsigned tensor = 1;
};

void density_values(ReportRecord& rec, const DensityReport& d, const Hypergraph& f, const Hypergraph& h) {
  rec.add("hom", d.hom);
  rec.add("log_tF", d.log_tF);
  rec.add("log_tK", d.log_tK);
  rec.add("gap", optional_log(d.gap));
  if (!d.gap_reason.empty()) rec.add("gap_reason", d.gap_reason);
  rec.add("sidorenko", to_string(sidorenko_check(f, h, d.hom)));
}

Outcome density(const PairOptions& o) {
  const Hypergraph h = read_hypergraph(o.host);
  const Hypergraph f = resolve_pattern(o.pattern);
  Outcome out;
  ReportRecord rec{"density", "", {}, ReportRecord::Status::report};
  rec.add("pattern", o.pattern);
  describe(rec, "pattern", f);
  describe(rec, "host", h);
  density_values(rec, hom_density(f, h, o.common.threads), f, h);
  out.report.records.push_back(std::move(rec));
  return out;
}

Outcome gap(const PairOptions& o) {
  const Hypergraph h = read_hypergraph(o.host);
  const Hypergraph f = resolve_pattern(o.pattern);
  Outcome out;
  ReportRecord rec{"gap", "", {}, ReportRecord::Status::report};
  rec.add("pattern", o.pattern);
  describe(rec, "host", h);
  const auto d = hom_density(f, h, o.common.threads);
  density_values(rec, d, f, h);
  rec.add("edge_exponent", edge_exponent(h));
  out.report.records.push_back(std::move(rec));
  if (o.tensor > 1) {
    const auto t = tensor_power_report(f, h, o.tensor, {}, o.common.threads);
    ReportRecord tr{"tensor-power", "", {}, ReportRecord::Status::report};
    tr.add("k", std::uint64_t{t.k});
    tr.add("vertices", std::uint64_t{t.vertices});
    tr.add("edges", std::uint64_t{t.edges});
    tr.add("hom", t.hom);
    tr.add("hom_power", t.hom_power);
    tr.add("multiplicative", t.hom == t.hom_power);
    tr.add("gap", optional_log(t.gap));
    tr.add("adjusted_gap", optional_log(t.adjusted_gap));
    out.report.records.push_back(std::move(tr));
  }
  if (o.tensor == 1 && d.gap) out.plain = decimal_string(*d.gap) + "\n";
  return out;
}

// rescale

struct RescaleCliOptions {
  Common common;
  std::string pattern;
  std::string host;
  double delta = 0.5;
  double epsilon = 0.0;
  std::size_t trials = 64;
  std::optional<double> p;
  std::string write;
};

Outcome rescale(const RescaleCliOptions& o) {
  const Hypergraph h = read_hypergraph(o.host);
  const Hypergraph f = resolve_pattern(o.pattern);
  RescaleOptions ro;
  ro.epsilon = o.epsilon;
  ro.max_trials = o.trials;
  ro.p_override = o.p;
  const auto rep = rescale_witness(h, o.delta, f, RngSeed{o.common.seed}, ro, o.common.threads);
  Outcome out;
  ReportRecord rec{"rescale", "", {}, rep.success ? ReportRecord::Status::pass : ReportRecord::Status::fail};
  rec.add("branch", to_string(rep.branch));
  rec.add("source_delta", rep.source_delta);
  rec.add("target_delta", rep.target_delta);
  rec.add("achieved_delta", rep.achieved_delta);
  rec.add("target_n", rep.target_n);
  rec.add("t", std::uint64_t{rep.t});
  rec.add("p", rep.p);
  rec.add("p_capped", rep.p_capped);
  rec.add("p_overridden", rep.p_overridden);
  rec.add("vertices", std::uint64_t{rep.achieved_vertices});
  rec.add("edges", std::uint64_t{rep.achieved_edges});
  rec.add("source_hom", rep.source_hom);
  rec.add("source_copies", rep.source_copies);
  rec.add("copies", rep.copy_upper_observed);
  if (rep.branch == RescaleReport::Branch::blow_up) {
    rec.add("copy_bound", rep.copy_bound);
  } else {
    rec.add("expected_copies", rep.expected_copies);
    rec.add("expected_edges", rep.expected_edges);
    rec.add("trials", std::uint64_t{rep.trials});
    rec.add("event_a", rep.events.a);
    rec.add("event_b", rep.events.b);
    rec.add("event_c", rep.events.c);
  }
  rec.add("success", rep.success);
  out.report.records.push_back(std::move(rec));
  if (!o.write.empty() && rep.output) write_hypergraph(rep.output->graph, o.write);
  return out;
}

// supersat

struct SupersatOptions {
  Common common;
  std::string host;
  std::optional<unsigned> r;
  unsigned ell = 2;
  std::string mode = "shadow";
  std::size_t budget = 1000;
  std::size_t trials = 16;
  std::size_t cycle_budget = 20000;
  std::optional<double> cleanup_factor;
  std::string trace = "stages";
};

Outcome supersat(const SupersatOptions& o) {
  const Hypergraph g = read_hypergraph(o.host);
  if (o.r && *o.r != g.uniformity()) {
    throw PreconditionError("--r " + std::to_string(*o.r) + " but the host is " + std::to_string(g.uniformity()) +
                            "-uniform");
  }
  PipelineOptions po;
  po.partition_trials = o.trials;
  po.cycle_budget = o.cycle_budget;
  po.cleanup_factor = o.cleanup_factor;
  const PipelineMode mode = o.mode == "induction" ? PipelineMode::induction : PipelineMode::shadow;
  const auto rep = supersat_pipeline(g, o.ell, mode, o.budget, RngSeed{o.common.seed}, po);
  Outcome out;
  for (const auto& t : rep.trace) out.report.records.push_back(record_from_trace(t));
  ReportRecord sum{"supersat", "", {}, ReportRecord::Status::report};
  sum.add("r", std::uint64_t{rep.r});
  sum.add("ell", std::uint64_t{rep.ell});
  describe(sum, "host", g);
  std::string modes;
  for (std::size_t i = 0; i < rep.modes.size(); ++i) modes += (i ? "," : "") + std::string(to_string(rep.modes[i]));
  sum.add("modes", modes);
  sum.add("certificates", std::uint64_t{rep.certificates.size()});
  sum.add("truncated", rep.truncated);
  out.report.records.push_back(std::move(sum));
  if (o.trace == "full") out.report.certificates = rep.certificates;
  if (!out.report.ok()) out.status = kExitDomain;
  return out;
}

// bounds

struct BoundsOptions {
  Common common;
  unsigned r = 3;
  unsigned ell = 2;
  std::size_t n = 0;
  std::uint64_t edges = 0;
  double slack = 0;
};

Outcome bounds(const BoundsOptions& o) {
  const auto b = bound_values(o.r, o.ell, o.n, o.edges, o.slack);
  Outcome out;
  ReportRecord rec{"bounds", "", {}, ReportRecord::Status::report};
  rec.add("r", std::uint64_t{b.r});
  rec.add("ell", std::uint64_t{b.ell});
  rec.add("n", std::uint64_t{b.n});
  rec.add("e", b.e);
  rec.add("slack", b.slack);
  rec.add("f(r)", b.f_r);
  rec.add("f(r-1)", b.f_prev ? rational_string(*b.f_prev) : "undefined");
  rec.add("weaker_exponent", b.weaker_exponent);
  rec.add("conditional_exponent", b.conditional_exponent);
  rec.add("coincide", b.coincide);
  rec.add("a_edge_exponent", b.a_edge_exponent ? rational_string(*b.a_edge_exponent) : "undefined");
  rec.add("a_vertex_exponent", b.a_vertex_exponent ? rational_string(*b.a_vertex_exponent) : "undefined");
  rec.add("a_value", optional_log(b.a_value));
  rec.add("delta", b.delta);
  rec.add("log_copy_lower_bound", b.log_copy_lower_bound);
  rec.add("conditional_copy_exponent", b.conditional_copy_exponent);
  rec.add("weaker_copy_exponent", b.weaker_copy_exponent);
  out.report.records.push_back(std::move(rec));
  return out;
}

// verify

struct VerifyOptions {
  Common common;
  std::string corpus;
  std::size_t count = 20;
};

struct NamedHost {
  std::string name;
  Hypergraph graph;
};

std::vector<NamedHost> verify_corpus(const VerifyOptions& o) {
  std::vector<NamedHost> hosts;
  if (!o.corpus.empty()) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(o.corpus)) throw Error("corpus '" + o.corpus + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.corpus)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& p : files) hosts.push_back({p.filename().string(), read_hypergraph(p.string())});
    if (hosts.empty()) throw Error("corpus '" + o.corpus + "' has no files");
    return hosts;
  }
  Rng rng(RngSeed{o.common.seed});
  for (std::size_t i = 0; i < o.count; ++i) {
    const unsigned r = 3 + static_cast<unsigned>(rng.below(2));
    const std::size_t n = r + 2 + rng.below(9 - r - 1);
    const std::size_t m = 1 + rng.below(std::min<std::size_t>(binomial(n, r), 3 * n));
    hosts.push_back({"random-" + std::to_string(i), random_uniform(n, r, m, RngSeed{mix_seed(o.common.seed, i)})});
  }
  return hosts;
}

Outcome verify(const VerifyOptions& o) {
  oracle::OracleBudget budget;
  budget.max_sequence_length = budget.max_host_vertices;
  Outcome out;
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;
  for (const auto& [name, h] : verify_corpus(o)) {
    ReportRecord rec{"verify", "", {}, ReportRecord::Status::pass};
    rec.add("host", name);
    describe(rec, "host", h);
    if (h.vertex_count() > budget.max_host_vertices) {
      rec.status = ReportRecord::Status::report;
      rec.add("skipped", "host above oracle budget");
      ++skipped;
      out.report.records.push_back(std::move(rec));
      continue;
    }
    const unsigned r = h.uniformity();
    const auto check = [&](const std::string& what, const std::string& fast, const auto& slow_fn) {
      std::string slow;
      try {
        slow = slow_fn();
      } catch (const BudgetExceeded&) {
        rec.add(what, "skipped (oracle budget)");
        ++skipped;
        return;
      }
      ++checks;
      rec.add(what, fast == slow ? fast : fast + " != " + slow);
      if (fast != slow) {
        ++mismatches;
        rec.status = ReportRecord::Status::fail;
      }
    };
    const auto g = berge_girth(h);
    check("girth", g.girth ? std::to_string(*g.girth) : "inf", [&] {
      const auto bg = oracle::brute_berge_girth(h, budget);
      return bg ? std::to_string(*bg) : std::string("inf");
    });
    std::vector<std::pair<std::string, Hypergraph>> patterns{{"edge:" + std::to_string(r), single_edge(r)},
                                                            {"path:" + std::to_string(r) + ":2", linear_path(r, 2)}};
    if (r == 3) patterns.emplace_back("cycle:3:3", linear_cycle(3, 3));
    for (const auto& [pname, f] : patterns) {
      check("hom " + pname, hom_count(f, h, o.common.threads).value.str(),
            [&] { return oracle::brute_hom(f, h, budget).str(); });
      check("copies " + pname, labeled_copy_count(f, h, o.common.threads).value.str(),
            [&] { return oracle::brute_copies(f, h, budget).str(); });
    }
    out.report.records.push_back(std::move(rec));
  }
  ReportRecord sum{"verify-summary", "", {}, mismatches == 0 ? ReportRecord::Status::pass : ReportRecord::Status::fail};
  sum.add("hosts", std::uint64_t{out.report.records.size()});
  sum.add("checks", std::uint64_t{checks});
  sum.add("mismatches", std::uint64_t{mismatches});
  sum.add("skipped", std::uint64_t{skipped});
  out.report.records.push_back(std::move(sum));
  if (mismatches != 0) out.status = kExitDomain;
  return out;
}

int deliver(const Outcome& o, const Common& c, const std::vector<std::string>& args, std::ostream& out) {
  Report report = o.report;
  report.command = args;
  const ReportFormat fmt = parse_report_format(c.format);
  const std::string text =
      fmt == ReportFormat::structured ? report_json(report) : (o.plain ? *o.plain : report_plain(report));
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw Error("cannot open '" + c.output + "' for writing");
    f << text;
    if (!f.flush()) throw Error("write to '" + c.output + "' failed");
  }
  return o.status;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, unsigned depth);

int run_config(const std::string& path, std::ostream& out, std::ostream& err, unsigned depth) {
  if (depth > 0) throw PreconditionError("a config cannot invoke 'run'");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const ExperimentConfig cfg = parse_config(buf.str());
  if (cfg.command == "run") throw PreconditionError("a config cannot invoke 'run'");
  return dispatch(config_arguments(cfg), out, err, depth + 1);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, unsigned depth) {
  CLI::App app{"Exact counting and supersaturation experiments on uniform hypergraphs", "hypersat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Build a hypergraph and write it in text format");
  add_common(g, gen.common);
  g->add_option("--family", gen.family, "Construction")
      ->required()
      ->check(CLI::IsMember(
          {"edge", "cycle", "path", "complete", "partite", "sts9", "random", "high-girth", "blowup", "percolate",
           "tensor"}));
  g->add_option("--r", gen.r, "Uniformity")->check(CLI::Range(2u, 64u));
  g->add_option("--length", gen.length, "Cycle or path length");
  g->add_option("--n", gen.n, "Vertex count");
  g->add_option("--s", gen.s, "Part size");
  g->add_option("--t", gen.t, "Blow-up factor");
  g->add_option("--m", gen.m, "Edge count");
  g->add_option("--p", gen.p, "Vertex retention probability")->check(CLI::Range(0.0, 1.0));
  g->add_option("--girth", gen.girth, "Minimum Berge girth");
  g->add_option("--attempts", gen.attempts, "Random edge proposals");
  g->add_option("--input", gen.input, "Source hypergraph");
  g->add_option("--input2", gen.input2, "Second tensor factor");
  g->add_option("--write", gen.write, "Write the hypergraph to this file");

  CountOptions cnt;
  auto* c = app.add_subcommand("count", "Homomorphisms, copies, girth, linear trees or image profile");
  add_common(c, cnt.common);
  c->add_option("--mode", cnt.mode, "What to count")
      ->required()
      ->check(CLI::IsMember({"hom", "labeled", "unlabeled", "girth", "trees", "profile"}));
  c->add_option("--pattern", cnt.pattern, "Pattern name or file");
  c->add_option("--host", cnt.host, "Host hypergraph file")->required();
  c->add_option("--budget", cnt.budget, "Maximum tree size for --mode trees");

  HostOptions gir;
  auto* gi = app.add_subcommand("girth", "Berge girth with a witness cycle");
  add_common(gi, gir.common);
  gi->add_option("--host", gir.host, "Host hypergraph file")->required();

  PairOptions den;
  auto* d = app.add_subcommand("density", "Homomorphism densities and the Sidorenko comparison");
  add_common(d, den.common);
  d->add_option("--pattern", den.pattern, "Pattern name or file")->required();
  d->add_option("--host", den.host, "Host hypergraph file")->required();

  PairOptions gp;
  auto* ga = app.add_subcommand("gap", "Sidorenko gap estimate, optionally across tensor powers");
  add_common(ga, gp.common);
  ga->add_option("--pattern", gp.pattern, "Pattern name or file")->required();
  ga->add_option("--host", gp.host, "Host hypergraph file")->required();
  ga->add_option("--tensor", gp.tensor, "Tensor power k")->check(CLI::Range(1u, 8u));

  RescaleCliOptions rs;
  auto* re = app.add_subcommand("rescale", "Move a witness to a target edge exponent");
  add_common(re, rs.common);
  re->add_option("--pattern", rs.pattern, "Pattern name or file")->required();
  re->add_option("--host", rs.host, "Witness hypergraph file")->required();
  re->add_option("--delta", rs.delta, "Target exponent in (0, 1)");
  re->add_option("--epsilon", rs.epsilon, "Slack");
  re->add_option("--trials", rs.trials, "Percolation trials");
  re->add_option("--p", rs.p, "Override the retention probability")->check(CLI::Range(0.0, 1.0));
  re->add_option("--write", rs.write, "Write the rescaled hypergraph to this file");

  SupersatOptions ss;
  auto* su = app.add_subcommand("supersat", "Run the cycle supersaturation pipeline with a stage trace");
  add_common(su, ss.common);
  su->add_option("--host", ss.host, "Host hypergraph file")->required();
  su->add_option("--r", ss.r, "Expected uniformity");
  su->add_option("--ell", ss.ell, "Cycle half-length l (cycle length 2l+1)")->check(CLI::Range(2u, 16u));
  su->add_option("--mode", ss.mode, "Route")->check(CLI::IsMember({"induction", "shadow"}));
  su->add_option("--budget", ss.budget, "Maximum certificates");
  su->add_option("--trials", ss.trials, "Partition trials");
  su->add_option("--cycle-budget", ss.cycle_budget, "Even cycle enumeration budget");
  su->add_option("--cleanup-factor", ss.cleanup_factor, "Cleanup factor in (0, 1]");
  su->add_option("--trace", ss.trace, "Trace detail")->check(CLI::IsMember({"stages", "full"}));

  BoundsOptions bo;
  auto* b = app.add_subcommand("bounds", "Exact exponents and bound values");
  add_common(b, bo.common);
  b->add_option("--r", bo.r, "Uniformity")->required();
  b->add_option("--ell", bo.ell, "Cycle half-length")->required();
  b->add_option("--n", bo.n, "Vertex count")->required();
  b->add_option("--edges", bo.edges, "Edge count")->required();
  b->add_option("--slack", bo.slack, "Exponent slack");

  VerifyOptions vo;
  auto* v = app.add_subcommand("verify", "Cross-check the counting engines against brute-force oracles");
  add_common(v, vo.common);
  v->add_option("--corpus", vo.corpus, "Directory of hypergraph files");
  v->add_option("--count", vo.count, "Random hosts when no corpus is given");

  std::string config;
  auto* rn = app.add_subcommand("run", "Replay an experiment config");
  rn->add_option("--config", config, "Config file")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  if (g->parsed()) return deliver(generate(gen), gen.common, args, out);
  if (c->parsed()) return deliver(count(cnt), cnt.common, args, out);
  if (gi->parsed()) return deliver(girth(gir), gir.common, args, out);
  if (d->parsed()) return deliver(density(den), den.common, args, out);
  if (ga->parsed()) return deliver(gap(gp), gp.common, args, out);
  if (re->parsed()) return deliver(rescale(rs), rs.common, args, out);
  if (su->parsed()) return deliver(supersat(ss), ss.common, args, out);
  if (b->parsed()) return deliver(bounds(bo), bo.common, args, out);
  if (v->parsed()) return deliver(verify(vo), vo.common, args, out);
  return run_config(config, out, err, depth);
}

}  // namespace

Hypergraph resolve_pattern(const std::string& spec) {
  if (spec == "sts9") return steiner_triple_9();
  const auto parts = split(spec, ':');
  if (parts.size() == 1) return read_hypergraph(spec);
  const auto& kind = parts[0];
  if (kind == "edge" && parts.size() == 2) return single_edge(small(parts[1], "uniformity"));
  if (kind == "cycle" && parts.size() == 3) {
    return linear_cycle(small(parts[1], "uniformity"), small(parts[2], "length"));
  }
  if (kind == "path" && parts.size() == 3) return linear_path(small(parts[1], "uniformity"), small(parts[2], "length"));
  if (kind == "complete" && parts.size() == 3) {
    return complete_hypergraph(small(parts[1], "uniformity"), small(parts[2], "vertex count"));
  }
  throw PreconditionError("unknown pattern '" + spec + "'; expected edge:R, cycle:R:L, path:R:L, complete:R:N, sts9");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err, 0);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace hypersat

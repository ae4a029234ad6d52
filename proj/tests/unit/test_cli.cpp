#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hypersat/cli.hpp"
#include "hypersat/constructions.hpp"
#include "hypersat/counting.hpp"
#include "hypersat/io.hpp"
#include "hypersat/oracles.hpp"
#include "hypersat/report.hpp"

using namespace hypersat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "hypersat_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_graph(const Hypergraph& h, const std::string& name) {
  const auto p = scratch(name);
  write_hypergraph(h, p.string());
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("count girth on C^3_5 prints 5") {
  const auto host = write_graph(linear_cycle(3, 5), "c35.txt");
  const auto run = cli({"count", "--mode", "girth", "--host", host});
  CHECK(run.status == kExitOk);
  CHECK(run.out == "5\n");
  CHECK(*oracle::brute_berge_girth(linear_cycle(3, 5)) == 5);
}

TEST_CASE("count modes agree with the library") {
  const auto h = steiner_triple_9();
  const auto host = write_graph(h, "sts9.txt");
  CHECK(cli({"count", "--mode", "hom", "--pattern", "cycle:3:3", "--host", host}).out ==
        hom_count(linear_cycle(3, 3), h).value.str() + "\n");
  CHECK(cli({"count", "--mode", "labeled", "--pattern", "edge:3", "--host", host}).out == "72\n");
  CHECK(cli({"count", "--mode", "unlabeled", "--pattern", "edge:3", "--host", host}).out == "12\n");
  CHECK(cli({"count", "--mode", "trees", "--host", host, "--budget", "1"}).out == "21\n");
  const auto pattern = write_graph(linear_path(3, 2), "p32.txt");
  CHECK(cli({"count", "--mode", "hom", "--pattern", pattern, "--host", host}).out ==
        hom_count(linear_path(3, 2), h).value.str() + "\n");
  const auto prof = parse_report(
      cli({"count", "--mode", "profile", "--pattern", "cycle:3:3", "--host", host, "--format", "structured"}).out);
  CHECK(prof.find("count").at("total") == hom_count(linear_cycle(3, 3), h).value.str());
}

TEST_CASE("bounds report matches the golden file") {
  const auto run = cli({"bounds", "--r", "3", "--ell", "2", "--n", "100", "--edges", "5000", "--format", "structured"});
  REQUIRE(run.status == kExitOk);
  CHECK(run.out == slurp(std::string(HYPERSAT_GOLDEN_DIR) + "/bounds_r3_l2_n100_e5000.json"));
  const auto rep = parse_report(run.out);
  CHECK(rep.find("bounds").at("f(r)") == "1/1");
  CHECK(rep.find("bounds").at("conditional_exponent") == "1/3");
  const auto plain = cli({"bounds", "--r", "3", "--ell", "2", "--n", "100", "--edges", "5000"});
  CHECK(plain.out.find("f(r) = 1/1") != std::string::npos);
}

TEST_CASE("exit statuses") {
  CHECK(cli({}).status == kExitUsage);
  CHECK(cli({"frobnicate"}).status == kExitUsage);
  CHECK(cli({"bounds", "--r", "3"}).status == kExitUsage);
  CHECK(cli({"bounds", "--r", "3", "--ell", "2", "--n", "10", "--edges", "5", "--colour", "red"}).status ==
        kExitUsage);
  CHECK(cli({"count", "--mode", "bogus", "--host", "x"}).status == kExitUsage);
  const auto missing = cli({"girth", "--host", scratch("absent.txt").string()});
  CHECK(missing.status == kExitDomain);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  CHECK(cli({"bounds", "--r", "2", "--ell", "2", "--n", "10", "--edges", "5"}).status == kExitDomain);
  const auto bad = scratch("bad.txt");
  std::ofstream(bad) << "3 6 1\n0 1\n";
  const auto parse = cli({"girth", "--host", bad.string()});
  CHECK(parse.status == kExitDomain);
  CHECK(parse.err.find("line 2") != std::string::npos);
  CHECK(cli({"--help"}).status == kExitOk);
  CHECK(cli({"--version"}).out == std::string(kToolVersion) + "\n");
}

TEST_CASE("generate writes the text format") {
  const auto run = cli({"generate", "--family", "cycle", "--r", "3", "--length", "3"});
  CHECK(run.status == kExitOk);
  CHECK(parse_hypergraph(run.out) == linear_cycle(3, 3));
  const auto dst = scratch("gen.txt").string();
  CHECK(cli({"generate", "--family", "partite", "--r", "3", "--s", "3", "--write", dst}).status == kExitOk);
  CHECK(read_hypergraph(dst) == complete_partite(3, 3).graph());
  const auto blown = cli({"generate", "--family", "blowup", "--input", dst, "--t", "2"});
  CHECK(parse_hypergraph(blown.out).edge_count() == 27 * 8);
  const auto rnd1 = cli({"generate", "--family", "random", "--n", "10", "--r", "3", "--m", "20", "--seed", "4"});
  const auto rnd2 = cli({"generate", "--family", "random", "--n", "10", "--r", "3", "--m", "20", "--seed", "4"});
  CHECK(rnd1.out == rnd2.out);
  CHECK(cli({"generate", "--family", "blowup"}).status == kExitDomain);
}

TEST_CASE("structured supersat report is reproducible and oracle-valid") {
  const auto g = complete_partite(3, 4).graph();
  const auto host = write_graph(g, "k444.txt");
  const std::vector<std::string> args{"supersat", "--host",  host,     "--seed", "3",     "--budget",
                                      "50",       "--trace", "full",   "--format", "structured"};
  const auto a = cli(args);
  const auto b = cli(args);
  REQUIRE(a.status == kExitOk);
  CHECK(a.out == b.out);
  const auto rep = parse_report(a.out);
  CHECK(rep.ok());
  CHECK(rep.find("supersat").at("certificates") == std::to_string(rep.certificates.size()));
  CHECK_FALSE(rep.certificates.empty());
  for (const auto& c : rep.certificates) {
    CHECK_FALSE(certificate_problem(c, g));
    CHECK(oracle::brute_is_linear_cycle(c.edges, 3));
  }
  for (const auto& rec : rep.records) CHECK(rec.status != ReportRecord::Status::fail);
  CHECK(cli({"supersat", "--host", host, "--r", "4"}).status == kExitDomain);
}

TEST_CASE("density, gap and rescale subcommands") {
  const auto host = write_graph(steiner_triple_9(), "sts9b.txt");
  const auto d = parse_report(cli({"density", "--pattern", "cycle:3:3", "--host", host, "--format", "json"}).out);
  CHECK(d.find("density").at("hom") == "504");
  CHECK(d.find("density").at("sidorenko") == "violated");
  const auto g = cli({"gap", "--pattern", "cycle:3:3", "--host", host, "--tensor", "2", "--format", "json"});
  REQUIRE(g.status == kExitOk);
  CHECK(parse_report(g.out).find("tensor-power").at("multiplicative") == "true");
  const auto r = cli({"rescale", "--pattern", "cycle:3:3", "--host", host, "--delta", "0.935", "--format", "json"});
  REQUIRE(r.status == kExitOk);
  const auto rr = parse_report(r.out);
  CHECK(rr.find("rescale").at("branch") == "blow_up");
  CHECK(rr.find("rescale").at("t") == "9");
}

TEST_CASE("verify passes on a corpus and on random hosts") {
  const auto dir = scratch("corpus");
  fs::create_directories(dir);
  write_hypergraph(linear_cycle(3, 3), (dir / "c33.txt").string());
  write_hypergraph(steiner_triple_9(), (dir / "sts9.txt").string());
  write_hypergraph(complete_hypergraph(4, 6), (dir / "k46.txt").string());
  write_hypergraph(complete_hypergraph(3, 12), (dir / "big.txt").string());
  const auto run = cli({"verify", "--corpus", dir.string(), "--format", "json"});
  CHECK(run.status == kExitOk);
  const auto rep = parse_report(run.out);
  CHECK(rep.find("verify-summary").at("mismatches") == "0");
  CHECK(rep.find("verify-summary").at("skipped") == "1");
  CHECK(cli({"verify", "--count", "5", "--seed", "9"}).status == kExitOk);
  CHECK(cli({"verify", "--corpus", scratch("nowhere").string()}).status == kExitDomain);
}

TEST_CASE("run replays a config") {
  ExperimentConfig c;
  c.command = "count";
  c.input = write_graph(linear_cycle(3, 5), "c35c.txt");
  c.params = {{"mode", "girth"}};
  c.format = ReportFormat::plain;
  const auto cfg = scratch("cfg.json");
  std::ofstream(cfg) << config_json(c);
  const auto run = cli({"run", "--config", cfg.string()});
  CHECK(run.status == kExitOk);
  CHECK(run.out == "5\n");
  std::ofstream(cfg) << R"({"command": "count", "mystery": "1"})";
  CHECK(cli({"run", "--config", cfg.string()}).status == kExitDomain);
  c.params = {{"nonsense", "1"}};
  std::ofstream(cfg) << config_json(c);
  CHECK(cli({"run", "--config", cfg.string()}).status == kExitUsage);
}

TEST_CASE("report sink") {
  const auto dst = scratch("report.json").string();
  CHECK(cli({"bounds", "--r", "4", "--ell", "2", "--n", "50", "--edges", "400", "--format", "json", "--output", dst})
            .out.empty());
  CHECK(parse_report(slurp(dst)).find("bounds").at("f(r)") == "7/12");
}

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hypersat/constructions.hpp"
#include "hypersat/io.hpp"
#include "hypersat/report.hpp"
#include "support.hpp"

using namespace hypersat;

namespace {

std::size_t parse_line(const std::string& text) {
  try {
    parse_hypergraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t parse_column(const std::string& text) {
  try {
    parse_hypergraph(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("read C^3_3 from text") {
  const auto h = parse_hypergraph("3 6 3\n0 1 2\n2 3 4\n0 4 5\n");
  CHECK(h == linear_cycle(3, 3));
  CHECK(format_hypergraph(h) == "3 6 3\n0 1 2\n0 4 5\n2 3 4\n");
}

TEST_CASE("comments and blank lines are skipped") {
  const auto h = parse_hypergraph("# a triangle\n3 6 3\n\n0 1 2\n# middle\n2 3 4\n0 4 5");
  CHECK(h.edge_count() == 3);
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_line("3 6\n0 1 2\n") == 1);
  CHECK(parse_line("3 6 3 1\n") == 1);
  CHECK(parse_line("") == 1);
  CHECK(parse_line("3 6 2\n0 1 2\n0 1\n") == 3);
  CHECK(parse_line("3 6 1\n0 1 2\n3 4 5\n") == 3);
  CHECK(parse_line("3 6 2\n0 1 2\n") == 3);
  CHECK(parse_line("3 6 1\n0 2 1\n") == 2);
  CHECK(parse_column("3 6 1\n0 2 1\n") == 5);
  CHECK(parse_column("3 6 1\n0 x 1\n") == 3);
  CHECK(parse_column("3 6 1\n0 1 6\n") == 5);
  CHECK(parse_column("3 6 1\r\n0 1 2\n") == 6);
  CHECK(parse_line("1 6 0\n") == 1);
  CHECK(parse_column("3 -6 0\n") == 3);
}

TEST_CASE("write then read is the identity") {
  Rng rng(RngSeed{17});
  for (int i = 0; i < 100; ++i) {
    const unsigned r = 2 + static_cast<unsigned>(rng.below(4));
    const std::size_t n = r + rng.below(12);
    const std::size_t m = rng.below(std::min<std::size_t>(binomial(n, r), 40) + 1);
    const auto h = random_uniform(n, r, m, RngSeed{rng.next()});
    const std::string text = format_hypergraph(h);
    const auto back = parse_hypergraph(text);
    CHECK(back == h);
    CHECK(format_hypergraph(back) == text);
  }
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "hypersat_io_roundtrip.txt";
  const auto h = steiner_triple_9();
  write_hypergraph(h, path.string());
  CHECK(read_hypergraph(path.string()) == h);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_hypergraph(path.string()), Error);
}

TEST_CASE("report json round trip") {
  Report r;
  r.command = {"supersat", "--host", "x.txt"};
  ReportRecord rec{"stage", "anchor text", {}, ReportRecord::Status::pass};
  rec.add("big", BigInt("123456789012345678901234567890"));
  rec.add("q", Rational(7, 12));
  rec.add("log", 0.5);
  rec.add("flag", true);
  r.records.push_back(rec);
  r.certificates.push_back(make_certificate(3, 1, {0, 1, 2}, {{3}, {4}, {5}}));
  r.hypergraph = "3 3 1\n0 1 2\n";
  const std::string text = report_json(r);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(text.find("\"7/12\"") != std::string::npos);
  const Report back = parse_report(text);
  CHECK(back == r);
  CHECK(report_json(back) == text);
  CHECK(back.find("stage").at("log") == "0.500000000000");
  CHECK_FALSE(r.ok() == false);
}

TEST_CASE("report rejects foreign schema and repeated keys") {
  CHECK_THROWS_AS(parse_report(R"({"schema": "other/1", "version": "", "command": [], "records": [],
                                   "certificates": []})"),
                  Error);
  CHECK_THROWS_AS(parse_report("{"), Error);
  Report r;
  ReportRecord rec{"s", "", {}, ReportRecord::Status::report};
  rec.add("k", "1").add("k", "2");
  r.records.push_back(rec);
  CHECK_THROWS_AS(report_json(r), Error);
}

TEST_CASE("experiment config round trip") {
  ExperimentConfig c;
  c.command = "supersat";
  c.input = "host.txt";
  c.seed = 18446744073709551615ULL;
  c.budgets = {{"budget", 50}, {"cycle-budget", 1000}};
  c.params = {{"mode", "shadow"}, {"ell", "2"}};
  const std::string text = config_json(c);
  CHECK(parse_config(text) == c);
  CHECK(config_json(parse_config(text)) == text);
  const auto args = config_arguments(c);
  CHECK(args.front() == "supersat");
  CHECK(std::find(args.begin(), args.end(), "--cycle-budget") != args.end());
}

TEST_CASE("experiment config rejects unknown keys") {
  CHECK_THROWS_AS(parse_config(R"({"command": "bounds", "colour": "red"})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"seed": "1"})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"command": "bounds", "seed": "-1"})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"command": "bounds", "format": "xml"})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"command": "bounds", "params": {"r": 3}})"), Error);
  CHECK(parse_config(R"({"command": "bounds", "seed": 5})").seed == 5);
}

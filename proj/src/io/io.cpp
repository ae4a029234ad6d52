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

#include "hypersat/io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace hypersat {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c == '\r') throw ParseError("carriage return; expected LF line endings", line_no, i + 1);
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::uint64_t number(const Token& t, std::size_t line_no) {
  std::uint64_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("integer out of range: '" + std::string(t.text) + "'", line_no, t.column);
  }
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'", line_no, t.column);
  }
  return value;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  unsigned r = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<Vertex>> edges;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    const auto tokens = split(line, line_no);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 3) {
        throw ParseError("header must have 3 fields 'r n m', found " + std::to_string(tokens.size()), line_no);
      }
      const std::uint64_t rr = number(tokens[0], line_no);
      if (rr < 2 || rr > 64) throw ParseError("uniformity must be in [2, 64]", line_no, tokens[0].column);
      const std::uint64_t nn = number(tokens[1], line_no);
      if (nn > (std::uint64_t{1} << 31)) throw ParseError("vertex count too large", line_no, tokens[1].column);
      r = static_cast<unsigned>(rr);
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(number(tokens[2], line_no));
      edges.reserve(std::min<std::size_t>(m, 1u << 20));
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw ParseError("more edge lines than the header's m = " + std::to_string(m), line_no);
    if (tokens.size() != r) {
      throw ParseError("edge must have " + std::to_string(r) + " vertices, found " + std::to_string(tokens.size()),
                       line_no);
    }
    std::vector<Vertex> edge;
    edge.reserve(r);
    for (const auto& t : tokens) {
      const std::uint64_t v = number(t, line_no);
      if (v >= n) {
        throw ParseError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")", line_no,
                         t.column);
      }
      if (!edge.empty() && v <= edge.back()) throw ParseError("vertices must be strictly ascending", line_no, t.column);
      edge.push_back(static_cast<Vertex>(v));
    }
    edges.push_back(std::move(edge));
  }
  if (!have_header) throw ParseError("missing header 'r n m'", line_no == 0 ? 1 : line_no);
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                     line_no + 1);
  }
  return validate(edges, n, r);
}

Hypergraph read_hypergraph(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error("read failed");
  return parse_hypergraph(text);
}

Hypergraph read_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(h, out);
  return out.str();
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
  out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (EdgeId id = 0; id < h.edge_count(); ++id) {
    const auto e = h.edge(id);
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

void write_hypergraph(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_hypergraph(h, out);
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace hypersat

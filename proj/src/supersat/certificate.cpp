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
#include <set>

#include "hypersat/supersat.hpp"

namespace hypersat {

CycleCertificate make_certificate(unsigned r, unsigned ell, std::vector<Vertex> hinges,
                                  std::vector<std::vector<Vertex>> interior) {
  CycleCertificate c;
  c.r = r;
  c.ell = ell;
  c.hinges = std::move(hinges);
  c.interior = std::move(interior);
  const std::size_t len = 2 * static_cast<std::size_t>(ell) + 1;
  if (c.hinges.size() != len || c.interior.size() != len) {
    throw PreconditionError("certificate needs 2l+1 hinges and 2l+1 interior lists");
  }
  c.edges.resize(len);
  for (std::size_t i = 1; i <= len; ++i) {
    auto& e = c.edges[i - 1];
    e = c.interior[i - 1];
    e.push_back(c.hinges[i - 1]);
    e.push_back(c.hinges[i % len]);
    std::sort(e.begin(), e.end());
  }
  return c;
}

std::optional<std::string> certificate_problem(const CycleCertificate& c, const Hypergraph& host) {
  const std::size_t len = 2 * static_cast<std::size_t>(c.ell) + 1;
  if (c.ell < 1) return "l must be positive";
  if (c.r < 3 || c.r != host.uniformity()) return "uniformity mismatch";
  if (c.hinges.size() != len || c.interior.size() != len || c.edges.size() != len) return "wrong number of parts";
  std::set<Vertex> seen;
  for (Vertex w : c.hinges) {
    if (w >= host.vertex_count()) return "vertex out of range";
    if (!seen.insert(w).second) return "repeated vertex " + std::to_string(w);
  }
  for (const auto& part : c.interior) {
    if (part.size() != c.r - 2) return "interior list of the wrong size";
    for (Vertex v : part) {
      if (v >= host.vertex_count()) return "vertex out of range";
      if (!seen.insert(v).second) return "repeated vertex " + std::to_string(v);
    }
  }
  for (std::size_t i = 1; i <= len; ++i) {
    std::vector<Vertex> expect = c.interior[i - 1];
    expect.push_back(c.hinges[i - 1]);
    expect.push_back(c.hinges[i % len]);
    std::sort(expect.begin(), expect.end());
    if (expect != c.edges[i - 1]) return "edge " + std::to_string(i) + " does not match its hinges";
    if (!host.contains_edge(c.edges[i - 1])) return "edge " + std::to_string(i) + " missing from host";
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      std::vector<Vertex> common;
      std::set_intersection(c.edges[i].begin(), c.edges[i].end(), c.edges[j].begin(), c.edges[j].end(),
                            std::back_inserter(common));
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (consecutive && common.size() != 1) return "consecutive edges must share exactly one vertex";
      if (!consecutive && !common.empty()) return "non-consecutive edges intersect";
    }
  }
  return std::nullopt;
}

std::size_t class_pair_index(unsigned r, unsigned i, unsigned j) {
  if (i == j || i >= r || j >= r) throw PreconditionError("class pair needs two distinct classes below r");
  if (i > j) std::swap(i, j);
  // pairs (0,1), (0,2), ..., (0,r-1), (1,2), ...
  return static_cast<std::size_t>(i) * (2 * r - i - 1) / 2 + (j - i - 1);
}

TypeVector TypeVector::relabeled(const std::vector<unsigned>& order) const {
  TypeVector out{r, std::vector<unsigned>(y.size())};
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = i + 1; j < r; ++j) out.y[class_pair_index(r, order[i], order[j])] = exponent(i, j);
  }
  return out;
}

unsigned dyadic_exponent(std::size_t d) {
  unsigned y = 0;
  while (y < 64 && (std::size_t{1} << y) <= d) ++y;
  return y;
}

const char* to_string(PipelineMode m) { return m == PipelineMode::induction ? "induction" : "shadow"; }

const char* to_string(TraceRecord::Status s) {
  switch (s) {
    case TraceRecord::Status::pass:
      return "pass";
    case TraceRecord::Status::fail:
      return "fail";
    case TraceRecord::Status::report:
      return "report";
  }
  return "report";
}

}  // namespace hypersat

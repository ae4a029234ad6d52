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

#include <iosfwd>
#include <string>
#include <string_view>

#include "hypersat/hypergraph.hpp"

namespace hypersat {

/// Parses the text format: a header line `r n m`, then m lines of r
/// ascending vertex indices separated by single spaces. Lines starting with
/// `#` are comments. Throws ParseError with a 1-based line (and column when
/// a token is at fault); range and uniformity checks go through validate().
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph(const std::string& path);

/// Canonical text: header, then edges in lexicographic order, LF endings.
std::string format_hypergraph(const Hypergraph& h);
void write_hypergraph(const Hypergraph& h, std::ostream& out);
void write_hypergraph(const Hypergraph& h, const std::string& path);

}  // namespace hypersat

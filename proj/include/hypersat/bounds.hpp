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

#include <cstdint>
#include <optional>

#include "hypersat/common.hpp"

namespace hypersat {

/// Exponents and finite-n values of the odd linear cycle supersaturation
/// bounds. `slack` stands in for every vanishing o(1) term of an exponent of n.
struct BoundValues {
  unsigned r = 0;
  unsigned ell = 0;
  std::size_t n = 0;
  std::uint64_t e = 0;
  double slack = 0;

  Rational f_r;                     // (4l - 1) / ((r-1)(2l+1) - 3)
  std::optional<Rational> f_prev;   // f(r-1); undefined when its denominator vanishes
  Rational weaker_exponent;         // 2 / (r-1)
  Rational conditional_exponent;    // 1 / ((r-1)l - 1)
  bool coincide = false;            // f(r) == 2/(r-1)

  // A = e^a_edge_exponent n^(-a_vertex_exponent - slack); needs f(r-1).
  std::optional<Rational> a_edge_exponent;    // (2l + f(r-1)) / (2l(r-1) - 1 + f(r-1))
  std::optional<Rational> a_vertex_exponent;  // (2l + 1 + (r-1) f(r-1)) / (same)
  std::optional<double> a_value;

  double delta = 0;  // e = n^(r - delta)
  // ln of n^((r-1)(2l+1) - slack) (e / n^r)^(2l + 1 + f(r))
  double log_copy_lower_bound = 0;
  // (r-1)(2l+1) - delta (2l + 1 + 1/((r-1)l - 1))
  double conditional_copy_exponent = 0;
  double weaker_copy_exponent = 0;  // same with 2/(r-1) in place of f(r)
};

/// f(r) for the given l; PreconditionError when the denominator is not positive.
Rational cycle_exponent(unsigned r, unsigned ell);

/// Throws PreconditionError unless r >= 3, l >= 1, n >= 2, 1 <= e <= C(n, r).
BoundValues bound_values(unsigned r, unsigned ell, std::size_t n, std::uint64_t e, double slack = 0);

}  // namespace hypersat

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


#include "hypersat/bounds.hpp"

#include <cmath>

#include "hypersat/constructions.hpp"

namespace hypersat {

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

Rational cycle_exponent(unsigned r, unsigned ell) {
  const long long den = static_cast<long long>(r - 1) * (2 * ell + 1) - 3;
  if (r < 2 || den <= 0) throw PreconditionError("f(r) undefined for these parameters");
  return Rational(4 * static_cast<long long>(ell) - 1, den);
}

BoundValues bound_values(unsigned r, unsigned ell, std::size_t n, std::uint64_t e, double slack) {
  if (r < 3) throw PreconditionError("bound_values needs r >= 3");
  if (ell < 1) throw PreconditionError("bound_values needs l >= 1");
  if (n < 2) throw PreconditionError("bound_values needs n >= 2");
  if (e < 1 || e > binomial(n, r)) throw PreconditionError("edge count outside [1, C(n, r)]");

  BoundValues b;
  b.r = r;
  b.ell = ell;
  b.n = n;
  b.e = e;
  b.slack = slack;
  b.f_r = cycle_exponent(r, ell);
  if (static_cast<long long>(r - 2) * (2 * ell + 1) - 3 > 0) b.f_prev = cycle_exponent(r - 1, ell);
  b.weaker_exponent = Rational(2, r - 1);
  b.conditional_exponent = Rational(1, static_cast<long long>(r - 1) * ell - 1);
  b.coincide = b.f_r == b.weaker_exponent;

  const double ln_n = std::log(static_cast<double>(n));
  const double ln_e = std::log(static_cast<double>(e));
  if (b.f_prev) {
    const Rational den = Rational(2 * ell * (r - 1) - 1) + *b.f_prev;
    b.a_edge_exponent = (Rational(2 * ell) + *b.f_prev) / den;
    b.a_vertex_exponent = (Rational(2 * ell + 1) + Rational(r - 1) * *b.f_prev) / den;
    b.a_value = std::exp(to_double(*b.a_edge_exponent) * ln_e - (to_double(*b.a_vertex_exponent) + slack) * ln_n);
  }

  b.delta = r - ln_e / ln_n;
  const double cycle_vertices = static_cast<double>((r - 1) * (2 * ell + 1));
  const double log_density = ln_e - r * ln_n;
  b.log_copy_lower_bound = (cycle_vertices - slack) * ln_n + (2 * ell + 1 + to_double(b.f_r)) * log_density;
  b.conditional_copy_exponent = cycle_vertices - b.delta * (2 * ell + 1 + to_double(b.conditional_exponent));
  b.weaker_copy_exponent = cycle_vertices - b.delta * (2 * ell + 1 + to_double(b.weaker_exponent));
  return b;
}

}  // namespace hypersat

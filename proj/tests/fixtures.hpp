// Copyright 2026 The cellform Authors
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

#ifndef CELLFORM_TESTS_FIXTURES_HPP_
#define CELLFORM_TESTS_FIXTURES_HPP_

#include <vector>

#include "cellform/assignment.hpp"
#include "cellform/bound.hpp"
#include "cellform/instance.hpp"
#include "cellform/rational.hpp"

namespace cellform::testing {

// 5x8 worked example with a two-cell partial solution.
inline Instance Example5x8() {
  return Instance::FromRows({
      {1, 1, 1, 1, 1, 0, 0, 1},
      {1, 1, 0, 1, 0, 0, 0, 1},
      {0, 0, 1, 0, 1, 1, 1, 0},
      {1, 0, 1, 1, 1, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 1, 1},
  });
}

inline Assignment Example5x8Node() {
  return Assignment{{1, 1, 2, 0, 0}, {1, 1, 1, 1, 2, 0, 0, 0}};
}

// 5x9 worked example used to walk through the bound.
inline Instance Example5x9() {
  return Instance::FromRows({
      {1, 1, 1, 1, 1, 0, 0, 0, 0},
      {1, 1, 1, 1, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 1, 1, 0, 0},
      {0, 1, 1, 0, 0, 0, 0, 1, 1},
      {0, 0, 0, 0, 1, 1, 0, 0, 1},
  });
}

inline Assignment Example5x9Node() {
  return Assignment{{1, 1, 2, 0, 0}, {1, 1, 1, 1, 1, 2, 2, 0, 0}};
}

inline ComparisonContext Example5x9Context(std::int64_t entity_ones, std::int64_t entity_zeros) {
  ComparisonContext ctx;
  ctx.total_ones = 19;
  ctx.total_zeros = 26;
  ctx.inside_ones = 11;
  ctx.inside_zeros = 1;
  ctx.excluded_ones = 0;
  ctx.excluded_zeros = 9;
  ctx.entity_ones = entity_ones;
  ctx.entity_zeros = entity_zeros;
  return ctx;
}

// The comparison written directly in fractions:
//   target = b1 * da/db - a1
//   lower  = b_l * (l - da/db)
//   upper  = b_u * (u - da/db)
// with l = a_c/b_c, u = (n1 - excluded ones - entity ones)/b_c.
struct FractionalGuards {
  Rational target;
  Rational lower;
  Rational upper;
};

inline FractionalGuards EvaluateFractional(const Alternative& first, const Alternative& second,
                                           const ComparisonContext& ctx) {
  const Rational slope(second.ones - first.ones, second.zeros - first.zeros);
  const Rational b_c(ctx.total_ones + ctx.inside_zeros);
  const Rational l = Rational(ctx.inside_ones) / b_c;
  const Rational u = Rational(ctx.total_ones - ctx.excluded_ones - ctx.entity_ones) / b_c;
  const Rational b_u(ctx.total_ones + ctx.total_zeros - ctx.excluded_zeros - ctx.entity_zeros);
  return {Rational(first.zeros) * slope - Rational(first.ones), b_c * (l - slope),
          b_u * (u - slope)};
}

// Reference decision from the fractional guards (requires second.zeros >
// first.zeros).
inline Preference FractionalDecision(const Alternative& first, const Alternative& second,
                                     const ComparisonContext& ctx) {
  const FractionalGuards g = EvaluateFractional(first, second, ctx);
  if (g.lower >= g.target) return Preference::kFirst;
  if (g.upper <= g.target) return Preference::kSecond;
  return Preference::kIncomparable;
}

}  // namespace cellform::testing

#endif  // CELLFORM_TESTS_FIXTURES_HPP_

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

#include "cellform/bound.hpp"

#include <random>

#include "cellform/error.hpp"
#include "cellform/node.hpp"
#include "cellform/oracle.hpp"
#include "cellform/search.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cellform;
using testing::EvaluateFractional;
using testing::Example5x9Context;

namespace {

using Alts = std::vector<Alternative>;

Preference Mirror(Preference p) {
  if (p == Preference::kFirst) return Preference::kSecond;
  if (p == Preference::kSecond) return Preference::kFirst;
  return p;
}

void CheckSameContext(const ComparisonContext& a, const ComparisonContext& b) {
  CHECK(a.total_ones == b.total_ones);
  CHECK(a.total_zeros == b.total_zeros);
  CHECK(a.inside_ones == b.inside_ones);
  CHECK(a.inside_zeros == b.inside_zeros);
  CHECK(a.excluded_ones == b.excluded_ones);
  CHECK(a.excluded_zeros == b.excluded_zeros);
  CHECK(a.entity_ones == b.entity_ones);
  CHECK(a.entity_zeros == b.entity_zeros);
}

}  // namespace

TEST_SUITE("bound") {

TEST_CASE("alternatives on the 5x9 partial solution") {
  const Instance inst = testing::Example5x9();
  const Node node(inst, testing::Example5x9Node());
  CHECK(MachineAlternatives(node, 3) == Alts{{4, 3}, {2, 2}, {2, 0}});
  CHECK(MachineAlternatives(node, 4) == Alts{{2, 4}, {2, 1}, {1, 0}});
  CHECK(PartAlternatives(node, 7) == Alts{{0, 2}, {0, 1}, {0, 0}});
  CHECK(PartAlternatives(node, 8) == Alts{{1, 1}, {0, 1}, {0, 0}});
  // The standalone overloads see the same thing.
  CHECK(MachineAlternatives(inst, testing::Example5x9Node(), 3) == MachineAlternatives(node, 3));
  CHECK(PartAlternatives(inst, testing::Example5x9Node(), 8) == PartAlternatives(node, 8));
}

TEST_CASE("alternatives on the 5x8 partial solution") {
  const Instance inst = testing::Example5x8();
  const Node node(inst, testing::Example5x8Node());
  CHECK(MachineAlternatives(node, 3) == Alts{{4, 1}, {2, 0}, {1, 0}});
  CHECK(MachineAlternatives(node, 4) == Alts{{2, 4}, {2, 1}, {2, 0}});
  CHECK(PartAlternatives(node, 5) == Alts{{0, 2}, {1, 0}, {0, 0}});
  CHECK(PartAlternatives(node, 6) == Alts{{0, 2}, {1, 0}, {0, 0}});
  CHECK(PartAlternatives(node, 7) == Alts{{2, 0}, {0, 1}, {0, 0}});
}

TEST_CASE("entity contexts") {
  const Instance inst = testing::Example5x9();
  const Node node(inst, testing::Example5x9Node());
  CheckSameContext(MachineContext(node, 3), Example5x9Context(4, 5));
  CheckSameContext(MachineContext(node, 4), Example5x9Context(3, 6));
  CheckSameContext(PartContext(node, 7), Example5x9Context(0, 3));
  CheckSameContext(PartContext(node, 8), Example5x9Context(1, 2));
}

TEST_CASE("worked comparisons and their intermediate values") {
  SUBCASE("fourth machine: empty cell vs first cell cannot be ordered") {
    const auto ctx = Example5x9Context(4, 5);
    const auto g = EvaluateFractional({2, 0}, {4, 3}, ctx);
    CHECK(g.target == Rational(-2));
    CHECK(g.lower == Rational(-7, 3));
    CHECK(g.upper == Rational(31, 12));
    CHECK(CompareAlternatives({2, 0}, {4, 3}, ctx) == Preference::kIncomparable);
  }
  SUBCASE("fifth machine: joining the second cell wins") {
    const auto ctx = Example5x9Context(3, 6);
    const auto g = EvaluateFractional({1, 0}, {2, 1}, ctx);
    CHECK(g.target == Rational(-1));
    CHECK(g.lower == Rational(-9));
    CHECK(g.upper == Rational(-6));
    CHECK(CompareAlternatives({1, 0}, {2, 1}, ctx) == Preference::kSecond);
  }
  SUBCASE("ninth part: joining the first cell wins") {
    const auto ctx = Example5x9Context(1, 2);
    const auto g = EvaluateFractional({0, 0}, {1, 1}, ctx);
    CHECK(g.target == Rational(0));
    CHECK(g.lower == Rational(-9));
    CHECK(g.upper == Rational(-17, 5));
    CHECK(CompareAlternatives({0, 0}, {1, 1}, ctx) == Preference::kSecond);
  }
}

TEST_CASE("best alternatives and the bound on the 5x9 partial solution") {
  const Instance inst = testing::Example5x9();
  const Node node(inst, testing::Example5x9Node());
  const auto best_machine = [&](int i) {
    return BestAlternative(MachineAlternatives(node, i), MachineContext(node, i));
  };
  const auto best_part = [&](int j) {
    return BestAlternative(PartAlternatives(node, j), PartContext(node, j));
  };
  CHECK(best_machine(3) == Alternative{4, 0});
  CHECK(best_machine(4) == Alternative{2, 1});
  CHECK(best_part(7) == Alternative{0, 0});
  CHECK(best_part(8) == Alternative{1, 1});
  CHECK(UpperBound(node) == Rational(18, 22));
  CHECK(UpperBound(testing::Example5x9(), testing::Example5x9Node()) == Rational(18, 22));
}

TEST_CASE("bound on the 5x8 partial solution") {
  const Instance inst = testing::Example5x8();
  CHECK(UpperBound(inst, testing::Example5x8Node()) == Rational(18, 23));
  // Exhaustive relaxation agrees on this node.
  CHECK(BruteForceRelaxed(inst, testing::Example5x8Node()) == Rational(18, 23));
}

TEST_CASE("relaxation of the 5x9 partial solution") {
  // The greedy bound is looser than the exhaustive relaxation here.
  const Instance inst = testing::Example5x9();
  CHECK(BruteForceRelaxed(inst, testing::Example5x9Node()) == Rational(8, 11));
  CHECK(UpperBound(inst, testing::Example5x9Node()) >
        BruteForceRelaxed(inst, testing::Example5x9Node()));
}

TEST_CASE("domination filter") {
  CHECK(UndominatedIndices(Alts{{3, 1}, {2, 2}}) == std::vector<std::size_t>{0});
  CHECK(UndominatedIndices(Alts{{2, 0}, {4, 3}, {2, 2}}) == std::vector<std::size_t>{0, 1});
  // Exact duplicates keep the first occurrence.
  CHECK(UndominatedIndices(Alts{{1, 1}, {1, 1}}) == std::vector<std::size_t>{0});
  CHECK(BestAlternative(Alts{{3, 1}, {2, 2}}, Example5x9Context(3, 3)) == Alternative{3, 1});
  CHECK_THROWS_AS(BestAlternative(Alts{}, Example5x9Context(0, 0)), Error);
}

TEST_CASE("an incomparable pair merges to the optimistic corner") {
  const auto ctx = Example5x9Context(4, 5);
  CHECK(BestAlternative(Alts{{2, 0}, {4, 3}}, ctx) == Alternative{4, 0});
  CHECK(BestAlternative(Alts{{4, 3}, {2, 0}}, ctx) == Alternative{4, 0});
}

TEST_CASE("integer guards match the fractional definition") {
  std::mt19937_64 rng(2024);
  int incomparable = 0;
  int first = 0;
  int second = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    ComparisonContext ctx;
    ctx.total_ones = 5 + static_cast<std::int64_t>(rng() % 40);
    ctx.total_zeros = 5 + static_cast<std::int64_t>(rng() % 60);
    ctx.inside_ones = static_cast<std::int64_t>(rng() % (ctx.total_ones + 1));
    ctx.inside_zeros = static_cast<std::int64_t>(rng() % (ctx.total_zeros / 2 + 1));
    ctx.excluded_ones = static_cast<std::int64_t>(rng() % (ctx.total_ones - ctx.inside_ones + 1));
    ctx.excluded_zeros = static_cast<std::int64_t>(rng() % (ctx.total_zeros / 2 + 1));
    ctx.entity_ones = static_cast<std::int64_t>(rng() % 6);
    ctx.entity_zeros = static_cast<std::int64_t>(rng() % 6);
    const Alternative a{static_cast<std::int64_t>(rng() % 8), static_cast<std::int64_t>(rng() % 8)};
    Alternative b{static_cast<std::int64_t>(rng() % 8), static_cast<std::int64_t>(rng() % 8)};
    if (b.zeros == a.zeros) continue;
    const Alternative& lo = a.zeros < b.zeros ? a : b;
    const Alternative& hi = a.zeros < b.zeros ? b : a;
    const Preference expected = testing::FractionalDecision(lo, hi, ctx);
    REQUIRE(CompareAlternatives(lo, hi, ctx) == expected);
    // Swapping the operands mirrors the answer.
    REQUIRE(CompareAlternatives(hi, lo, ctx) == Mirror(expected));
    incomparable += expected == Preference::kIncomparable;
    first += expected == Preference::kFirst;
    second += expected == Preference::kSecond;
  }
  // All three outcomes were exercised.
  CHECK(incomparable > 0);
  CHECK(first > 0);
  CHECK(second > 0);
}

TEST_CASE("equal zero counts are decided by ones") {
  const auto ctx = Example5x9Context(2, 2);
  CHECK(CompareAlternatives({3, 1}, {2, 1}, ctx) == Preference::kFirst);
  CHECK(CompareAlternatives({2, 1}, {3, 1}, ctx) == Preference::kSecond);
  CHECK(CompareAlternatives({2, 1}, {2, 1}, ctx) == Preference::kEquivalent);
}

TEST_CASE("bound dominates the relaxation and every completion") {
  int checked = 0;
  for (int seed = 0; seed < 40; ++seed) {
    const Instance inst = RandomInstance(4, 6, 0.3 + 0.1 * (seed % 4), 900 + seed);
    SearchConfig config;
    config.prune = false;
    config.on_node = [&](const Assignment& a) {
      if (checked > 3000 || a.Depth() % 3 != 1) return;
      const Rational ub = UpperBound(inst, a);
      const Rational relaxed = BruteForceRelaxed(inst, a);
      REQUIRE(ub >= relaxed);
      if (const auto best = BestCompletion(inst, a)) REQUIRE(relaxed >= *best);
      ++checked;
    };
    Solve(inst, config);
  }
  CHECK(checked > 500);
}

}  // TEST_SUITE

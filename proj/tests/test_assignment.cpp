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

#include "cellform/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cellform/error.hpp"
#include "cellform/node.hpp"
#include "cellform/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cellform;

namespace {

// Uniform random labels in 0..k for every entity.
Assignment RandomLabels(const Instance& inst, int k, std::mt19937_64& rng, bool complete) {
  std::uniform_int_distribution<int> pick(complete ? 1 : 0, k);
  Assignment a = Assignment::Empty(inst);
  for (int& c : a.machine_cells) c = pick(rng);
  for (int& c : a.part_cells) c = pick(rng);
  return a;
}

}  // namespace

TEST_SUITE("assignment") {

TEST_CASE("counts on the 5x8 partial solution") {
  const Instance inst = testing::Example5x8();
  const Assignment a = testing::Example5x8Node();
  CHECK(CountInside(inst, a) == EntryCounts{8, 1});
  CHECK(CountExcluded(inst, a) == EntryCounts{2, 4});
  CHECK(AssignmentEfficacy(inst, a) == Rational(8, 22));
  CHECK(a.CellCount() == 2);
  CHECK(a.Depth() == 8);
  CHECK_FALSE(a.Complete());
}

TEST_CASE("counts on the 5x9 partial solution") {
  const Instance inst = testing::Example5x9();
  const Assignment a = testing::Example5x9Node();
  CHECK(CountInside(inst, a) == EntryCounts{11, 1});
  CHECK(CountExcluded(inst, a) == EntryCounts{0, 9});
}

TEST_CASE("efficacy of simple layouts") {
  const Instance identity = Instance::FromRows({{1, 0}, {0, 1}});
  CHECK(AssignmentEfficacy(identity, {{1, 2}, {1, 2}}) == Rational(1));
  CHECK(AssignmentEfficacy(identity, {{1, 1}, {1, 1}}) == Rational(1, 2));
  CHECK(Efficacy(3, 4, 2) == Rational(1, 2));
}

TEST_CASE("feasibility requires every used label on both sides") {
  const Instance inst = RandomInstance(4, 5, 0.5, 3);
  CHECK(VerifyFeasible(inst, {{1, 2, 3, 1}, {1, 1, 3, 2, 1}}));
  // Cell 3 has a machine but no part.
  CHECK_FALSE(VerifyFeasible(inst, {{1, 2, 3, 1}, {1, 1, 2, 2, 1}}));
  // Cell 2 has parts but no machine.
  CHECK_FALSE(VerifyFeasible(inst, {{1, 1, 1, 1}, {1, 2, 1, 1, 1}}));
  // Label 2 skipped entirely.
  CHECK_FALSE(VerifyFeasible(inst, {{1, 3, 1, 1}, {1, 3, 1, 1, 1}}));
  CHECK(VerifyFeasible(inst, {{1, 1, 1, 1}, {1, 1, 1, 1, 1}}));
}

TEST_CASE("feasibility of a partial assignment is a contract violation") {
  const Instance inst = testing::Example5x8();
  try {
    VerifyFeasible(inst, testing::Example5x8Node());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kContractViolation);
  }
}

TEST_CASE("shape validation") {
  const Instance inst = testing::Example5x8();
  CHECK_THROWS_AS(CountInside(inst, Assignment{{1, 1}, {1}}), Error);
  Assignment a = testing::Example5x8Node();
  a.part_cells[0] = -1;
  CHECK_THROWS_AS(CountInside(inst, a), Error);
}

TEST_CASE("inside and excluded entries partition a complete assignment") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 5;
    const int p = m + trial % 4;
    const Instance inst = RandomInstance(m, p, 0.45, 1000 + trial);
    const Assignment a = RandomLabels(inst, 1 + trial % m, rng, true);
    const EntryCounts in = CountInside(inst, a);
    const EntryCounts out = CountExcluded(inst, a);
    CHECK(in.ones + out.ones == inst.ones());
    CHECK(in.zeros + out.zeros == inst.zeros());
  }
}

TEST_CASE("efficacy does not depend on how cells are named") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = RandomInstance(5, 7, 0.5, 77 + trial);
    const Assignment a = RandomLabels(inst, 4, rng, true);
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    Assignment b = a;
    for (int& c : b.machine_cells) c = perm[c];
    for (int& c : b.part_cells) c = perm[c];
    CHECK(AssignmentEfficacy(inst, a) == AssignmentEfficacy(inst, b));
    CHECK(CountExcluded(inst, a) == CountExcluded(inst, b));
  }
}

}  // TEST_SUITE

TEST_SUITE("node") {

TEST_CASE("building from an assignment matches the full recount") {
  const Instance inst = testing::Example5x8();
  const Node node(inst, testing::Example5x8Node());
  CHECK(node.inside() == EntryCounts{8, 1});
  CHECK(node.excluded() == EntryCounts{2, 4});
  CHECK(node.cells() == 2);
  CHECK(node.assigned_machines() == 3);
  CHECK(node.assigned_parts() == 5);
  CHECK(node.cells_without_machines() == 0);
  CHECK(node.cells_without_parts() == 0);
  CHECK(node.cell_machine_count(1) == 2);
  CHECK(node.cell_part_count(1) == 4);
}

TEST_CASE("open cells track the side that is still empty") {
  const Instance inst = testing::Example5x8();
  Node node(inst);
  node.AssignMachine(0, 1);
  CHECK(node.cells() == 1);
  CHECK(node.cells_without_parts() == 1);
  node.AssignMachine(1, 2);
  CHECK(node.cells_without_parts() == 2);
  node.AssignPart(3, 2);
  CHECK(node.cells_without_parts() == 1);
  node.UnassignMachine(1);
  // Cell 2 now has a part but no machine.
  CHECK(node.cells() == 2);
  CHECK(node.cells_without_machines() == 1);
  node.UnassignPart(3);
  CHECK(node.cells() == 1);
  CHECK(node.cells_without_machines() == 0);
}

TEST_CASE("misuse is rejected") {
  const Instance inst = testing::Example5x8();
  Node node(inst);
  node.AssignMachine(0, 1);
  CHECK_THROWS_AS(node.AssignMachine(0, 2), Error);
  CHECK_THROWS_AS(node.UnassignPart(0), Error);
  CHECK_THROWS_AS(node.AssignPart(0, 0), Error);
}

TEST_CASE("incremental updates agree with recounting") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = RandomInstance(6, 9, 0.4, 500 + trial);
    Node node(inst);
    for (int step = 0; step < 200; ++step) {
      const bool machine = rng() % 2 == 0;
      const int n = machine ? inst.machines() : inst.parts();
      const int idx = static_cast<int>(rng() % n);
      const int cur = machine ? node.machine_cell(idx) : node.part_cell(idx);
      if (cur != 0) {
        machine ? node.UnassignMachine(idx) : node.UnassignPart(idx);
      } else {
        const int cell = 1 + static_cast<int>(rng() % 4);
        machine ? node.AssignMachine(idx, cell) : node.AssignPart(idx, cell);
      }
      const Assignment& a = node.assignment();
      REQUIRE(node.inside() == CountInside(inst, a));
      REQUIRE(node.excluded() == CountExcluded(inst, a));
      int without_m = 0;
      int without_p = 0;
      for (int c = 1; c <= node.cells(); ++c) {
        const bool hm = std::count(a.machine_cells.begin(), a.machine_cells.end(), c) > 0;
        const bool hp = std::count(a.part_cells.begin(), a.part_cells.end(), c) > 0;
        without_m += !hm;
        without_p += !hp;
      }
      REQUIRE(node.cells() == a.CellCount());
      REQUIRE(node.cells_without_machines() == without_m);
      REQUIRE(node.cells_without_parts() == without_p);
    }
  }
}

}  // TEST_SUITE

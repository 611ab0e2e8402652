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
#include <string>

#include "cellform/error.hpp"

namespace cellform {

Assignment Assignment::Empty(const Instance& instance) {
  return Assignment{std::vector<int>(instance.machines(), 0),
                    std::vector<int>(instance.parts(), 0)};
}

Assignment Assignment::Root(const Instance& instance) {
  Assignment a = Empty(instance);
  a.machine_cells[0] = 1;
  return a;
}

int Assignment::CellCount() const {
  int k = 0;
  for (int c : machine_cells) k = std::max(k, c);
  for (int c : part_cells) k = std::max(k, c);
  return k;
}

int Assignment::Depth() const {
  const auto assigned = [](int c) { return c != 0; };
  return static_cast<int>(std::count_if(machine_cells.begin(), machine_cells.end(), assigned) +
                          std::count_if(part_cells.begin(), part_cells.end(), assigned));
}

bool Assignment::Complete() const {
  return std::find(machine_cells.begin(), machine_cells.end(), 0) == machine_cells.end() &&
         std::find(part_cells.begin(), part_cells.end(), 0) == part_cells.end();
}

Rational Efficacy(std::int64_t ones_inside, std::int64_t total_ones,
                  std::int64_t zeros_inside) {
  return Rational(ones_inside, total_ones + zeros_inside);
}

void ValidateShape(const Instance& instance, const Assignment& assignment) {
  if (static_cast<int>(assignment.machine_cells.size()) != instance.machines() ||
      static_cast<int>(assignment.part_cells.size()) != instance.parts()) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment sized " + std::to_string(assignment.machine_cells.size()) +
                    "x" + std::to_string(assignment.part_cells.size()) +
                    " does not match instance " + std::to_string(instance.machines()) +
                    "x" + std::to_string(instance.parts()));
  }
  const int limit = instance.machines() + instance.parts();
  const auto bad = [limit](int c) { return c < 0 || c > limit; };
  if (std::any_of(assignment.machine_cells.begin(), assignment.machine_cells.end(), bad) ||
      std::any_of(assignment.part_cells.begin(), assignment.part_cells.end(), bad)) {
    throw Error(ErrorCode::kInvalidArgument, "cell label out of range");
  }
}

EntryCounts CountInside(const Instance& instance, const Assignment& assignment) {
  ValidateShape(instance, assignment);
  EntryCounts counts;
  for (int i = 0; i < instance.machines(); ++i) {
    const int cell = assignment.machine_cells[i];
    if (cell == 0) continue;
    for (int j = 0; j < instance.parts(); ++j) {
      if (assignment.part_cells[j] != cell) continue;
      if (instance.at(i, j)) {
        ++counts.ones;
      } else {
        ++counts.zeros;
      }
    }
  }
  return counts;
}

EntryCounts CountExcluded(const Instance& instance, const Assignment& assignment) {
  ValidateShape(instance, assignment);
  EntryCounts counts;
  for (int i = 0; i < instance.machines(); ++i) {
    const int cell = assignment.machine_cells[i];
    if (cell == 0) continue;
    for (int j = 0; j < instance.parts(); ++j) {
      const int other = assignment.part_cells[j];
      if (other == 0 || other == cell) continue;
      if (instance.at(i, j)) {
        ++counts.ones;
      } else {
        ++counts.zeros;
      }
    }
  }
  return counts;
}

Rational AssignmentEfficacy(const Instance& instance, const Assignment& assignment) {
  const EntryCounts in = CountInside(instance, assignment);
  return Efficacy(in.ones, instance.ones(), in.zeros);
}

bool VerifyFeasible(const Instance& instance, const Assignment& assignment) {
  ValidateShape(instance, assignment);
  if (!assignment.Complete()) {
    throw Error(ErrorCode::kContractViolation,
                "feasibility is only defined for complete assignments");
  }
  const int k = assignment.CellCount();
  std::vector<char> has_machine(k + 1, 0);
  std::vector<char> has_part(k + 1, 0);
  for (int c : assignment.machine_cells) has_machine[c] = 1;
  for (int c : assignment.part_cells) has_part[c] = 1;
  for (int c = 1; c <= k; ++c) {
    if (!has_machine[c] || !has_part[c]) return false;
  }
  return true;
}

}  // namespace cellform

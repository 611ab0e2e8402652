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

#ifndef CELLFORM_ASSIGNMENT_HPP_
#define CELLFORM_ASSIGNMENT_HPP_

#include <cstdint>
#include <vector>

#include "cellform/instance.hpp"
#include "cellform/rational.hpp"

namespace cellform {

// Cell label of each machine and part. 0 means unassigned, cells are 1..k.
//
// Labels produced by the search follow first-appearance order along the
// branching sequence (machine 1, part 1, machine 2, part 2, ...), so every
// partition has exactly one representative.
struct Assignment {
  std::vector<int> machine_cells;
  std::vector<int> part_cells;

  static Assignment Empty(const Instance& instance);
  // Machine 1 in cell 1, everything else unassigned.
  static Assignment Root(const Instance& instance);

  int CellCount() const;
  int Depth() const;
  bool Complete() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct EntryCounts {
  std::int64_t ones = 0;
  std::int64_t zeros = 0;

  friend bool operator==(const EntryCounts&, const EntryCounts&) = default;
};

// Grouping efficacy ones_inside / (total_ones + zeros_inside).
Rational Efficacy(std::int64_t ones_inside, std::int64_t total_ones,
                  std::int64_t zeros_inside);

// Entries whose machine and part share a cell.
EntryCounts CountInside(const Instance& instance, const Assignment& assignment);

// Entries whose machine and part are both assigned but to different cells;
// these stay outside cells in every completion.
EntryCounts CountExcluded(const Instance& instance, const Assignment& assignment);

// Efficacy of the cells formed so far.
Rational AssignmentEfficacy(const Instance& instance, const Assignment& assignment);

// True iff every used cell label has at least one machine and one part.
// Throws Error{kContractViolation} on an incomplete assignment.
bool VerifyFeasible(const Instance& instance, const Assignment& assignment);

// Throws Error{kInvalidArgument} if the vector sizes do not match the
// instance or a label is negative or larger than machines + parts.
void ValidateShape(const Instance& instance, const Assignment& assignment);

}  // namespace cellform

#endif  // CELLFORM_ASSIGNMENT_HPP_

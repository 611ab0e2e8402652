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

#include "cellform/node.hpp"

#include <algorithm>
#include <string>

#include "cellform/error.hpp"

namespace cellform {
namespace {

void SetBit(std::span<Word> bits, int index) {
  bits[index / kWordBits] |= Word{1} << (index % kWordBits);
}

void ClearBit(std::span<Word> bits, int index) {
  bits[index / kWordBits] &= ~(Word{1} << (index % kWordBits));
}

}  // namespace

Node::Node(const Instance& instance)
    : instance_(&instance), assignment_(Assignment::Empty(instance)) {
  capacity_ = instance.machines() + instance.parts();
  machine_words_ = instance.col_words();
  part_words_ = instance.row_words();
  cell_part_bits_.assign(static_cast<std::size_t>(capacity_ + 1) * part_words_, 0);
  cell_machine_bits_.assign(static_cast<std::size_t>(capacity_ + 1) * machine_words_, 0);
  assigned_part_bits_.assign(part_words_, 0);
  assigned_machine_bits_.assign(machine_words_, 0);
  cell_machines_.assign(capacity_ + 1, 0);
  cell_parts_.assign(capacity_ + 1, 0);
}

Node::Node(const Instance& instance, const Assignment& assignment) : Node(instance) {
  ValidateShape(instance, assignment);
  for (int i = 0; i < instance.machines(); ++i) {
    if (assignment.machine_cells[i] != 0) AssignMachine(i, assignment.machine_cells[i]);
  }
  for (int j = 0; j < instance.parts(); ++j) {
    if (assignment.part_cells[j] != 0) AssignPart(j, assignment.part_cells[j]);
  }
}

void Node::CheckCell(int cell) const {
  if (cell < 1 || cell > capacity_) {
    throw Error(ErrorCode::kInvalidArgument,
                "cell label " + std::to_string(cell) + " out of range");
  }
}

void Node::RecomputeOpenCells(int touched) {
  int top = std::max(open_cells_, touched);
  while (top > 0 && cell_machines_[top] == 0 && cell_parts_[top] == 0) --top;
  open_cells_ = top;
  cells_without_machines_ = 0;
  cells_without_parts_ = 0;
  for (int c = 1; c <= open_cells_; ++c) {
    if (cell_machines_[c] == 0) ++cells_without_machines_;
    if (cell_parts_[c] == 0) ++cells_without_parts_;
  }
}

void Node::AssignMachine(int machine, int cell) {
  CheckCell(cell);
  if (assignment_.machine_cells[machine] != 0) {
    throw Error(ErrorCode::kContractViolation,
                "machine " + std::to_string(machine + 1) + " is already assigned");
  }
  const auto row = instance_->RowBits(machine);
  const int in_ones = CountAnd(row, CellParts(cell));
  const int assigned_ones = CountAnd(row, AssignedParts());
  inside_.ones += in_ones;
  inside_.zeros += cell_parts_[cell] - in_ones;
  excluded_.ones += assigned_ones - in_ones;
  excluded_.zeros += (assigned_parts_ - cell_parts_[cell]) - (assigned_ones - in_ones);

  assignment_.machine_cells[machine] = cell;
  SetBit({cell_machine_bits_.data() + static_cast<std::size_t>(cell) * machine_words_,
          static_cast<std::size_t>(machine_words_)},
         machine);
  SetBit(assigned_machine_bits_, machine);
  ++cell_machines_[cell];
  ++assigned_machines_;
  RecomputeOpenCells(cell);
}

void Node::UnassignMachine(int machine) {
  const int cell = assignment_.machine_cells[machine];
  if (cell == 0) {
    throw Error(ErrorCode::kContractViolation,
                "machine " + std::to_string(machine + 1) + " is not assigned");
  }
  assignment_.machine_cells[machine] = 0;
  ClearBit({cell_machine_bits_.data() + static_cast<std::size_t>(cell) * machine_words_,
            static_cast<std::size_t>(machine_words_)},
           machine);
  ClearBit(assigned_machine_bits_, machine);
  --cell_machines_[cell];
  --assigned_machines_;

  const auto row = instance_->RowBits(machine);
  const int in_ones = CountAnd(row, CellParts(cell));
  const int assigned_ones = CountAnd(row, AssignedParts());
  inside_.ones -= in_ones;
  inside_.zeros -= cell_parts_[cell] - in_ones;
  excluded_.ones -= assigned_ones - in_ones;
  excluded_.zeros -= (assigned_parts_ - cell_parts_[cell]) - (assigned_ones - in_ones);
  RecomputeOpenCells(cell);
}

void Node::AssignPart(int part, int cell) {
  CheckCell(cell);
  if (assignment_.part_cells[part] != 0) {
    throw Error(ErrorCode::kContractViolation,
                "part " + std::to_string(part + 1) + " is already assigned");
  }
  const auto col = instance_->ColBits(part);
  const int in_ones = CountAnd(col, CellMachines(cell));
  const int assigned_ones = CountAnd(col, AssignedMachines());
  inside_.ones += in_ones;
  inside_.zeros += cell_machines_[cell] - in_ones;
  excluded_.ones += assigned_ones - in_ones;
  excluded_.zeros += (assigned_machines_ - cell_machines_[cell]) - (assigned_ones - in_ones);

  assignment_.part_cells[part] = cell;
  SetBit({cell_part_bits_.data() + static_cast<std::size_t>(cell) * part_words_,
          static_cast<std::size_t>(part_words_)},
         part);
  SetBit(assigned_part_bits_, part);
  ++cell_parts_[cell];
  ++assigned_parts_;
  RecomputeOpenCells(cell);
}

void Node::UnassignPart(int part) {
  const int cell = assignment_.part_cells[part];
  if (cell == 0) {
    throw Error(ErrorCode::kContractViolation,
                "part " + std::to_string(part + 1) + " is not assigned");
  }
  assignment_.part_cells[part] = 0;
  ClearBit({cell_part_bits_.data() + static_cast<std::size_t>(cell) * part_words_,
            static_cast<std::size_t>(part_words_)},
           part);
  ClearBit(assigned_part_bits_, part);
  --cell_parts_[cell];
  --assigned_parts_;

  const auto col = instance_->ColBits(part);
  const int in_ones = CountAnd(col, CellMachines(cell));
  const int assigned_ones = CountAnd(col, AssignedMachines());
  inside_.ones -= in_ones;
  inside_.zeros -= cell_machines_[cell] - in_ones;
  excluded_.ones -= assigned_ones - in_ones;
  excluded_.zeros -= (assigned_machines_ - cell_machines_[cell]) - (assigned_ones - in_ones);
  RecomputeOpenCells(cell);
}

}  // namespace cellform

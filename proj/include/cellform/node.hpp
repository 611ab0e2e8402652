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

#ifndef CELLFORM_NODE_HPP_
#define CELLFORM_NODE_HPP_

#include <span>
#include <vector>

#include "cellform/assignment.hpp"
#include "cellform/instance.hpp"

namespace cellform {

// Mutable search state over one instance: the assignment plus per-cell
// member bitsets and running inside/excluded counters.
//
// Assign*/Unassign* update the counters by the delta of a single entity.
// Unassign must be called on an entity that is currently assigned; the
// search uses them in strict LIFO order but any order is valid.
class Node {
 public:
  explicit Node(const Instance& instance);
  // Builds the state for an arbitrary assignment (full recount).
  Node(const Instance& instance, const Assignment& assignment);
  // The instance is referenced, not copied.
  explicit Node(Instance&&) = delete;
  Node(Instance&&, const Assignment&) = delete;

  void AssignMachine(int machine, int cell);
  void UnassignMachine(int machine);
  void AssignPart(int part, int cell);
  void UnassignPart(int part);

  const Instance& instance() const { return *instance_; }
  const Assignment& assignment() const { return assignment_; }

  // Highest label currently holding a machine or a part.
  int cells() const { return open_cells_; }
  int machine_cell(int machine) const { return assignment_.machine_cells[machine]; }
  int part_cell(int part) const { return assignment_.part_cells[part]; }
  int cell_machine_count(int cell) const { return cell_machines_[cell]; }
  int cell_part_count(int cell) const { return cell_parts_[cell]; }
  int assigned_machines() const { return assigned_machines_; }
  int assigned_parts() const { return assigned_parts_; }
  int unassigned_machines() const { return instance_->machines() - assigned_machines_; }
  int unassigned_parts() const { return instance_->parts() - assigned_parts_; }

  // Open cells (1..cells()) that have no machine / no part yet. Unused
  // labels below cells() count on both sides.
  int cells_without_machines() const { return cells_without_machines_; }
  int cells_without_parts() const { return cells_without_parts_; }

  const EntryCounts& inside() const { return inside_; }
  const EntryCounts& excluded() const { return excluded_; }

  // Parts in `cell` (bitset over parts).
  std::span<const Word> CellParts(int cell) const {
    return {cell_part_bits_.data() + static_cast<std::size_t>(cell) * part_words_,
            static_cast<std::size_t>(part_words_)};
  }
  // Machines in `cell` (bitset over machines).
  std::span<const Word> CellMachines(int cell) const {
    return {cell_machine_bits_.data() + static_cast<std::size_t>(cell) * machine_words_,
            static_cast<std::size_t>(machine_words_)};
  }
  std::span<const Word> AssignedParts() const { return assigned_part_bits_; }
  std::span<const Word> AssignedMachines() const { return assigned_machine_bits_; }

  // Highest label the node can store.
  int capacity() const { return capacity_; }

 private:
  void CheckCell(int cell) const;
  void RecomputeOpenCells(int touched);

  const Instance* instance_;
  Assignment assignment_;
  int capacity_ = 0;
  int machine_words_ = 0;
  int part_words_ = 0;
  std::vector<Word> cell_part_bits_;
  std::vector<Word> cell_machine_bits_;
  std::vector<Word> assigned_part_bits_;
  std::vector<Word> assigned_machine_bits_;
  std::vector<int> cell_machines_;
  std::vector<int> cell_parts_;
  int assigned_machines_ = 0;
  int assigned_parts_ = 0;
  int open_cells_ = 0;
  int cells_without_machines_ = 0;
  int cells_without_parts_ = 0;
  EntryCounts inside_;
  EntryCounts excluded_;
};

// popcount(a & b)
inline int CountAnd(std::span<const Word> a, std::span<const Word> b) {
  int n = 0;
  for (std::size_t w = 0; w < a.size(); ++w) n += __builtin_popcountll(a[w] & b[w]);
  return n;
}

// popcount(a & ~b)
inline int CountAndNot(std::span<const Word> a, std::span<const Word> b) {
  int n = 0;
  for (std::size_t w = 0; w < a.size(); ++w) n += __builtin_popcountll(a[w] & ~b[w]);
  return n;
}

}  // namespace cellform

#endif  // CELLFORM_NODE_HPP_

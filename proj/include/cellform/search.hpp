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

#ifndef CELLFORM_SEARCH_HPP_
#define CELLFORM_SEARCH_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cellform/assignment.hpp"
#include "cellform/instance.hpp"
#include "cellform/rational.hpp"

namespace cellform {

struct SearchConfig {
  std::optional<double> time_limit_seconds;
  std::optional<std::int64_t> node_limit;
  // Solutions must beat this efficacy to be reported. Unset by default.
  std::optional<Rational> initial_incumbent;
  // With pruning off every child is visited; used to check the tree itself.
  bool prune = true;
  // Polled together with the time limit; set it to stop the search early.
  const std::atomic<bool>* cancel = nullptr;

  // Observers, mostly for tests. All are optional.
  std::function<void(const Assignment&)> on_node;
  std::function<void(const Assignment&)> on_leaf;
  std::function<void(const Assignment&, const Rational&)> on_incumbent;
};

struct SolveResult {
  std::optional<Assignment> best_assignment;
  std::optional<Rational> best_efficacy;
  bool proven_optimal = false;
  std::int64_t nodes_explored = 0;
  std::int64_t nodes_pruned = 0;
  int max_depth = 0;
  double elapsed_seconds = 0.0;
};

struct Entity {
  enum class Kind { kMachine, kPart, kNone };
  Kind kind = Kind::kNone;
  int index = -1;

  friend bool operator==(const Entity&, const Entity&) = default;
};

// Machines and parts alternate, starting with a machine; each step takes the
// lowest-index unassigned entity of the kind that is due, or of the other
// kind once one kind is exhausted.
Entity NextBranchEntity(const Assignment& assignment);

// Children of `assignment` obtained by placing `entity` into each open cell
// and into the next fresh cell, dropping those that can no longer be
// completed: open cells without machines must not outnumber unassigned
// machines, likewise for parts, and at most max_cells() cells exist.
std::vector<Assignment> GenerateChildren(const Instance& instance,
                                         const Assignment& assignment, Entity entity);

// Depth-first branch and bound from the root (machine 1 in cell 1). Children
// are ordered by descending upper bound, ties by ascending cell label, and a
// child is pruned when its bound does not exceed the incumbent.
//
// proven_optimal is true only when the tree was exhausted and a solution is
// reported. With an initial incumbent that nothing beats, the result has no
// assignment and proven_optimal stays false.
SolveResult Solve(const Instance& instance, const SearchConfig& config = {});

}  // namespace cellform

#endif  // CELLFORM_SEARCH_HPP_

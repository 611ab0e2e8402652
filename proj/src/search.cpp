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

#include "cellform/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

#include "cellform/bound.hpp"
#include "cellform/error.hpp"
#include "cellform/node.hpp"

namespace cellform {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kClockPollInterval = 256;

int FirstUnassigned(const std::vector<int>& cells) {
  const auto it = std::find(cells.begin(), cells.end(), 0);
  return it == cells.end() ? -1 : static_cast<int>(it - cells.begin());
}

void Place(Node& node, Entity entity, int cell) {
  if (entity.kind == Entity::Kind::kMachine) {
    node.AssignMachine(entity.index, cell);
  } else {
    node.AssignPart(entity.index, cell);
  }
}

void Unplace(Node& node, Entity entity) {
  if (entity.kind == Entity::Kind::kMachine) {
    node.UnassignMachine(entity.index);
  } else {
    node.UnassignPart(entity.index);
  }
}

bool Completable(const Node& node) {
  return node.cells() <= node.instance().max_cells() &&
         node.cells_without_machines() <= node.unassigned_machines() &&
         node.cells_without_parts() <= node.unassigned_parts();
}

// Labels of the surviving children of `entity` at `node`, ascending.
void ChildLabels(Node& node, Entity entity, std::vector<int>& labels) {
  labels.clear();
  const int top = std::min(node.cells() + 1, node.instance().max_cells());
  for (int cell = 1; cell <= top; ++cell) {
    Place(node, entity, cell);
    if (Completable(node)) labels.push_back(cell);
    Unplace(node, entity);
  }
}

class Searcher {
 public:
  Searcher(const Instance& instance, const SearchConfig& config)
      : instance_(instance), config_(config), node_(instance), start_(Clock::now()) {
    incumbent_ = config.initial_incumbent;
    if (config.time_limit_seconds) {
      deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*config.time_limit_seconds));
    }
  }

  SolveResult Run() {
    node_.AssignMachine(0, 1);
    Visit();
    result_.proven_optimal = !stopped_ && result_.best_assignment.has_value();
    result_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  struct Child {
    int cell;
    Rational bound;
  };

  bool ShouldStop() {
    if (stopped_) return true;
    if (config_.node_limit && result_.nodes_explored >= *config_.node_limit) {
      stopped_ = true;
    } else if (result_.nodes_explored % kClockPollInterval == 0) {
      if (config_.cancel && config_.cancel->load(std::memory_order_relaxed)) stopped_ = true;
      if (deadline_ && Clock::now() >= *deadline_) stopped_ = true;
    }
    return stopped_;
  }

  void Visit() {
    if (ShouldStop()) return;
    ++result_.nodes_explored;
    const Assignment& current = node_.assignment();
    const int depth = node_.assigned_machines() + node_.assigned_parts();
    result_.max_depth = std::max(result_.max_depth, depth);
    if (config_.on_node) config_.on_node(current);

#ifndef NDEBUG
    if (result_.nodes_explored % 4096 == 0) {
      assert(node_.inside() == CountInside(instance_, current));
      assert(node_.excluded() == CountExcluded(instance_, current));
    }
#endif

    const Entity entity = NextBranchEntity(current);
    if (entity.kind == Entity::Kind::kNone) {
      OnLeaf();
      return;
    }

    std::vector<int> labels;
    ChildLabels(node_, entity, labels);
    std::vector<Child> children;
    children.reserve(labels.size());
    for (int cell : labels) {
      Place(node_, entity, cell);
      children.push_back({cell, UpperBound(node_)});
      Unplace(node_, entity);
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const Child& x, const Child& y) { return x.bound > y.bound; });

    for (const Child& child : children) {
      if (stopped_) return;
      if (config_.prune && incumbent_ && child.bound <= *incumbent_) {
        ++result_.nodes_pruned;
        continue;
      }
      Place(node_, entity, child.cell);
      Visit();
      Unplace(node_, entity);
    }
  }

  void OnLeaf() {
    if (node_.cells_without_machines() != 0 || node_.cells_without_parts() != 0) return;
    const Assignment& leaf = node_.assignment();
    if (config_.on_leaf) config_.on_leaf(leaf);
    const Rational value = Efficacy(node_.inside().ones, instance_.ones(), node_.inside().zeros);
    if (incumbent_ && value <= *incumbent_) return;
    incumbent_ = value;
    result_.best_efficacy = value;
    result_.best_assignment = leaf;
    if (config_.on_incumbent) config_.on_incumbent(leaf, value);
  }

  const Instance& instance_;
  const SearchConfig& config_;
  Node node_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  std::optional<Rational> incumbent_;
  SolveResult result_;
  bool stopped_ = false;
};

}  // namespace

Entity NextBranchEntity(const Assignment& assignment) {
  const int machine = FirstUnassigned(assignment.machine_cells);
  const int part = FirstUnassigned(assignment.part_cells);
  if (machine < 0 && part < 0) return {};
  if (machine < 0) return {Entity::Kind::kPart, part};
  if (part < 0) return {Entity::Kind::kMachine, machine};

  const auto count = [](const std::vector<int>& cells) {
    return std::count_if(cells.begin(), cells.end(), [](int c) { return c != 0; });
  };
  if (count(assignment.machine_cells) <= count(assignment.part_cells)) {
    return {Entity::Kind::kMachine, machine};
  }
  return {Entity::Kind::kPart, part};
}

std::vector<Assignment> GenerateChildren(const Instance& instance,
                                         const Assignment& assignment, Entity entity) {
  Node node(instance, assignment);
  if (entity.kind == Entity::Kind::kNone) return {};
  const int limit = entity.kind == Entity::Kind::kMachine ? instance.machines() : instance.parts();
  if (entity.index < 0 || entity.index >= limit) {
    throw Error(ErrorCode::kInvalidArgument, "branching entity index out of range");
  }
  const bool assigned = entity.kind == Entity::Kind::kMachine
                            ? node.machine_cell(entity.index) != 0
                            : node.part_cell(entity.index) != 0;
  if (assigned) {
    throw Error(ErrorCode::kContractViolation, "branching entity is already assigned");
  }
  std::vector<int> labels;
  ChildLabels(node, entity, labels);
  std::vector<Assignment> children;
  children.reserve(labels.size());
  for (int cell : labels) {
    Assignment child = assignment;
    if (entity.kind == Entity::Kind::kMachine) {
      child.machine_cells[entity.index] = cell;
    } else {
      child.part_cells[entity.index] = cell;
    }
    children.push_back(std::move(child));
  }
  return children;
}

SolveResult Solve(const Instance& instance, const SearchConfig& config) {
  if (config.time_limit_seconds && !(*config.time_limit_seconds > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "time limit must be positive");
  }
  if (config.node_limit && *config.node_limit <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "node limit must be positive");
  }
  return Searcher(instance, config).Run();
}

}  // namespace cellform

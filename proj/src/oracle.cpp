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

#include "cellform/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "cellform/bound.hpp"
#include "cellform/error.hpp"
#include "cellform/node.hpp"

namespace cellform {
namespace {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double NextUnit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Calls visit(labels, cells) for every restricted growth string of length n.
template <typename Visit>
void ForEachPartition(int n, Visit&& visit) {
  std::vector<int> labels(n, 1);
  std::vector<int> prefix_max(n, 1);
  while (true) {
    visit(labels, prefix_max[n - 1]);
    int pos = n - 1;
    while (pos > 0 && labels[pos] > prefix_max[pos - 1]) --pos;
    if (pos == 0) return;
    ++labels[pos];
    prefix_max[pos] = std::max(prefix_max[pos - 1], labels[pos]);
    for (int t = pos + 1; t < n; ++t) {
      labels[t] = 1;
      prefix_max[t] = prefix_max[pos];
    }
  }
}

EntryCounts DirectCountInside(const Instance& inst, const std::vector<int>& machine_cells,
                              const std::vector<int>& part_cells) {
  EntryCounts counts;
  for (int i = 0; i < inst.machines(); ++i) {
    for (int j = 0; j < inst.parts(); ++j) {
      if (machine_cells[i] == 0 || machine_cells[i] != part_cells[j]) continue;
      if (inst.at(i, j)) {
        ++counts.ones;
      } else {
        ++counts.zeros;
      }
    }
  }
  return counts;
}

}  // namespace

bool OracleAccepts(const Instance& instance) {
  return instance.machines() <= kOracleMaxMachines && instance.parts() <= kOracleMaxParts;
}

SolveResult BruteForceSolve(const Instance& instance) {
  if (!OracleAccepts(instance)) {
    throw Error(ErrorCode::kSizeGuard,
                "brute force is limited to " + std::to_string(kOracleMaxMachines) + "x" +
                    std::to_string(kOracleMaxParts) + " instances");
  }
  const auto start = std::chrono::steady_clock::now();
  const int m = instance.machines();
  const int p = instance.parts();
  SolveResult result;

  ForEachPartition(m, [&](const std::vector<int>& machine_cells, int cells) {
    // ones[j][c]: ones of part j over machines of cell c; size[c]: machines.
    std::vector<std::vector<std::int64_t>> ones(p, std::vector<std::int64_t>(cells + 1, 0));
    std::vector<std::int64_t> size(cells + 1, 0);
    for (int i = 0; i < m; ++i) {
      ++size[machine_cells[i]];
      for (int j = 0; j < p; ++j) {
        if (instance.at(i, j)) ++ones[j][machine_cells[i]];
      }
    }
    std::vector<int> part_cells(p, 1);
    std::vector<int> parts_in(cells + 1, 0);
    while (true) {
      ++result.nodes_explored;
      std::fill(parts_in.begin(), parts_in.end(), 0);
      std::int64_t in_ones = 0;
      std::int64_t in_zeros = 0;
      for (int j = 0; j < p; ++j) {
        const int c = part_cells[j];
        ++parts_in[c];
        in_ones += ones[j][c];
        in_zeros += size[c] - ones[j][c];
      }
      const bool feasible =
          std::all_of(parts_in.begin() + 1, parts_in.end(), [](int n) { return n > 0; });
      if (feasible) {
        const Rational value = Efficacy(in_ones, instance.ones(), in_zeros);
        if (!result.best_efficacy || value > *result.best_efficacy) {
          result.best_efficacy = value;
          result.best_assignment = Assignment{machine_cells, part_cells};
        }
      }
      int pos = p - 1;
      while (pos >= 0 && part_cells[pos] == cells) part_cells[pos--] = 1;
      if (pos < 0) break;
      ++part_cells[pos];
    }
  });

  result.proven_optimal = true;
  result.max_depth = m + p;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Rational BruteForceRelaxed(const Instance& instance, const Assignment& assignment) {
  const Node node(instance, assignment);
  std::vector<std::vector<Alternative>> lists;
  for (int i = 0; i < instance.machines(); ++i) {
    if (node.machine_cell(i) == 0) lists.push_back(MachineAlternatives(node, i));
  }
  for (int j = 0; j < instance.parts(); ++j) {
    if (node.part_cell(j) == 0) lists.push_back(PartAlternatives(node, j));
  }
  std::int64_t combinations = 1;
  for (const auto& list : lists) {
    combinations *= static_cast<std::int64_t>(list.size());
    if (combinations > kRelaxedMaxCombinations) {
      throw Error(ErrorCode::kSizeGuard, "relaxation has more than 10^6 combinations");
    }
  }

  const std::int64_t base_num = node.inside().ones;
  const std::int64_t base_den = instance.ones() + node.inside().zeros;
  Rational best(base_num, base_den);
  bool have = false;
  std::vector<std::size_t> pick(lists.size(), 0);
  while (true) {
    std::int64_t num = base_num;
    std::int64_t den = base_den;
    for (std::size_t e = 0; e < lists.size(); ++e) {
      num += lists[e][pick[e]].ones;
      den += lists[e][pick[e]].zeros;
    }
    const Rational value(num, den);
    if (!have || value > best) {
      best = value;
      have = true;
    }
    std::size_t pos = lists.size();
    while (pos > 0 && pick[pos - 1] + 1 == lists[pos - 1].size()) pick[--pos] = 0;
    if (pos == 0) break;
    ++pick[pos - 1];
  }
  return best;
}

std::optional<Rational> BestCompletion(const Instance& instance, const Assignment& assignment) {
  ValidateShape(instance, assignment);
  const int m = instance.machines();
  const int max_label = instance.max_cells();

  // Unassigned entities as indices into one combined label vector:
  // [0, m) machines, [m, m + p) parts.
  std::vector<int> labels = assignment.machine_cells;
  labels.insert(labels.end(), assignment.part_cells.begin(), assignment.part_cells.end());
  std::vector<int> open;
  for (int e = 0; e < static_cast<int>(labels.size()); ++e) {
    if (labels[e] == 0) open.push_back(e);
  }
  const int start_cells = assignment.CellCount();
  if (start_cells > max_label) return std::nullopt;

  std::int64_t estimate = 1;
  for (std::size_t t = 0; t < open.size(); ++t) {
    estimate *= std::min<std::int64_t>(start_cells + 1 + static_cast<std::int64_t>(t), max_label);
    if (estimate > kCompletionMaxCombinations) {
      throw Error(ErrorCode::kSizeGuard, "too many completions to enumerate");
    }
  }

  std::optional<Rational> best;
  std::vector<int> machine_cells(m);
  std::vector<int> part_cells(instance.parts());
  const auto evaluate = [&]() {
    std::copy(labels.begin(), labels.begin() + m, machine_cells.begin());
    std::copy(labels.begin() + m, labels.end(), part_cells.begin());
    const Assignment full{machine_cells, part_cells};
    if (!VerifyFeasible(instance, full)) return;
    const EntryCounts in = DirectCountInside(instance, machine_cells, part_cells);
    const Rational value = Efficacy(in.ones, instance.ones(), in.zeros);
    if (!best || value > *best) best = value;
  };
  const auto recurse = [&](auto&& self, std::size_t t, int cells) -> void {
    if (t == open.size()) {
      evaluate();
      return;
    }
    const int top = std::min(cells + 1, max_label);
    for (int c = 1; c <= top; ++c) {
      labels[open[t]] = c;
      self(self, t + 1, std::max(cells, c));
    }
    labels[open[t]] = 0;
  };
  recurse(recurse, 0, start_cells);
  return best;
}

Instance RandomInstance(int machines, int parts, double density, std::uint64_t seed) {
  if (machines < 1 || parts < machines) {
    throw Error(ErrorCode::kInvalidArgument, "random instance needs 1 <= machines <= parts");
  }
  if (!(density > 0.0 && density < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "density must lie strictly between 0 and 1");
  }
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> rows(machines, std::vector<int>(parts, 0));
  while (true) {
    int ones = 0;
    for (auto& row : rows) {
      for (int& v : row) {
        v = rng.NextUnit() < density ? 1 : 0;
        ones += v;
      }
    }
    if (ones > 0) return Instance::FromRows(rows);
  }
}

}  // namespace cellform

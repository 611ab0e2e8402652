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

#include <algorithm>
#include <numeric>
#include <string>

#include "cellform/error.hpp"

namespace cellform {
namespace {

void FillMachineAlternatives(const Node& node, int machine, std::vector<Alternative>& out) {
  const Instance& inst = node.instance();
  const auto row = inst.RowBits(machine);
  const std::int64_t free_ones = CountAndNot(row, node.AssignedParts());
  out.clear();
  for (int c = 1; c <= node.cells(); ++c) {
    const int cell_ones = CountAnd(row, node.CellParts(c));
    out.push_back({cell_ones + free_ones, node.cell_part_count(c) - cell_ones});
  }
  out.push_back({free_ones, 0});
}

void FillPartAlternatives(const Node& node, int part, std::vector<Alternative>& out) {
  const auto col = node.instance().ColBits(part);
  out.clear();
  for (int c = 1; c <= node.cells(); ++c) {
    const int cell_ones = CountAnd(col, node.CellMachines(c));
    out.push_back({cell_ones, node.cell_machine_count(c) - cell_ones});
  }
  out.push_back({0, 0});
}

ComparisonContext BaseContext(const Node& node) {
  ComparisonContext ctx;
  ctx.total_ones = node.instance().ones();
  ctx.total_zeros = node.instance().zeros();
  ctx.inside_ones = node.inside().ones;
  ctx.inside_zeros = node.inside().zeros;
  ctx.excluded_ones = node.excluded().ones;
  ctx.excluded_zeros = node.excluded().zeros;
  return ctx;
}

void RequireUnassignedMachine(const Node& node, int machine) {
  if (machine < 0 || machine >= node.instance().machines()) {
    throw Error(ErrorCode::kInvalidArgument, "machine index out of range");
  }
  if (node.machine_cell(machine) != 0) {
    throw Error(ErrorCode::kContractViolation,
                "machine " + std::to_string(machine + 1) + " is already assigned");
  }
}

void RequireUnassignedPart(const Node& node, int part) {
  if (part < 0 || part >= node.instance().parts()) {
    throw Error(ErrorCode::kInvalidArgument, "part index out of range");
  }
  if (node.part_cell(part) != 0) {
    throw Error(ErrorCode::kContractViolation,
                "part " + std::to_string(part + 1) + " is already assigned");
  }
}

Preference Mirror(Preference p) {
  switch (p) {
    case Preference::kFirst: return Preference::kSecond;
    case Preference::kSecond: return Preference::kFirst;
    default: return p;
  }
}

// Marks in `dominated` every alternative beaten on both counts by another
// one; among identical alternatives only the first survives. `order` is scratch.
void KeepUndominated(std::span<const Alternative> alts, std::vector<std::size_t>& order,
                     std::vector<char>& dominated) {
  const std::size_t n = alts.size();
  order.resize(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Fewest zeros first, most ones first within equal zeros; stable so the
  // first of several identical alternatives is the one kept.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (alts[x].zeros != alts[y].zeros) return alts[x].zeros < alts[y].zeros;
    return alts[x].ones > alts[y].ones;
  });
  dominated.assign(n, 0);
  std::int64_t best_ones_fewer_zeros = -1;  // over strictly fewer zeros
  std::size_t g = 0;
  while (g < n) {
    std::size_t end = g;
    while (end < n && alts[order[end]].zeros == alts[order[g]].zeros) ++end;
    const std::int64_t group_max = alts[order[g]].ones;
    for (std::size_t t = g; t < end; ++t) {
      const Alternative& a = alts[order[t]];
      if (t > g || a.ones <= best_ones_fewer_zeros) dominated[order[t]] = 1;
    }
    best_ones_fewer_zeros = std::max(best_ones_fewer_zeros, group_max);
    g = end;
  }
}

Alternative FoldBest(std::span<const Alternative> alts, const ComparisonContext& ctx,
                     std::vector<std::size_t>& order, std::vector<char>& dominated) {
  KeepUndominated(alts, order, dominated);
  bool have = false;
  Alternative champion;
  for (std::size_t t = 0; t < alts.size(); ++t) {
    if (dominated[t]) continue;
    if (!have) {
      champion = alts[t];
      have = true;
      continue;
    }
    switch (CompareAlternatives(champion, alts[t], ctx)) {
      case Preference::kFirst:
      case Preference::kEquivalent:
        break;
      case Preference::kSecond:
        champion = alts[t];
        break;
      case Preference::kIncomparable:
        champion = {std::max(champion.ones, alts[t].ones),
                    std::min(champion.zeros, alts[t].zeros)};
        break;
    }
  }
  return champion;
}

}  // namespace

std::vector<Alternative> MachineAlternatives(const Node& node, int machine) {
  RequireUnassignedMachine(node, machine);
  std::vector<Alternative> out;
  FillMachineAlternatives(node, machine, out);
  return out;
}

std::vector<Alternative> MachineAlternatives(const Instance& instance,
                                             const Assignment& assignment, int machine) {
  return MachineAlternatives(Node(instance, assignment), machine);
}

std::vector<Alternative> PartAlternatives(const Node& node, int part) {
  RequireUnassignedPart(node, part);
  std::vector<Alternative> out;
  FillPartAlternatives(node, part, out);
  return out;
}

std::vector<Alternative> PartAlternatives(const Instance& instance,
                                          const Assignment& assignment, int part) {
  return PartAlternatives(Node(instance, assignment), part);
}

ComparisonContext MachineContext(const Node& node, int machine) {
  ComparisonContext ctx = BaseContext(node);
  ctx.entity_ones = node.instance().row_ones(machine);
  ctx.entity_zeros = node.instance().parts() - ctx.entity_ones;
  return ctx;
}

ComparisonContext PartContext(const Node& node, int part) {
  ComparisonContext ctx = BaseContext(node);
  ctx.entity_ones = CountAnd(node.instance().ColBits(part), node.AssignedMachines());
  ctx.entity_zeros = node.assigned_machines() - ctx.entity_ones;
  return ctx;
}

Preference CompareAlternatives(const Alternative& first, const Alternative& second,
                               const ComparisonContext& ctx) {
  if (second.zeros < first.zeros) return Mirror(CompareAlternatives(second, first, ctx));

  const std::int64_t d_ones = second.ones - first.ones;
  const std::int64_t d_zeros = second.zeros - first.zeros;
  if (d_zeros == 0) {
    if (d_ones < 0) return Preference::kFirst;
    if (d_ones > 0) return Preference::kSecond;
    return Preference::kEquivalent;
  }

  // Both guards are the fractional tests multiplied through by
  // d_zeros > 0 and the current denominator > 0.
  const std::int64_t cur_num = ctx.current_numerator();
  const std::int64_t cur_den = ctx.current_denominator();
  if (d_zeros * (cur_num + first.ones) >= d_ones * (cur_den + first.zeros)) {
    return Preference::kFirst;
  }
  const std::int64_t max_den = ctx.max_denominator();
  const std::int64_t max_num = ctx.max_numerator();
  if (max_den * (d_zeros * max_num - cur_den * d_ones) <=
      cur_den * (first.zeros * d_ones - first.ones * d_zeros)) {
    return Preference::kSecond;
  }
  return Preference::kIncomparable;
}

std::vector<std::size_t> UndominatedIndices(std::span<const Alternative> alternatives) {
  std::vector<std::size_t> order;
  std::vector<char> dominated;
  KeepUndominated(alternatives, order, dominated);
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < alternatives.size(); ++t) {
    if (!dominated[t]) out.push_back(t);
  }
  return out;
}

Alternative BestAlternative(std::span<const Alternative> alternatives,
                            const ComparisonContext& context) {
  if (alternatives.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no alternatives to choose from");
  }
  std::vector<std::size_t> order;
  std::vector<char> dominated;
  return FoldBest(alternatives, context, order, dominated);
}

Rational UpperBound(const Node& node) {
  thread_local std::vector<Alternative> alts;
  thread_local std::vector<std::size_t> order;
  thread_local std::vector<char> dominated;

  const Instance& inst = node.instance();
  std::int64_t num = node.inside().ones;
  std::int64_t den = inst.ones() + node.inside().zeros;
  const ComparisonContext base = BaseContext(node);

  for (int i = 0; i < inst.machines(); ++i) {
    if (node.machine_cell(i) != 0) continue;
    FillMachineAlternatives(node, i, alts);
    ComparisonContext ctx = base;
    ctx.entity_ones = inst.row_ones(i);
    ctx.entity_zeros = inst.parts() - ctx.entity_ones;
    const Alternative best = FoldBest(alts, ctx, order, dominated);
    num += best.ones;
    den += best.zeros;
  }
  for (int j = 0; j < inst.parts(); ++j) {
    if (node.part_cell(j) != 0) continue;
    FillPartAlternatives(node, j, alts);
    ComparisonContext ctx = base;
    ctx.entity_ones = CountAnd(inst.ColBits(j), node.AssignedMachines());
    ctx.entity_zeros = node.assigned_machines() - ctx.entity_ones;
    const Alternative best = FoldBest(alts, ctx, order, dominated);
    num += best.ones;
    den += best.zeros;
  }
  return Rational(num, den);
}

Rational UpperBound(const Instance& instance, const Assignment& assignment) {
  return UpperBound(Node(instance, assignment));
}

}  // namespace cellform

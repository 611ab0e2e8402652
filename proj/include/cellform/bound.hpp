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

#ifndef CELLFORM_BOUND_HPP_
#define CELLFORM_BOUND_HPP_

// Upper bound on the efficacy of any completion of a partial assignment.
//
// The bound relaxes the problem so that every unassigned entity is placed
// independently:
//   * an unassigned machine joins an open cell or a fresh one and takes every
//     one in its row over the unassigned parts, plus the ones and zeros of
//     the parts already in that cell;
//   * an unassigned part joins an open cell or stays out, and only the rows
//     of already assigned machines are counted.
// Each placement is summarized as an Alternative (ones, zeros added inside
// cells). For each entity the alternatives are reduced to one by pairwise
// comparison; when two alternatives cannot be ordered they are replaced by
// (max ones, min zeros), which is at least as good as either. The bound is
// (inside ones + sum of chosen ones) / (total ones + inside zeros + sum of
// chosen zeros).

#include <cstdint>
#include <span>
#include <vector>

#include "cellform/assignment.hpp"
#include "cellform/instance.hpp"
#include "cellform/node.hpp"
#include "cellform/rational.hpp"

namespace cellform {

struct Alternative {
  std::int64_t ones = 0;
  std::int64_t zeros = 0;

  friend bool operator==(const Alternative&, const Alternative&) = default;
};

// Everything the pairwise comparison needs about the node and the entity
// being placed. entity_ones/entity_zeros are the full row for a machine and
// the column restricted to assigned machines for a part.
struct ComparisonContext {
  std::int64_t total_ones = 0;
  std::int64_t total_zeros = 0;
  std::int64_t inside_ones = 0;
  std::int64_t inside_zeros = 0;
  std::int64_t excluded_ones = 0;
  std::int64_t excluded_zeros = 0;
  std::int64_t entity_ones = 0;
  std::int64_t entity_zeros = 0;

  // Numerator and denominator of the current efficacy; the denominator is
  // also the smallest denominator any completion can have.
  std::int64_t current_numerator() const { return inside_ones; }
  std::int64_t current_denominator() const { return total_ones + inside_zeros; }
  // Largest denominator the other entities can reach.
  std::int64_t max_denominator() const {
    return total_ones + total_zeros - excluded_zeros - entity_zeros;
  }
  // Largest numerator the other entities can reach.
  std::int64_t max_numerator() const { return total_ones - excluded_ones - entity_ones; }

  Rational lower_efficacy() const { return Rational(current_numerator(), current_denominator()); }
  Rational upper_efficacy() const { return Rational(max_numerator(), current_denominator()); }
};

enum class Preference : int {
  kIncomparable = -1,
  kEquivalent = 0,
  kFirst = 1,
  kSecond = 2,
};

// Machine and part indices are 0-based; cell labels are 1-based.

// One alternative per open cell (label order) followed by the fresh-cell
// alternative. Throws Error{kContractViolation} if the machine is assigned.
std::vector<Alternative> MachineAlternatives(const Node& node, int machine);
std::vector<Alternative> MachineAlternatives(const Instance& instance,
                                             const Assignment& assignment, int machine);

// One alternative per open cell (label order) followed by (0, 0) for leaving
// the part out. Throws Error{kContractViolation} if the part is assigned.
std::vector<Alternative> PartAlternatives(const Node& node, int part);
std::vector<Alternative> PartAlternatives(const Instance& instance,
                                          const Assignment& assignment, int part);

ComparisonContext MachineContext(const Node& node, int machine);
ComparisonContext PartContext(const Node& node, int part);

// Decides which of two alternatives leads to the higher relaxed efficacy.
// Operands are swapped internally when second.zeros < first.zeros, so the
// result always refers to the caller's order.
Preference CompareAlternatives(const Alternative& first, const Alternative& second,
                               const ComparisonContext& context);

// Drops strictly dominated alternatives, then folds the rest in order. On an
// incomparable pair the champion becomes their (max ones, min zeros) merge.
// `alternatives` must be non-empty.
Alternative BestAlternative(std::span<const Alternative> alternatives,
                            const ComparisonContext& context);

// Indices of alternatives not strictly dominated by another one, ascending.
std::vector<std::size_t> UndominatedIndices(std::span<const Alternative> alternatives);

Rational UpperBound(const Node& node);
Rational UpperBound(const Instance& instance, const Assignment& assignment);

}  // namespace cellform

#endif  // CELLFORM_BOUND_HPP_

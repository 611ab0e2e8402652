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

#ifndef CELLFORM_ORACLE_HPP_
#define CELLFORM_ORACLE_HPP_

// Exhaustive reference computations for small instances. Nothing here shares
// code with the branch and bound search.

#include <cstdint>
#include <optional>

#include "cellform/assignment.hpp"
#include "cellform/instance.hpp"
#include "cellform/rational.hpp"
#include "cellform/search.hpp"

namespace cellform {

inline constexpr int kOracleMaxMachines = 5;
inline constexpr int kOracleMaxParts = 8;
inline constexpr std::int64_t kRelaxedMaxCombinations = 1'000'000;
inline constexpr std::int64_t kCompletionMaxCombinations = 5'000'000;

bool OracleAccepts(const Instance& instance);

// Enumerates every machine partition (restricted growth strings) and every
// mapping of parts onto its cells, keeping feasible ones. Returns the exact
// optimum, the first maximizer in enumeration order, and proven_optimal.
// Throws Error{kSizeGuard} unless machines() <= 5 and parts() <= 8.
SolveResult BruteForceSolve(const Instance& instance);

// Exact optimum of the independent-placement relaxation at `assignment`:
// the maximum over the full product of per-entity alternative lists.
// Throws Error{kSizeGuard} if the product exceeds 10^6.
Rational BruteForceRelaxed(const Instance& instance, const Assignment& assignment);

// Best efficacy over all feasible completions of `assignment`, or nullopt if
// none exists. Unassigned entities may join any existing label or open new
// ones. Throws Error{kSizeGuard} if the enumeration would exceed 5*10^6
// leaves.
std::optional<Rational> BestCompletion(const Instance& instance, const Assignment& assignment);

// Reproducible random instance. The generator is SplitMix64 seeded with
// `seed`; entry (i, j) is drawn in row-major order and is 1 iff
// (next() >> 11) * 2^-53 < density. If the matrix has no ones it is redrawn
// from the continuing stream.
Instance RandomInstance(int machines, int parts, double density, std::uint64_t seed);

}  // namespace cellform

#endif  // CELLFORM_ORACLE_HPP_

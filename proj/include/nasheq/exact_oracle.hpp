// Copyright 2026 The nasheq Authors
//
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

#pragma once

#include <vector>

#include "nasheq/game_model.hpp"

namespace nasheq {

// Tolerances for the enumeration pipeline: nonnegativity / off-support slack
// checks, and the Gaussian-elimination pivot threshold below which an
// indifference system counts as singular.
inline constexpr double kSupportTol = 1e-9;
inline constexpr double kPivotTol = 1e-10;
inline constexpr int kDefaultMaxDim = 8;

struct SupportPair {
  std::vector<int> rows;  // strictly ascending
  std::vector<int> cols;  // strictly ascending
};

struct EquilibriumEntry {
  JointStrategy z;
  double u1;
  double u2;
  SupportPair support;
  double residual;  // fixed-point residual at z, for reporting
};

struct EquilibriumList {
  std::vector<EquilibriumEntry> entries;
  int degenerate_skips = 0;

  bool degenerate() const { return degenerate_skips > 0; }
};

// Exhaustive equal-size support enumeration. For each support pair the two
// indifference systems are solved by partial-pivot Gaussian elimination;
// candidates must pass nonnegativity and off-support optimality within
// kSupportTol. Supports whose system is singular with solutions
// (underdetermined) are skipped and counted in degenerate_skips; supports
// whose system has no solution are simply not equilibria. Entries are sorted
// lexicographically by support. Throws SizeError when either dimension
// exceeds max_dim.
EquilibriumList enumerate_equilibria(const BimatrixGame& game, int max_dim = kDefaultMaxDim);

// Game value by enumeration; asserts all enumerated equilibria agree on u1
// to 1e-9 and throws DegenerateGameError when enumeration finds nothing or
// the values disagree.
double zero_sum_value(const ZeroSumGame& game, int max_dim = kDefaultMaxDim);

// Worst deviation improvement for either player over a uniform simplex grid
// with grid_points per edge (vertices included). Dimensions capped at 4.
double grid_nash_check(const BimatrixGame& game, const JointStrategy& z, int grid_points);

}  // namespace nasheq

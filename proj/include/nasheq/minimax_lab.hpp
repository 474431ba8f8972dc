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

#include <functional>
#include <optional>
#include <vector>

#include "nasheq/equilibrium_solvers.hpp"
#include "nasheq/errors.hpp"
#include "nasheq/game_model.hpp"
#include "nasheq/vec.hpp"

namespace nasheq {

// Absolute tolerance for level comparisons in dual_witness.
inline constexpr double kWitnessTol = 1e-8;

// Default simplex subdivisions per edge for grid_from_bilinear.
inline constexpr int kDefaultGridPointsPerEdge = 20;

// A two-argument payoff sampled on finite strategy grids: values(i, j) is the
// max player's payoff at (x_nodes[i], y_nodes[j]). The module only ever
// reasons about the sampled points, never about the continuum between them.
class GridFunction {
 public:
  GridFunction(Matrix values, std::vector<Vec> x_nodes, std::vector<Vec> y_nodes);

  int rows() const { return values_.rows(); }
  int cols() const { return values_.cols(); }
  const Matrix& values() const { return values_; }
  const std::vector<Vec>& x_nodes() const { return x_nodes_; }
  const std::vector<Vec>& y_nodes() const { return y_nodes_; }

 private:
  Matrix values_;
  std::vector<Vec> x_nodes_;
  std::vector<Vec> y_nodes_;
};

// Grid whose nodes are the pure strategies of a payoff table.
GridFunction grid_from_matrix(const Matrix& values);

// Grid sampling p'Aq over uniform simplex grids, points_per_edge
// subdivisions per edge for each player.
GridFunction grid_from_bilinear(const Matrix& a, int points_per_edge = kDefaultGridPointsPerEdge);

// Grid tabulating an arbitrary function over caller-supplied nodes.
GridFunction grid_from_function(const std::function<double(const Vec&, const Vec&)>& f,
                                std::vector<Vec> x_nodes, std::vector<Vec> y_nodes);

struct WeakDuality {
  double maxmin;  // best row guarantee: max over rows of the row minimum
  double minmax;  // best column cap: min over columns of the column maximum
  double gap;     // minmax - maxmin, nonnegative on every finite grid
};

// Both one-sided optima of the grid and their gap. A zero gap is exactly a
// pure saddle cell; a positive gap bounds how far the grid is from one.
WeakDuality weak_duality_gap(const GridFunction& g);

// Certified duality gap of the bilinear game at the solver's final iterate.
// Throws NonConvergenceError when the solver stops above config.tol.
double minimax_gap_bilinear(const ZeroSumGame& game, const SolverConfig& config);

struct SaddlePoint {
  JointStrategy z;
  Certificate certificate;  // SaddleCheck at z
};

// Runs the zero-sum solver and re-certifies its point with check_saddle.
// Throws NonConvergenceError when the solver stops above config.tol.
SaddlePoint extract_saddle(const ZeroSumGame& game, const SolverConfig& config);

// Convex weights over the column nodes capping every row of the grid at a
// target level.
struct Witness {
  Vec beta;          // in Simplex(cols)
  double alpha;      // the level the witness was requested for
  double guarantee;  // max over rows of the beta-mixed row value
};

enum class WitnessOutcome { Found, Infeasible, Inconclusive };

struct DualWitnessResult {
  WitnessOutcome outcome = WitnessOutcome::Inconclusive;
  std::optional<Witness> witness;           // Found
  std::optional<int> violating_row;         // Infeasible: row minimum reaches alpha
  std::optional<double> value_lower_bound;  // Infeasible: row mix worth more than alpha
  std::optional<Certificate> certificate;   // gap certificate of the internal solve
};

// Searches for beta in Simplex(cols) with
// max_i sum_j beta_j values(i, j) <= alpha + tol.
//
// A row whose minimum already reaches alpha rules any witness out
// immediately. Otherwise the zero-sum game on the level-shifted grid is
// solved: its column strategy is the witness when its recomputed guarantee
// meets the level, and its row strategy certifies infeasibility when the
// value it secures exceeds the level. Both decisions are certified by direct
// recomputation on the original grid, so they stay sound even when the inner
// solve stops early; a solve that separates neither way is Inconclusive,
// never Infeasible.
DualWitnessResult dual_witness(const GridFunction& g, double alpha, double tol = kWitnessTol);

}  // namespace nasheq

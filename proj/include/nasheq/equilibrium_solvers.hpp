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

#include <optional>
#include <vector>

#include "nasheq/game_model.hpp"

namespace nasheq {

// Best-response comparisons treat scores within this margin of the maximum
// as tied.
inline constexpr double kFaceTol = 1e-10;

struct SolverConfig {
  SolutionMethod method = SolutionMethod::Extragradient;
  double step = 0.0;        // 0 picks 0.9 / frobenius_norm(A)
  double averaging = 0.5;   // Krasnoselskii-Mann weight, in (0, 1]
  long max_iters = 100000;
  double tol = 1e-6;
  bool record_trace = false;
  // Optional caller-provided starting point (projected onto the sets).
  // Defaults: set barycenters for the gap-driven zero-sum solvers, an
  // extreme point (first simplex vertex, box lower corner, first-axis ball
  // boundary point) for the fixed-point heuristic, so that convergence of
  // the heuristic is not an artifact of starting at a symmetric center.
  std::optional<JointStrategy> start;
};

struct TracePoint {
  long iteration;
  double residual;  // fixed-point residual at the iterate
  double gap;       // duality gap (zero-sum) or best deviation gain (bimatrix)
};

struct SolveResult {
  JointStrategy z;
  double u1;
  double u2;
  Certificate certificate;
  bool converged;
  std::optional<std::vector<TracePoint>> trace;
};

// One application of the projection fixed-point map
//   Phi(p, q) = (P(p + Aq; first), P(q + Bp; second)).
// Fixed points of Phi over the product set are exactly the equilibria.
JointStrategy phi_map(const BimatrixGame& game, const ProductSet& sets, const JointStrategy& z);

// || z - Phi(z) || over the concatenated strategy vector.
double nash_residual(const BimatrixGame& game, const ProductSet& sets, const JointStrategy& z);

// Duality gap of a feasible pair: best deviation value of the max player
// minus the best deviation value of the min player. Nonnegative, zero
// exactly at a saddle point, and an upper bound on |p'Aq - value|.
double duality_gap(const ZeroSumGame& game, const ProductSet& sets, const JointStrategy& z);

// Zero-sum solver terminating on duality_gap <= tol. Extragradient runs the
// projected half-step/full-step scheme on the skew operator (-Aq, A'p) with
// step 0.9 / ||A||_F by default; KrasnoselskiiMann averages z with Phi(z).
// Every iterate stays feasible. On max_iters the result carries the best
// iterate seen with converged == false.
SolveResult solve_zero_sum(const ZeroSumGame& game, const ProductSet& sets,
                           const SolverConfig& config);

// Fixed-point iteration z <- (1 - alpha) z + alpha Phi(z) on a general
// bimatrix game, terminating on nash_residual <= tol. FixedPoint forces
// alpha = 1. Purely heuristic: existence of a fixed point does not make the
// iteration convergent, and cycling ends in a NonConvergence result.
SolveResult solve_bimatrix_heuristic(const BimatrixGame& game, const ProductSet& sets,
                                     const SolverConfig& config);

enum class PlayerId { One, Two };

struct BestResponse {
  double value;
  std::vector<int> face;  // maximizing pure strategies, ascending
};

// Best pure-response value and argmax face against a fixed opponent mix.
// Requires the responding player's set to be a simplex.
BestResponse best_response(const BimatrixGame& game, const ProductSet& sets, PlayerId player,
                           const Vec& opponent);

}  // namespace nasheq

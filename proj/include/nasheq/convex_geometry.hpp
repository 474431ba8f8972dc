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

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "nasheq/vec.hpp"

namespace nasheq {

// Set-membership tolerance used wherever feasibility is asserted.
inline constexpr double kFeasibilityTol = 1e-12;

// Sampling fallback for the box variational check in high dimension.
inline constexpr int kBoxVertexDimLimit = 20;
inline constexpr int kBoxSampleCount = 1000;
inline constexpr std::uint64_t kBoxSampleSeed = 987654321u;

enum class SetKind { Simplex, Box, Ball };

// Closed convex set over which strategies live: the probability simplex
// {x >= 0, sum x = 1}, an axis-aligned box, or a Euclidean ball.
class ConvexSet {
 public:
  static ConvexSet simplex(int dim);
  static ConvexSet box(Vec lower, Vec upper);
  static ConvexSet ball(Vec center, double radius);

  SetKind kind() const;
  int dim() const;

  const Vec& lower() const;   // Box only
  const Vec& upper() const;   // Box only
  const Vec& center() const;  // Ball only
  double radius() const;      // Ball only

 private:
  struct SimplexData {
    int dim;
  };
  struct BoxData {
    Vec lower;
    Vec upper;
  };
  struct BallData {
    Vec center;
    double radius;
  };

  explicit ConvexSet(std::variant<SimplexData, BoxData, BallData> data);

  std::variant<SimplexData, BoxData, BallData> data_;
};

// Euclidean metric projection onto the set. Exact closed forms: the simplex
// uses the sort-and-threshold rule (descending stable sort, largest valid
// prefix), the box clamps componentwise, the ball rescales radially.
Vec project(const ConvexSet& set, const Vec& x);

double distance(const ConvexSet& set, const Vec& x);

bool contains(const ConvexSet& set, const Vec& x, double tol = kFeasibilityTol);

// Support function: max of <c, w> over w in the set. Closed form for all
// three kinds; this is also the exact best linear deviation value.
double support_value(const ConvexSet& set, const Vec& c);

// Uniform center of the set: simplex barycenter, box midpoint, ball center.
Vec barycenter(const ConvexSet& set);

// Tests whether w satisfies the variational characterization of the
// projection of x: w feasible and <x - w, omega - w> <= tol for every omega
// in a certifying finite set (simplex vertices; box corners for dim <= 20,
// otherwise kBoxSampleCount seeded feasible samples; the ball boundary point
// along x - w).
bool variational_check(const ConvexSet& set, const Vec& x, const Vec& w, double tol,
                       std::uint64_t sample_seed = kBoxSampleSeed);

// True iff v lies in the normal cone to the set at xbar, decided through the
// projection identity xbar == project(xbar + v). Throws FeasibilityError if
// xbar is not in the set.
bool normal_cone_check(const ConvexSet& set, const Vec& xbar, const Vec& v, double tol);

// First-order minimization test: -grad in the normal cone at xbar.
bool check_stationarity(const Vec& grad, const ConvexSet& set, const Vec& xbar, double tol);

// All points of the simplex in dimension dim whose coordinates are multiples
// of 1/points_per_edge, in deterministic lexicographic order. Includes every
// vertex.
std::vector<Vec> simplex_grid(int dim, int points_per_edge);

// Cartesian product of two strategy sets; projection factorizes exactly into
// the componentwise projections.
struct ProductSet {
  ConvexSet first;
  ConvexSet second;

  int dim() const { return first.dim() + second.dim(); }
};

std::pair<Vec, Vec> project(const ProductSet& sets, const Vec& x, const Vec& y);
Vec project(const ProductSet& sets, const Vec& xy);
bool contains(const ProductSet& sets, const Vec& x, const Vec& y, double tol = kFeasibilityTol);

}  // namespace nasheq

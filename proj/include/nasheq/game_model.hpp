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

#include <string>

#include "nasheq/convex_geometry.hpp"
#include "nasheq/vec.hpp"

namespace nasheq {

// Default acceptance tolerance for boolean certificates.
inline constexpr double kCheckTol = 1e-8;

// Two-player game in strategic form. Player one mixes over the m rows of A
// and receives u1(p, q) = p'Aq; player two mixes over the n columns and
// receives u2(p, q) = q'Bp with B of shape n x m.
class BimatrixGame {
 public:
  BimatrixGame(Matrix a, Matrix b);

  int rows() const { return a_.rows(); }
  int cols() const { return a_.cols(); }
  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }

 private:
  Matrix a_;
  Matrix b_;
};

// Zero-sum special case: only A is stored, player two's payoff is -u1.
class ZeroSumGame {
 public:
  explicit ZeroSumGame(Matrix a) : a_(std::move(a)) {}

  int rows() const { return a_.rows(); }
  int cols() const { return a_.cols(); }
  const Matrix& a() const { return a_; }

  // Entrywise-exact conversion: B = -A'.
  BimatrixGame to_bimatrix() const;

 private:
  Matrix a_;
};

struct JointStrategy {
  Vec p;
  Vec q;
};

bool feasible(const ProductSet& sets, const JointStrategy& z, double tol = kFeasibilityTol);

ProductSet simplex_domains(const BimatrixGame& game);
ProductSet simplex_domains(const ZeroSumGame& game);

enum class CertificateKind { NashResidual, DualityGap, SaddleCheck };

enum class SolutionMethod {
  Extragradient,
  KrasnoselskiiMann,
  FixedPoint,
  SupportEnumeration,
  Exhaustive,
};

std::string to_string(CertificateKind kind);
std::string to_string(SolutionMethod method);

// Numerical evidence attached to a solution: the residual or gap that was
// measured, the tolerance it was measured against, and how the point was
// produced. Accepted iff value <= tol.
struct Certificate {
  CertificateKind kind;
  double value;  // nonnegative
  double tol;
  long iterations;
  SolutionMethod method;

  bool accepted() const { return value <= tol; }
};

// p'Aq and q'Bp as row-major dot-product chains (deterministic accumulation).
double payoff_u1(const BimatrixGame& game, const JointStrategy& z);
double payoff_u2(const BimatrixGame& game, const JointStrategy& z);

struct CheckResult {
  bool accepted;
  double worst_violation;
};

// Equilibrium test by best deviation: the worst payoff improvement either
// player can realize by deviating inside their strategy set. For bilinear
// payoffs this is exact, via the support function of the set (pure
// strategies for simplex domains). The overloads without sets use simplex
// domains matching the game shape.
CheckResult check_nash(const BimatrixGame& game, const ProductSet& sets, const JointStrategy& z,
                       double tol = kCheckTol);
CheckResult check_nash(const BimatrixGame& game, const JointStrategy& z, double tol = kCheckTol);

// Saddle-point test for zero-sum payoffs: worst of the max-player and
// min-player deviation improvements at z.
CheckResult check_saddle(const ZeroSumGame& game, const ProductSet& sets, const JointStrategy& z,
                         double tol = kCheckTol);
CheckResult check_saddle(const ZeroSumGame& game, const JointStrategy& z, double tol = kCheckTol);

}  // namespace nasheq

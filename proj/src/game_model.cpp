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

#include "nasheq/game_model.hpp"

#include <algorithm>
#include <string>

namespace nasheq {
namespace {

// Strategy feasibility guard for check/evaluation entry points. Looser than
// kFeasibilityTol so hand-entered decimal strategies are not rejected.
constexpr double kInputFeasTol = 1e-9;

void require_shapes(const BimatrixGame& game, const JointStrategy& z) {
  if (z.p.dim() != game.rows() || z.q.dim() != game.cols()) {
    throw DimensionError("strategy dimensions do not match the game: expected " +
                         std::to_string(game.rows()) + "+" + std::to_string(game.cols()) +
                         ", got " + std::to_string(z.p.dim()) + "+" + std::to_string(z.q.dim()));
  }
}

void require_domains(const BimatrixGame& game, const ProductSet& sets) {
  if (sets.first.dim() != game.rows() || sets.second.dim() != game.cols()) {
    throw DimensionError("strategy sets do not match the game shape");
  }
}

}  // namespace

BimatrixGame::BimatrixGame(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_.rows() != a_.cols() || b_.cols() != a_.rows()) {
    throw DimensionError("B must have shape cols(A) x rows(A)");
  }
}

BimatrixGame ZeroSumGame::to_bimatrix() const {
  return BimatrixGame(a_, a_.transposed().negated());
}

bool feasible(const ProductSet& sets, const JointStrategy& z, double tol) {
  return contains(sets, z.p, z.q, tol);
}

ProductSet simplex_domains(const BimatrixGame& game) {
  return {ConvexSet::simplex(game.rows()), ConvexSet::simplex(game.cols())};
}

ProductSet simplex_domains(const ZeroSumGame& game) {
  return {ConvexSet::simplex(game.rows()), ConvexSet::simplex(game.cols())};
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::NashResidual:
      return "NashResidual";
    case CertificateKind::DualityGap:
      return "DualityGap";
    case CertificateKind::SaddleCheck:
      return "SaddleCheck";
  }
  return "Unknown";
}

std::string to_string(SolutionMethod method) {
  switch (method) {
    case SolutionMethod::Extragradient:
      return "Extragradient";
    case SolutionMethod::KrasnoselskiiMann:
      return "KrasnoselskiiMann";
    case SolutionMethod::FixedPoint:
      return "FixedPoint";
    case SolutionMethod::SupportEnumeration:
      return "SupportEnumeration";
    case SolutionMethod::Exhaustive:
      return "Exhaustive";
  }
  return "Unknown";
}

double payoff_u1(const BimatrixGame& game, const JointStrategy& z) {
  require_shapes(game, z);
  return dot(z.p, game.a().multiply(z.q));
}

double payoff_u2(const BimatrixGame& game, const JointStrategy& z) {
  require_shapes(game, z);
  return dot(z.q, game.b().multiply(z.p));
}

CheckResult check_nash(const BimatrixGame& game, const ProductSet& sets, const JointStrategy& z,
                       double tol) {
  require_shapes(game, z);
  require_domains(game, sets);
  if (!feasible(sets, z, kInputFeasTol)) {
    throw FeasibilityError("check_nash: strategy profile is not feasible");
  }
  const Vec aq = game.a().multiply(z.q);
  const Vec bp = game.b().multiply(z.p);
  const double gain_one = support_value(sets.first, aq) - dot(z.p, aq);
  const double gain_two = support_value(sets.second, bp) - dot(z.q, bp);
  const double worst = std::max({gain_one, gain_two, 0.0});
  return {worst <= tol, worst};
}

CheckResult check_nash(const BimatrixGame& game, const JointStrategy& z, double tol) {
  return check_nash(game, simplex_domains(game), z, tol);
}

CheckResult check_saddle(const ZeroSumGame& game, const ProductSet& sets, const JointStrategy& z,
                         double tol) {
  const BimatrixGame bimatrix = game.to_bimatrix();
  require_shapes(bimatrix, z);
  require_domains(bimatrix, sets);
  if (!feasible(sets, z, kInputFeasTol)) {
    throw FeasibilityError("check_saddle: strategy profile is not feasible");
  }
  const Vec aq = game.a().multiply(z.q);
  const Vec atp = game.a().multiply_transpose(z.p);
  const double value = dot(z.p, aq);
  const double gain_max_player = support_value(sets.first, aq) - value;
  // min over the second set of <atp, y> is -support_value at -atp.
  const double gain_min_player = value + support_value(sets.second, -1.0 * atp);
  const double worst = std::max({gain_max_player, gain_min_player, 0.0});
  return {worst <= tol, worst};
}

CheckResult check_saddle(const ZeroSumGame& game, const JointStrategy& z, double tol) {
  return check_saddle(game, simplex_domains(game), z, tol);
}

}  // namespace nasheq

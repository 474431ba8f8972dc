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

#include "nasheq/equilibrium_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace nasheq {
namespace {

constexpr double kInputFeasTol = 1e-9;

void validate_common(const SolverConfig& config) {
  if (config.max_iters < 1) throw ConfigError("max_iters must be positive");
  if (!(config.tol > 0.0)) throw ConfigError("tol must be positive");
  if (!(config.averaging > 0.0) || config.averaging > 1.0) {
    throw ConfigError("averaging weight must lie in (0, 1]");
  }
  if (config.step < 0.0 || !std::isfinite(config.step)) {
    throw ConfigError("step must be nonnegative and finite");
  }
}

Vec extreme_point(const ConvexSet& set) {
  switch (set.kind()) {
    case SetKind::Simplex:
      return Vec::unit(set.dim(), 0);
    case SetKind::Box:
      return set.lower();
    case SetKind::Ball: {
      Vec x = set.center();
      x[0] += set.radius();
      return x;
    }
  }
  throw DomainError("unsupported set kind");
}

enum class StartRule { Barycenter, ExtremePoint };

JointStrategy initial_point(const SolverConfig& config, const ProductSet& sets, StartRule rule) {
  if (config.start.has_value()) {
    const JointStrategy& z = *config.start;
    if (z.p.dim() != sets.first.dim() || z.q.dim() != sets.second.dim()) {
      throw DimensionError("starting point does not match the strategy sets");
    }
    return {project(sets.first, z.p), project(sets.second, z.q)};
  }
  if (rule == StartRule::Barycenter) return {barycenter(sets.first), barycenter(sets.second)};
  return {extreme_point(sets.first), extreme_point(sets.second)};
}

Vec mix(const Vec& x, const Vec& y, double weight) {
  std::vector<double> out(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    out[static_cast<std::size_t>(i)] = (1.0 - weight) * x[i] + weight * y[i];
  }
  return Vec(std::move(out));
}

}  // namespace

JointStrategy phi_map(const BimatrixGame& game, const ProductSet& sets, const JointStrategy& z) {
  if (z.p.dim() != game.rows() || z.q.dim() != game.cols()) {
    throw DimensionError("phi_map: strategy dimensions do not match the game");
  }
  if (sets.first.dim() != game.rows() || sets.second.dim() != game.cols()) {
    throw DimensionError("phi_map: strategy sets do not match the game");
  }
  const Vec aq = game.a().multiply(z.q);
  const Vec bp = game.b().multiply(z.p);
  return {project(sets.first, z.p + aq), project(sets.second, z.q + bp)};
}

double nash_residual(const BimatrixGame& game, const ProductSet& sets, const JointStrategy& z) {
  if (!feasible(sets, z, kInputFeasTol)) {
    throw FeasibilityError("nash_residual: strategy profile is not feasible");
  }
  const JointStrategy phi = phi_map(game, sets, z);
  return norm(concat(z.p - phi.p, z.q - phi.q));
}

double duality_gap(const ZeroSumGame& game, const ProductSet& sets, const JointStrategy& z) {
  if (z.p.dim() != game.rows() || z.q.dim() != game.cols() ||
      sets.first.dim() != game.rows() || sets.second.dim() != game.cols()) {
    throw DimensionError("duality_gap: dimensions do not match the game");
  }
  const Vec aq = game.a().multiply(z.q);
  const Vec atp = game.a().multiply_transpose(z.p);
  const double best_max = support_value(sets.first, aq);
  const double best_min = -support_value(sets.second, -1.0 * atp);
  return std::max(0.0, best_max - best_min);
}

SolveResult solve_zero_sum(const ZeroSumGame& game, const ProductSet& sets,
                           const SolverConfig& config) {
  validate_common(config);
  if (config.method != SolutionMethod::Extragradient &&
      config.method != SolutionMethod::KrasnoselskiiMann) {
    throw ConfigError("solve_zero_sum supports Extragradient and KrasnoselskiiMann");
  }
  const Matrix& a = game.a();
  if (sets.first.dim() != a.rows() || sets.second.dim() != a.cols()) {
    throw DimensionError("strategy sets do not match the payoff matrix");
  }
  const BimatrixGame bimatrix = game.to_bimatrix();

  // ||A||_F bounds the spectral norm, so step * ||A||_F < 1 keeps the
  // extragradient contraction condition step * ||A||_2 < 1.
  const double lipschitz = a.frobenius_norm();
  double step = config.step;
  if (config.method == SolutionMethod::Extragradient) {
    if (step == 0.0) {
      step = lipschitz > 0.0 ? 0.9 / lipschitz : 1.0;
    } else if (step * lipschitz >= 1.0) {
      throw ConfigError("step times the operator norm bound must stay below 1");
    }
  }

  JointStrategy z = initial_point(config, sets, StartRule::Barycenter);
  std::vector<TracePoint> trace;
  JointStrategy best = z;
  double best_gap = std::numeric_limits<double>::infinity();
  long iter = 0;
  bool converged = false;

  for (;; ++iter) {
    const double gap = duality_gap(game, sets, z);
    if (config.record_trace) trace.push_back({iter, nash_residual(bimatrix, sets, z), gap});
    if (gap < best_gap) {
      best_gap = gap;
      best = z;
    }
    if (gap <= config.tol) {
      converged = true;
      break;
    }
    if (iter >= config.max_iters) break;

    if (config.method == SolutionMethod::Extragradient) {
      const Vec aq = a.multiply(z.q);
      const Vec atp = a.multiply_transpose(z.p);
      const JointStrategy half{project(sets.first, z.p + step * aq),
                               project(sets.second, z.q - step * atp)};
      const Vec aq_half = a.multiply(half.q);
      const Vec atp_half = a.multiply_transpose(half.p);
      z = {project(sets.first, z.p + step * aq_half),
           project(sets.second, z.q - step * atp_half)};
    } else {
      const JointStrategy phi = phi_map(bimatrix, sets, z);
      z = {mix(z.p, phi.p, config.averaging), mix(z.q, phi.q, config.averaging)};
    }
  }

  const JointStrategy& result_point = converged ? z : best;
  const double final_gap = duality_gap(game, sets, result_point);
  SolveResult out{result_point,
                  payoff_u1(bimatrix, result_point),
                  payoff_u2(bimatrix, result_point),
                  Certificate{CertificateKind::DualityGap, final_gap, config.tol,
                              converged ? iter : config.max_iters, config.method},
                  converged,
                  std::nullopt};
  if (config.record_trace) out.trace = std::move(trace);
  return out;
}

SolveResult solve_bimatrix_heuristic(const BimatrixGame& game, const ProductSet& sets,
                                     const SolverConfig& config) {
  validate_common(config);
  if (config.method != SolutionMethod::FixedPoint &&
      config.method != SolutionMethod::KrasnoselskiiMann) {
    throw ConfigError("solve_bimatrix_heuristic supports FixedPoint and KrasnoselskiiMann");
  }
  if (sets.first.dim() != game.rows() || sets.second.dim() != game.cols()) {
    throw DimensionError("strategy sets do not match the game shape");
  }
  const double alpha =
      config.method == SolutionMethod::FixedPoint ? 1.0 : config.averaging;

  JointStrategy z = initial_point(config, sets, StartRule::ExtremePoint);
  std::vector<TracePoint> trace;
  JointStrategy best = z;
  double best_residual = std::numeric_limits<double>::infinity();
  long iter = 0;
  bool converged = false;

  for (;; ++iter) {
    const JointStrategy phi = phi_map(game, sets, z);
    const double residual = norm(concat(z.p - phi.p, z.q - phi.q));
    if (config.record_trace) {
      trace.push_back({iter, residual, check_nash(game, sets, z, config.tol).worst_violation});
    }
    if (residual < best_residual) {
      best_residual = residual;
      best = z;
    }
    if (residual <= config.tol) {
      converged = true;
      break;
    }
    if (iter >= config.max_iters) break;
    z = {mix(z.p, phi.p, alpha), mix(z.q, phi.q, alpha)};
  }

  const JointStrategy& result_point = converged ? z : best;
  const double final_residual = nash_residual(game, sets, result_point);
  SolveResult out{result_point,
                  payoff_u1(game, result_point),
                  payoff_u2(game, result_point),
                  Certificate{CertificateKind::NashResidual, final_residual, config.tol,
                              converged ? iter : config.max_iters, config.method},
                  converged,
                  std::nullopt};
  if (config.record_trace) out.trace = std::move(trace);
  return out;
}

BestResponse best_response(const BimatrixGame& game, const ProductSet& sets, PlayerId player,
                           const Vec& opponent) {
  const ConvexSet& own_set = player == PlayerId::One ? sets.first : sets.second;
  const ConvexSet& other_set = player == PlayerId::One ? sets.second : sets.first;
  if (own_set.kind() != SetKind::Simplex) {
    throw DomainError("best_response requires a simplex strategy set");
  }
  if (!contains(other_set, opponent, kInputFeasTol)) {
    throw FeasibilityError("best_response: opponent strategy is not feasible");
  }
  const Vec scores = player == PlayerId::One ? game.a().multiply(opponent)
                                             : game.b().multiply(opponent);
  const double value = max_entry(scores);
  BestResponse out{value, {}};
  for (int i = 0; i < scores.dim(); ++i) {
    if (scores[i] >= value - kFaceTol) out.face.push_back(i);
  }
  return out;
}

}  // namespace nasheq

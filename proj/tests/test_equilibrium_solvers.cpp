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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "nasheq/equilibrium_solvers.hpp"
#include "nasheq/errors.hpp"
#include "nasheq/game_model.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using nasheq::BimatrixGame;
using nasheq::ConfigError;
using nasheq::DimensionError;
using nasheq::JointStrategy;
using nasheq::Matrix;
using nasheq::PlayerId;
using nasheq::ProductSet;
using nasheq::SolutionMethod;
using nasheq::SolveResult;
using nasheq::SolverConfig;
using nasheq::Vec;
using nasheq::ZeroSumGame;

namespace {

ZeroSumGame pennies() {
  return ZeroSumGame(Matrix::from_rows({{1.0, -1.0}, {-1.0, 1.0}}));
}

BimatrixGame research_game() {
  const Matrix payoff = Matrix::from_rows({{50.0, 100.0}, {-50.0, 0.0}});
  return BimatrixGame(payoff, payoff);
}

const JointStrategy kVertexPair{Vec{1.0, 0.0}, Vec{1.0, 0.0}};

}  // namespace

TEST_CASE("phi map projects the payoff-improving step") {
  const ZeroSumGame game = pennies();
  const BimatrixGame embedded = game.to_bimatrix();
  const ProductSet sets = simplex_domains(embedded);

  const JointStrategy moved = phi_map(embedded, sets, kVertexPair);
  CHECK(moved.p == Vec{1.0, 0.0});
  CHECK(moved.q == Vec{0.0, 1.0});
  CHECK(nash_residual(embedded, sets, kVertexPair) == std::sqrt(2.0));

  const JointStrategy center{Vec{0.5, 0.5}, Vec{0.5, 0.5}};
  const JointStrategy fixed = phi_map(embedded, sets, center);
  CHECK(fixed.p == center.p);
  CHECK(fixed.q == center.q);
  CHECK(nash_residual(embedded, sets, center) == 0.0);

  const BimatrixGame research = research_game();
  CHECK(nash_residual(research, simplex_domains(research), kVertexPair) == 0.0);

  CHECK_THROWS_AS(phi_map(embedded, sets, {Vec{1.0, 0.0, 0.0}, Vec{1.0, 0.0}}), DimensionError);
  CHECK_THROWS_AS(nash_residual(embedded, sets, {Vec{0.6, 0.6}, Vec{1.0, 0.0}}),
                  nasheq::FeasibilityError);
}

TEST_CASE("duality gap separates saddle points from deviating pairs") {
  const ZeroSumGame game = pennies();
  const ProductSet sets = simplex_domains(game);

  CHECK(duality_gap(game, sets, {Vec{0.5, 0.5}, Vec{0.5, 0.5}}) == 0.0);
  CHECK(duality_gap(game, sets, kVertexPair) == 2.0);

  const ZeroSumGame diag(Matrix::from_rows({{2.0, 0.0}, {0.0, 1.0}}));
  const ProductSet diag_sets = simplex_domains(diag);
  CHECK(duality_gap(diag, diag_sets, {Vec{0.5, 0.5}, Vec{0.5, 0.5}}) == 0.5);
}

TEST_CASE("extragradient finds the mixed saddle of the matching game") {
  const ZeroSumGame game = pennies();
  const ProductSet sets = simplex_domains(game);

  SolverConfig config;
  config.start = kVertexPair;
  const SolveResult result = solve_zero_sum(game, sets, config);

  CHECK(result.converged);
  CHECK(result.certificate.accepted());
  CHECK(result.certificate.kind == nasheq::CertificateKind::DualityGap);
  CHECK(result.certificate.method == SolutionMethod::Extragradient);
  CHECK(result.certificate.value == duality_gap(game, sets, result.z));
  CHECK(result.certificate.iterations > 0);
  CHECK(result.certificate.iterations <= 1000);

  CHECK(std::abs(result.z.p[0] - 0.5) <= 1e-4);
  CHECK(std::abs(result.z.q[0] - 0.5) <= 1e-4);
  CHECK(std::abs(result.u1) <= 1e-6);
  CHECK(std::abs(result.u1 + result.u2) <= 1e-12);
  CHECK(feasible(sets, result.z));
}

TEST_CASE("extragradient recovers an asymmetric mixed equilibrium") {
  const ZeroSumGame diag(Matrix::from_rows({{2.0, 0.0}, {0.0, 1.0}}));
  const ProductSet sets = simplex_domains(diag);

  const SolveResult result = solve_zero_sum(diag, sets, SolverConfig{});
  CHECK(result.converged);
  CHECK(std::abs(result.u1 - 2.0 / 3.0) <= 1e-6);
  CHECK(std::abs(result.z.p[0] - 1.0 / 3.0) <= 1e-4);
  CHECK(std::abs(result.z.q[0] - 1.0 / 3.0) <= 1e-4);
}

TEST_CASE("solvers stop immediately when the start already certifies") {
  const ZeroSumGame game = pennies();
  const ProductSet sets = simplex_domains(game);

  // The default start is the barycenter pair, which is the saddle here.
  const SolveResult eg = solve_zero_sum(game, sets, SolverConfig{});
  CHECK(eg.converged);
  CHECK(eg.certificate.iterations == 0);
  CHECK(eg.certificate.value == 0.0);

  SolverConfig km;
  km.method = SolutionMethod::KrasnoselskiiMann;
  const SolveResult averaged = solve_zero_sum(game, sets, km);
  CHECK(averaged.converged);
  CHECK(averaged.certificate.iterations == 0);

  const ZeroSumGame trivial(Matrix::from_rows({{7.0}}));
  const SolveResult scalar = solve_zero_sum(trivial, simplex_domains(trivial), SolverConfig{});
  CHECK(scalar.converged);
  CHECK(scalar.u1 == 7.0);
}

TEST_CASE("averaged iteration reports honest certificates even off a saddle") {
  // Phi is not nonexpansive for this payoff scale, so averaging may orbit
  // instead of settling; whatever comes back must still be feasible and
  // carry the gap measured at the reported point.
  const ZeroSumGame game = pennies();
  const ProductSet sets = simplex_domains(game);

  SolverConfig config;
  config.method = SolutionMethod::KrasnoselskiiMann;
  config.start = kVertexPair;
  config.max_iters = 300;
  const SolveResult result = solve_zero_sum(game, sets, config);

  CHECK(feasible(sets, result.z));
  CHECK(result.certificate.value == duality_gap(game, sets, result.z));
  CHECK(result.converged == (result.certificate.value <= config.tol));
  if (!result.converged) CHECK(result.certificate.iterations == config.max_iters);
}

TEST_CASE("pure fixed-point iteration cycles on the matching game") {
  const BimatrixGame embedded = pennies().to_bimatrix();
  const ProductSet sets = simplex_domains(embedded);

  SolverConfig config;
  config.method = SolutionMethod::FixedPoint;
  config.max_iters = 100;
  const SolveResult result = solve_bimatrix_heuristic(embedded, sets, config);

  // The orbit from the vertex pair is a four-cycle at constant residual.
  CHECK_FALSE(result.converged);
  CHECK(result.certificate.value == std::sqrt(2.0));
  CHECK(result.certificate.iterations == 100);
  CHECK(result.certificate.kind == nasheq::CertificateKind::NashResidual);
  CHECK(result.certificate.method == SolutionMethod::FixedPoint);
  CHECK(feasible(sets, result.z));
}

TEST_CASE("averaged heuristic settles on the dominant-strategy equilibrium") {
  const BimatrixGame research = research_game();
  const ProductSet sets = simplex_domains(research);

  // The default extreme-point start is already the fixed point here.
  SolverConfig from_vertex;
  from_vertex.method = SolutionMethod::KrasnoselskiiMann;
  const SolveResult at_start = solve_bimatrix_heuristic(research, sets, from_vertex);
  CHECK(at_start.converged);
  CHECK(at_start.certificate.iterations == 0);
  CHECK(at_start.certificate.value == 0.0);

  SolverConfig from_center = from_vertex;
  from_center.start = JointStrategy{Vec{0.5, 0.5}, Vec{0.5, 0.5}};
  const SolveResult pulled = solve_bimatrix_heuristic(research, sets, from_center);
  CHECK(pulled.converged);
  CHECK(pulled.certificate.iterations > 0);
  CHECK(pulled.certificate.iterations <= 100);
  CHECK(std::abs(pulled.z.p[0] - 1.0) <= 1e-5);
  CHECK(std::abs(pulled.z.q[0] - 1.0) <= 1e-5);
  // Payoff entries reach 100, so a residual of 1e-6 leaves deviation gains
  // of order 1e-4.
  CHECK(std::abs(pulled.u1 - 50.0) <= 1e-3);
  CHECK(check_nash(research, sets, pulled.z, 1e-3).accepted);
}

TEST_CASE("traces record the residual and gap of every iterate") {
  const ZeroSumGame game = pennies();
  const ProductSet sets = simplex_domains(game);

  SolverConfig config;
  config.start = kVertexPair;
  config.record_trace = true;
  const SolveResult result = solve_zero_sum(game, sets, config);

  REQUIRE(result.trace.has_value());
  REQUIRE(!result.trace->empty());
  CHECK(result.trace->front().iteration == 0);
  CHECK(result.trace->size() == static_cast<std::size_t>(result.certificate.iterations) + 1);
  for (std::size_t i = 1; i < result.trace->size(); ++i) {
    CHECK((*result.trace)[i].iteration == (*result.trace)[i - 1].iteration + 1);
  }
  CHECK(result.trace->back().gap <= config.tol);

  SolverConfig quiet;
  quiet.start = kVertexPair;
  CHECK_FALSE(solve_zero_sum(game, sets, quiet).trace.has_value());
}

TEST_CASE("solver configuration is validated up front") {
  const ZeroSumGame game = pennies();
  const ProductSet sets = simplex_domains(game);

  SolverConfig config;
  config.step = 0.5;  // ||A||_F = 2, so the contraction bound is crossed.
  CHECK_THROWS_AS(solve_zero_sum(game, sets, config), ConfigError);
  config.step = 0.49;
  CHECK_NOTHROW(solve_zero_sum(game, sets, config));
  config.step = -0.1;
  CHECK_THROWS_AS(solve_zero_sum(game, sets, config), ConfigError);

  SolverConfig bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(solve_zero_sum(game, sets, bad), ConfigError);
  bad = SolverConfig{};
  bad.max_iters = 0;
  CHECK_THROWS_AS(solve_zero_sum(game, sets, bad), ConfigError);
  bad = SolverConfig{};
  bad.averaging = 0.0;
  CHECK_THROWS_AS(solve_zero_sum(game, sets, bad), ConfigError);
  bad.averaging = 1.25;
  CHECK_THROWS_AS(solve_zero_sum(game, sets, bad), ConfigError);

  SolverConfig wrong_method;
  wrong_method.method = SolutionMethod::FixedPoint;
  CHECK_THROWS_AS(solve_zero_sum(game, sets, wrong_method), ConfigError);
  wrong_method.method = SolutionMethod::Extragradient;
  CHECK_THROWS_AS(solve_bimatrix_heuristic(game.to_bimatrix(), sets, wrong_method), ConfigError);

  SolverConfig bad_start;
  bad_start.start = JointStrategy{Vec{1.0, 0.0, 0.0}, Vec{1.0, 0.0}};
  CHECK_THROWS_AS(solve_zero_sum(game, sets, bad_start), DimensionError);

  // Off-domain starts are projected, not rejected.
  SolverConfig outside;
  outside.start = JointStrategy{Vec{2.0, 0.0}, Vec{0.0, 2.0}};
  CHECK(solve_zero_sum(game, sets, outside).converged);
}

TEST_CASE("best responses maximize over pure strategies") {
  const ZeroSumGame game = pennies();
  const BimatrixGame embedded = game.to_bimatrix();
  const ProductSet sets = simplex_domains(embedded);

  const nasheq::BestResponse indifferent =
      best_response(embedded, sets, PlayerId::One, Vec{0.5, 0.5});
  CHECK(indifferent.value == 0.0);
  CHECK(indifferent.face == std::vector<int>{0, 1});

  const nasheq::BestResponse matching = best_response(embedded, sets, PlayerId::One, Vec{1.0, 0.0});
  CHECK(matching.value == 1.0);
  CHECK(matching.face == std::vector<int>{0});

  const nasheq::BestResponse evading = best_response(embedded, sets, PlayerId::Two, Vec{1.0, 0.0});
  CHECK(evading.value == 1.0);
  CHECK(evading.face == std::vector<int>{1});

  CHECK_THROWS_AS(best_response(embedded, sets, PlayerId::One, Vec{0.6, 0.6}),
                  nasheq::FeasibilityError);

  const ProductSet boxed{nasheq::ConvexSet::box(Vec{0.0, 0.0}, Vec{1.0, 1.0}),
                         nasheq::ConvexSet::simplex(2)};
  CHECK_THROWS_AS(best_response(embedded, boxed, PlayerId::One, Vec{1.0, 0.0}),
                  nasheq::DomainError);
}

TEST_CASE("best-response values are convex and bound every mixed payoff") {
  std::mt19937_64 rng(313u);
  std::uniform_real_distribution<double> weight(0.0, 1.0);

  for (int t = 0; t < 100; ++t) {
    const int m = 2 + t % 3;
    const int n = 2 + (t / 3) % 3;
    const oracle::Dmat a = oracle::random_matrix(rng, m, n);
    const oracle::Dmat b = oracle::random_matrix(rng, n, m);
    const BimatrixGame game(testutil::to_matrix(a), testutil::to_matrix(b));
    const ProductSet sets = simplex_domains(game);

    const oracle::Dvec q1 = oracle::random_simplex_point(rng, n);
    const oracle::Dvec q2 = oracle::random_simplex_point(rng, n);
    const double alpha = weight(rng);
    oracle::Dvec blend(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      blend[static_cast<std::size_t>(j)] = alpha * q1[static_cast<std::size_t>(j)] +
                                           (1.0 - alpha) * q2[static_cast<std::size_t>(j)];
    }

    const double v1 = best_response(game, sets, PlayerId::One, testutil::to_vec(q1)).value;
    const double v2 = best_response(game, sets, PlayerId::One, testutil::to_vec(q2)).value;
    const double vb = best_response(game, sets, PlayerId::One, testutil::to_vec(blend)).value;
    CHECK(vb <= alpha * v1 + (1.0 - alpha) * v2 + 1e-12);

    // Exhaustive pure maximum is the same number.
    double exhaustive = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      oracle::Dvec pure(static_cast<std::size_t>(m), 0.0);
      pure[static_cast<std::size_t>(i)] = 1.0;
      exhaustive = std::max(exhaustive, oracle::bilinear(a, pure, q1));
    }
    CHECK(std::abs(v1 - exhaustive) <= 1e-12);

    // And it dominates the payoff of any mixed reply.
    const oracle::Dvec p = oracle::random_simplex_point(rng, m);
    CHECK(oracle::bilinear(a, p, q1) <= v1 + 1e-12);

    // Deviation gains reported by the Nash check decompose through the
    // best-response values.
    const JointStrategy z{testutil::to_vec(p), testutil::to_vec(q1)};
    const double gain_one = v1 - payoff_u1(game, z);
    const double gain_two =
        best_response(game, sets, PlayerId::Two, z.p).value - payoff_u2(game, z);
    const double expected = std::max({gain_one, gain_two, 0.0});
    CHECK(std::abs(check_nash(game, sets, z).worst_violation - expected) <= 1e-12);
  }
}

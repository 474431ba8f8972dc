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

#include "nasheq/minimax_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace nasheq {
namespace {

std::vector<Vec> unit_nodes(int dim) {
  std::vector<Vec> nodes;
  nodes.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) nodes.push_back(Vec::unit(dim, i));
  return nodes;
}

}  // namespace

GridFunction::GridFunction(Matrix values, std::vector<Vec> x_nodes, std::vector<Vec> y_nodes)
    : values_(std::move(values)), x_nodes_(std::move(x_nodes)), y_nodes_(std::move(y_nodes)) {
  if (static_cast<int>(x_nodes_.size()) != values_.rows()) {
    throw GridError("grid has " + std::to_string(x_nodes_.size()) + " x nodes for " +
                    std::to_string(values_.rows()) + " value rows");
  }
  if (static_cast<int>(y_nodes_.size()) != values_.cols()) {
    throw GridError("grid has " + std::to_string(y_nodes_.size()) + " y nodes for " +
                    std::to_string(values_.cols()) + " value columns");
  }
  for (const Vec& x : x_nodes_) {
    if (x.dim() != x_nodes_.front().dim()) throw GridError("x nodes must share one dimension");
  }
  for (const Vec& y : y_nodes_) {
    if (y.dim() != y_nodes_.front().dim()) throw GridError("y nodes must share one dimension");
  }
}

GridFunction grid_from_matrix(const Matrix& values) {
  return GridFunction(values, unit_nodes(values.rows()), unit_nodes(values.cols()));
}

GridFunction grid_from_bilinear(const Matrix& a, int points_per_edge) {
  if (points_per_edge < 1) throw GridError("points_per_edge must be positive");
  std::vector<Vec> x_nodes = simplex_grid(a.rows(), points_per_edge);
  std::vector<Vec> y_nodes = simplex_grid(a.cols(), points_per_edge);
  Matrix values(static_cast<int>(x_nodes.size()), static_cast<int>(y_nodes.size()));
  for (std::size_t j = 0; j < y_nodes.size(); ++j) {
    const Vec ay = a.multiply(y_nodes[j]);
    for (std::size_t i = 0; i < x_nodes.size(); ++i) {
      values(static_cast<int>(i), static_cast<int>(j)) = dot(x_nodes[i], ay);
    }
  }
  return GridFunction(std::move(values), std::move(x_nodes), std::move(y_nodes));
}

GridFunction grid_from_function(const std::function<double(const Vec&, const Vec&)>& f,
                                std::vector<Vec> x_nodes, std::vector<Vec> y_nodes) {
  if (x_nodes.empty() || y_nodes.empty()) {
    throw GridError("grid needs at least one node for each player");
  }
  std::vector<double> data;
  data.reserve(x_nodes.size() * y_nodes.size());
  for (const Vec& x : x_nodes) {
    for (const Vec& y : y_nodes) data.push_back(f(x, y));
  }
  // Constructing through Matrix(rows, cols, data) checks the sampled values
  // for finiteness. Built before the GridFunction call: its by-value
  // parameters would otherwise move the node vectors out from under the
  // size() reads, in whichever order the compiler picks.
  Matrix values(static_cast<int>(x_nodes.size()), static_cast<int>(y_nodes.size()),
                std::move(data));
  return GridFunction(std::move(values), std::move(x_nodes), std::move(y_nodes));
}

WeakDuality weak_duality_gap(const GridFunction& g) {
  const Matrix& v = g.values();
  double maxmin = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < v.rows(); ++i) {
    double row_min = v(i, 0);
    for (int j = 1; j < v.cols(); ++j) row_min = std::min(row_min, v(i, j));
    maxmin = std::max(maxmin, row_min);
  }
  double minmax = std::numeric_limits<double>::infinity();
  for (int j = 0; j < v.cols(); ++j) {
    double col_max = v(0, j);
    for (int i = 1; i < v.rows(); ++i) col_max = std::max(col_max, v(i, j));
    minmax = std::min(minmax, col_max);
  }
  const double gap = minmax - maxmin;
  if (gap < -1e-12) throw Error("weak duality violated on a finite grid");
  return {maxmin, minmax, gap};
}

double minimax_gap_bilinear(const ZeroSumGame& game, const SolverConfig& config) {
  const SolveResult result = solve_zero_sum(game, simplex_domains(game), config);
  if (!result.converged) {
    throw NonConvergenceError("duality gap did not reach tolerance", result.certificate.value,
                              result.certificate.iterations);
  }
  return result.certificate.value;
}

SaddlePoint extract_saddle(const ZeroSumGame& game, const SolverConfig& config) {
  const SolveResult result = solve_zero_sum(game, simplex_domains(game), config);
  if (!result.converged) {
    throw NonConvergenceError("duality gap did not reach tolerance", result.certificate.value,
                              result.certificate.iterations);
  }
  const CheckResult saddle = check_saddle(game, result.z, config.tol);
  return SaddlePoint{result.z,
                     Certificate{CertificateKind::SaddleCheck, saddle.worst_violation, config.tol,
                                 result.certificate.iterations, result.certificate.method}};
}

DualWitnessResult dual_witness(const GridFunction& g, double alpha, double tol) {
  if (!(tol > 0.0)) throw ConfigError("dual_witness tolerance must be positive");
  if (!std::isfinite(alpha)) throw DomainError("dual_witness level must be finite");
  const Matrix& v = g.values();

  DualWitnessResult out;
  for (int i = 0; i < v.rows(); ++i) {
    double row_min = v(i, 0);
    for (int j = 1; j < v.cols(); ++j) row_min = std::min(row_min, v(i, j));
    if (row_min >= alpha) {
      out.outcome = WitnessOutcome::Infeasible;
      out.violating_row = i;
      return out;
    }
  }

  // A column mix capping every row of the grid at alpha is exactly a
  // strategy certifying value <= 0 in the game on the level-shifted values.
  Matrix shifted(v.rows(), v.cols());
  for (int i = 0; i < v.rows(); ++i) {
    for (int j = 0; j < v.cols(); ++j) shifted(i, j) = v(i, j) - alpha;
  }
  const ZeroSumGame game(std::move(shifted));

  SolverConfig config;
  config.method = SolutionMethod::Extragradient;
  config.tol = tol * 0.1;
  config.max_iters = 1000000;
  const SolveResult result = solve_zero_sum(game, simplex_domains(game), config);
  out.certificate = result.certificate;

  const double guarantee = max_entry(v.multiply(result.z.q));
  if (guarantee <= alpha + tol) {
    out.outcome = WitnessOutcome::Found;
    out.witness = Witness{result.z.q, alpha, guarantee};
    return out;
  }

  const double secured = min_entry(v.multiply_transpose(result.z.p));
  if (secured > alpha + tol) {
    out.outcome = WitnessOutcome::Infeasible;
    out.value_lower_bound = secured;
    return out;
  }

  out.outcome = WitnessOutcome::Inconclusive;
  return out;
}

}  // namespace nasheq

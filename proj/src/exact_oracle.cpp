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

#include "nasheq/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "nasheq/equilibrium_solvers.hpp"

namespace nasheq {
namespace {

enum class LinStatus { Unique, Inconsistent, Underdetermined };

// Square-system Gaussian elimination with partial pivoting. A pivot below
// kPivotTol makes the column free; an all-zero eliminated row with a nonzero
// right-hand side marks the system inconsistent.
LinStatus solve_square_system(std::vector<std::vector<double>> a, std::vector<double> b,
                              std::vector<double>& x) {
  const int n = static_cast<int>(b.size());
  constexpr double kConsistencyTol = 1e-8;

  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int best_row = -1;
    double best_abs = kPivotTol;
    for (int r = rank; r < n; ++r) {
      const double v = std::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
      if (v > best_abs) {
        best_abs = v;
        best_row = r;
      }
    }
    if (best_row < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(best_row)]);
    std::swap(b[static_cast<std::size_t>(rank)], b[static_cast<std::size_t>(best_row)]);
    for (int r = rank + 1; r < n; ++r) {
      const double factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                            a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            factor * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
      }
      b[static_cast<std::size_t>(r)] -= factor * b[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }

  for (int r = rank; r < n; ++r) {
    if (std::abs(b[static_cast<std::size_t>(r)]) > kConsistencyTol) return LinStatus::Inconsistent;
  }
  if (rank < n) return LinStatus::Underdetermined;

  x.assign(static_cast<std::size_t>(n), 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double sum = b[static_cast<std::size_t>(r)];
    for (int c = r + 1; c < n; ++c) {
      sum -= a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
             x[static_cast<std::size_t>(c)];
    }
    x[static_cast<std::size_t>(r)] = sum / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
  }
  return LinStatus::Unique;
}

// All k-element index subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

// Solves the indifference system over `mix_support`: a mix x supported there
// that makes every pure strategy in `flat_support` score the common value v
// against `payoff` (rows indexed by flat_support, columns by mix_support).
// Unknowns are the k support weights plus v.
LinStatus indifference_mix(const Matrix& payoff, const std::vector<int>& flat_support,
                           const std::vector<int>& mix_support, std::vector<double>& weights,
                           double& value) {
  const int k = static_cast<int>(flat_support.size());
  std::vector<std::vector<double>> a(static_cast<std::size_t>(k + 1),
                                     std::vector<double>(static_cast<std::size_t>(k + 1), 0.0));
  std::vector<double> b(static_cast<std::size_t>(k + 1), 0.0);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          payoff(flat_support[static_cast<std::size_t>(r)],
                 mix_support[static_cast<std::size_t>(c)]);
    }
    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = -1.0;
  }
  for (int c = 0; c < k; ++c) a[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = 1.0;
  b[static_cast<std::size_t>(k)] = 1.0;

  std::vector<double> x;
  const LinStatus status = solve_square_system(std::move(a), std::move(b), x);
  if (status != LinStatus::Unique) return status;
  weights.assign(x.begin(), x.begin() + k);
  value = x[static_cast<std::size_t>(k)];
  return LinStatus::Unique;
}

// Expands support weights to a full mixed strategy; tiny negative weights
// (within kSupportTol) are clamped and the mix renormalized.
bool expand_mix(const std::vector<int>& support, const std::vector<double>& weights, int dim,
                std::vector<double>& full) {
  full.assign(static_cast<std::size_t>(dim), 0.0);
  bool clamped = false;
  for (std::size_t t = 0; t < support.size(); ++t) {
    const double w = weights[t];
    if (w < -kSupportTol) return false;
    if (w < 0.0) clamped = true;
    full[static_cast<std::size_t>(support[t])] = std::max(w, 0.0);
  }
  if (clamped) {
    double sum = 0.0;
    for (double v : full) sum += v;
    if (sum <= 0.0) return false;
    for (double& v : full) v /= sum;
  }
  return true;
}

bool off_support_ok(const Vec& scores, const std::vector<int>& support, double value) {
  std::size_t next = 0;
  for (int i = 0; i < scores.dim(); ++i) {
    if (next < support.size() && support[next] == i) {
      ++next;
      continue;
    }
    if (scores[i] > value + kSupportTol) return false;
  }
  return true;
}

}  // namespace

EquilibriumList enumerate_equilibria(const BimatrixGame& game, int max_dim) {
  if (max_dim < 1) throw SizeError("max_dim must be positive");
  const int m = game.rows();
  const int n = game.cols();
  if (m > max_dim || n > max_dim) {
    throw SizeError("game shape " + std::to_string(m) + "x" + std::to_string(n) +
                    " exceeds max_dim " + std::to_string(max_dim));
  }

  const ProductSet sets = simplex_domains(game);
  EquilibriumList out;

  for (int k = 1; k <= std::min(m, n); ++k) {
    for (const std::vector<int>& rows : index_subsets(m, k)) {
      for (const std::vector<int>& cols : index_subsets(n, k)) {
        // Column mix q makes the rows of the support indifferent at v1;
        // row mix p does the same for player two's pure strategies.
        std::vector<double> q_weights;
        double v1 = 0.0;
        const LinStatus q_status = indifference_mix(game.a(), rows, cols, q_weights, v1);
        if (q_status == LinStatus::Underdetermined) {
          ++out.degenerate_skips;
          continue;
        }
        if (q_status == LinStatus::Inconsistent) continue;

        std::vector<double> p_weights;
        double v2 = 0.0;
        const LinStatus p_status = indifference_mix(game.b(), cols, rows, p_weights, v2);
        if (p_status == LinStatus::Underdetermined) {
          ++out.degenerate_skips;
          continue;
        }
        if (p_status == LinStatus::Inconsistent) continue;

        std::vector<double> q_full;
        std::vector<double> p_full;
        if (!expand_mix(cols, q_weights, n, q_full)) continue;
        if (!expand_mix(rows, p_weights, m, p_full)) continue;

        const JointStrategy z{Vec(std::move(p_full)), Vec(std::move(q_full))};
        if (!off_support_ok(game.a().multiply(z.q), rows, v1)) continue;
        if (!off_support_ok(game.b().multiply(z.p), cols, v2)) continue;
        if (!check_nash(game, sets, z, kSupportTol).accepted) continue;

        const double u1 = payoff_u1(game, z);
        const double u2 = payoff_u2(game, z);
        const double residual = nash_residual(game, sets, z);
        out.entries.push_back({z, u1, u2, SupportPair{rows, cols}, residual});
      }
    }
  }

  std::sort(out.entries.begin(), out.entries.end(),
            [](const EquilibriumEntry& a, const EquilibriumEntry& b) {
              if (a.support.rows != b.support.rows) return a.support.rows < b.support.rows;
              return a.support.cols < b.support.cols;
            });
  return out;
}

double zero_sum_value(const ZeroSumGame& game, int max_dim) {
  const EquilibriumList found = enumerate_equilibria(game.to_bimatrix(), max_dim);
  if (found.entries.empty()) {
    throw DegenerateGameError("support enumeration found no equilibrium");
  }
  const double value = found.entries.front().u1;
  for (const EquilibriumEntry& entry : found.entries) {
    if (std::abs(entry.u1 - value) > 1e-9) {
      throw DegenerateGameError("enumerated equilibrium values disagree beyond 1e-9");
    }
  }
  return value;
}

double grid_nash_check(const BimatrixGame& game, const JointStrategy& z, int grid_points) {
  if (game.rows() > 4 || game.cols() > 4) {
    throw SizeError("grid_nash_check supports dimensions up to 4");
  }
  if (grid_points < 1) throw SizeError("grid_points must be positive");
  const ProductSet sets = simplex_domains(game);
  if (!feasible(sets, z, 1e-9)) {
    throw FeasibilityError("grid_nash_check: strategy profile is not feasible");
  }

  const Vec aq = game.a().multiply(z.q);
  const Vec bp = game.b().multiply(z.p);
  const double u1 = dot(z.p, aq);
  const double u2 = dot(z.q, bp);

  double worst = -std::numeric_limits<double>::infinity();
  for (const Vec& alt : simplex_grid(game.rows(), grid_points)) {
    worst = std::max(worst, dot(alt, aq) - u1);
  }
  for (const Vec& alt : simplex_grid(game.cols(), grid_points)) {
    worst = std::max(worst, dot(alt, bp) - u2);
  }
  return worst;
}

}  // namespace nasheq

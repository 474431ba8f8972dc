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

#include "nasheq/convex_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace nasheq {
namespace {

void require_dim(const ConvexSet& set, const Vec& x, const char* what) {
  if (set.dim() != x.dim()) {
    throw DimensionError(std::string(what) + ": set dimension " + std::to_string(set.dim()) +
                         " vs vector dimension " + std::to_string(x.dim()));
  }
}

// Sort-and-threshold simplex projection. The threshold tau is taken from the
// largest prefix k of the descending sort with u_k > (prefix_sum_k - 1) / k;
// ties are broken by original index via stable sort so the scan order is
// deterministic (the projected point itself does not depend on tie order).
Vec project_simplex(const Vec& x) {
  const int d = x.dim();
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&x](int i, int j) { return x[i] > x[j]; });

  double prefix = 0.0;
  double tau = 0.0;
  for (int r = 0; r < d; ++r) {
    const double u = x[order[static_cast<std::size_t>(r)]];
    prefix += u;
    const double candidate = (prefix - 1.0) / (r + 1);
    if (u - candidate > 0.0) tau = candidate;
  }

  std::vector<double> w(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] = std::max(x[i] - tau, 0.0);
  return Vec(std::move(w));
}

Vec project_box(const Vec& lower, const Vec& upper, const Vec& x) {
  std::vector<double> w(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    w[static_cast<std::size_t>(i)] = std::min(std::max(x[i], lower[i]), upper[i]);
  }
  return Vec(std::move(w));
}

Vec project_ball(const Vec& center, double radius, const Vec& x) {
  const Vec delta = x - center;
  const double dist = norm(delta);
  if (dist <= radius) return x;
  // Divide before scaling: for the unit ball the result is the correctly
  // rounded unit vector.
  std::vector<double> w(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    w[static_cast<std::size_t>(i)] = center[i] + (delta[i] / dist) * radius;
  }
  return Vec(std::move(w));
}

}  // namespace

ConvexSet::ConvexSet(std::variant<SimplexData, BoxData, BallData> data) : data_(std::move(data)) {}

ConvexSet ConvexSet::simplex(int dim) {
  if (dim < 1) throw DimensionError("simplex dimension must be positive");
  return ConvexSet(SimplexData{dim});
}

ConvexSet ConvexSet::box(Vec lower, Vec upper) {
  if (lower.dim() != upper.dim()) throw DimensionError("box bounds have different dimensions");
  for (int i = 0; i < lower.dim(); ++i) {
    if (lower[i] > upper[i]) throw DomainError("box lower bound exceeds upper bound");
  }
  return ConvexSet(BoxData{std::move(lower), std::move(upper)});
}

ConvexSet ConvexSet::ball(Vec center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("ball radius must be positive and finite");
  }
  return ConvexSet(BallData{std::move(center), radius});
}

SetKind ConvexSet::kind() const {
  if (std::holds_alternative<SimplexData>(data_)) return SetKind::Simplex;
  if (std::holds_alternative<BoxData>(data_)) return SetKind::Box;
  return SetKind::Ball;
}

int ConvexSet::dim() const {
  if (const auto* s = std::get_if<SimplexData>(&data_)) return s->dim;
  if (const auto* b = std::get_if<BoxData>(&data_)) return b->lower.dim();
  return std::get<BallData>(data_).center.dim();
}

const Vec& ConvexSet::lower() const { return std::get<BoxData>(data_).lower; }
const Vec& ConvexSet::upper() const { return std::get<BoxData>(data_).upper; }
const Vec& ConvexSet::center() const { return std::get<BallData>(data_).center; }
double ConvexSet::radius() const { return std::get<BallData>(data_).radius; }

Vec project(const ConvexSet& set, const Vec& x) {
  require_dim(set, x, "project");
  switch (set.kind()) {
    case SetKind::Simplex:
      return project_simplex(x);
    case SetKind::Box:
      return project_box(set.lower(), set.upper(), x);
    case SetKind::Ball:
      return project_ball(set.center(), set.radius(), x);
  }
  throw DomainError("unsupported set kind");
}

double distance(const ConvexSet& set, const Vec& x) { return norm(x - project(set, x)); }

bool contains(const ConvexSet& set, const Vec& x, double tol) {
  require_dim(set, x, "contains");
  switch (set.kind()) {
    case SetKind::Simplex: {
      double sum = 0.0;
      for (int i = 0; i < x.dim(); ++i) {
        if (x[i] < -tol) return false;
        sum += x[i];
      }
      return std::abs(sum - 1.0) <= tol;
    }
    case SetKind::Box: {
      for (int i = 0; i < x.dim(); ++i) {
        if (x[i] < set.lower()[i] - tol || x[i] > set.upper()[i] + tol) return false;
      }
      return true;
    }
    case SetKind::Ball:
      return norm(x - set.center()) <= set.radius() + tol;
  }
  throw DomainError("unsupported set kind");
}

double support_value(const ConvexSet& set, const Vec& c) {
  require_dim(set, c, "support_value");
  switch (set.kind()) {
    case SetKind::Simplex:
      return max_entry(c);
    case SetKind::Box: {
      double sum = 0.0;
      for (int i = 0; i < c.dim(); ++i) {
        sum += c[i] > 0.0 ? c[i] * set.upper()[i] : c[i] * set.lower()[i];
      }
      return sum;
    }
    case SetKind::Ball:
      return dot(c, set.center()) + set.radius() * norm(c);
  }
  throw DomainError("unsupported set kind");
}

Vec barycenter(const ConvexSet& set) {
  switch (set.kind()) {
    case SetKind::Simplex:
      return Vec::constant(set.dim(), 1.0 / set.dim());
    case SetKind::Box:
      return 0.5 * (set.lower() + set.upper());
    case SetKind::Ball:
      return set.center();
  }
  throw DomainError("unsupported set kind");
}

bool variational_check(const ConvexSet& set, const Vec& x, const Vec& w, double tol,
                       std::uint64_t sample_seed) {
  require_dim(set, x, "variational_check");
  require_dim(set, w, "variational_check");
  if (!contains(set, w, kFeasibilityTol)) return false;

  const Vec r = x - w;
  const auto violates = [&](const Vec& omega) { return dot(r, omega - w) > tol; };

  switch (set.kind()) {
    case SetKind::Simplex: {
      // A linear functional on the simplex peaks at a vertex, so the vertices
      // certify the inequality for every feasible omega.
      const double rw = dot(r, w);
      for (int i = 0; i < set.dim(); ++i) {
        if (r[i] - rw > tol) return false;
      }
      return true;
    }
    case SetKind::Box: {
      const int d = set.dim();
      if (d <= kBoxVertexDimLimit) {
        std::vector<double> corner(static_cast<std::size_t>(d));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
          for (int i = 0; i < d; ++i) {
            corner[static_cast<std::size_t>(i)] =
                (mask >> i) & 1 ? set.upper()[i] : set.lower()[i];
          }
          if (violates(Vec(corner))) return false;
        }
        return true;
      }
      std::mt19937_64 rng(sample_seed);
      std::vector<double> point(static_cast<std::size_t>(d));
      for (int s = 0; s < kBoxSampleCount; ++s) {
        for (int i = 0; i < d; ++i) {
          std::uniform_real_distribution<double> coord(set.lower()[i], set.upper()[i]);
          point[static_cast<std::size_t>(i)] = coord(rng);
        }
        if (violates(Vec(point))) return false;
      }
      return true;
    }
    case SetKind::Ball: {
      const double rn = norm(r);
      if (rn == 0.0) return true;
      // <r, omega - w> over the ball peaks at the boundary point along r.
      const Vec omega = set.center() + (set.radius() / rn) * r;
      return !violates(omega);
    }
  }
  throw DomainError("unsupported set kind");
}

bool normal_cone_check(const ConvexSet& set, const Vec& xbar, const Vec& v, double tol) {
  require_dim(set, xbar, "normal_cone_check");
  require_dim(set, v, "normal_cone_check");
  if (!contains(set, xbar, kFeasibilityTol)) {
    throw FeasibilityError("normal_cone_check: base point is not in the set");
  }
  return norm(xbar - project(set, xbar + v)) <= tol;
}

bool check_stationarity(const Vec& grad, const ConvexSet& set, const Vec& xbar, double tol) {
  return normal_cone_check(set, xbar, -1.0 * grad, tol);
}

namespace {

void fill_simplex_grid(int position, int remaining, int points_per_edge, std::vector<double>& cur,
                       std::vector<Vec>& out) {
  const int d = static_cast<int>(cur.size());
  if (position == d - 1) {
    cur[static_cast<std::size_t>(position)] =
        static_cast<double>(remaining) / points_per_edge;
    out.push_back(Vec(cur));
    return;
  }
  for (int units = 0; units <= remaining; ++units) {
    cur[static_cast<std::size_t>(position)] = static_cast<double>(units) / points_per_edge;
    fill_simplex_grid(position + 1, remaining - units, points_per_edge, cur, out);
  }
}

}  // namespace

std::vector<Vec> simplex_grid(int dim, int points_per_edge) {
  if (dim < 1) throw DimensionError("simplex dimension must be positive");
  if (points_per_edge < 1) throw SizeError("points_per_edge must be positive");
  std::vector<Vec> out;
  std::vector<double> cur(static_cast<std::size_t>(dim), 0.0);
  fill_simplex_grid(0, points_per_edge, points_per_edge, cur, out);
  return out;
}

std::pair<Vec, Vec> project(const ProductSet& sets, const Vec& x, const Vec& y) {
  return {project(sets.first, x), project(sets.second, y)};
}

Vec project(const ProductSet& sets, const Vec& xy) {
  if (xy.dim() != sets.dim()) {
    throw DimensionError("product projection: vector dimension does not match the product");
  }
  const auto [x, y] = split_at(xy, sets.first.dim());
  return concat(project(sets.first, x), project(sets.second, y));
}

bool contains(const ProductSet& sets, const Vec& x, const Vec& y, double tol) {
  return contains(sets.first, x, tol) && contains(sets.second, y, tol);
}

}  // namespace nasheq

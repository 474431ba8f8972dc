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

#include "nasheq/vec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nasheq {
namespace {

void require_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(std::string(what) + " entry is not finite");
  }
}

void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("vector dimensions differ: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

Vec::Vec(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("vector dimension must be positive");
  require_finite(entries_, "vector");
}

Vec::Vec(std::initializer_list<double> entries) : Vec(std::vector<double>(entries)) {}

Vec Vec::zeros(int dim) { return constant(dim, 0.0); }

Vec Vec::constant(int dim, double value) {
  if (dim < 1) throw DimensionError("vector dimension must be positive");
  return Vec(std::vector<double>(static_cast<std::size_t>(dim), value));
}

Vec Vec::unit(int dim, int index) {
  if (index < 0 || index >= dim) throw DimensionError("unit vector index out of range");
  std::vector<double> e(static_cast<std::size_t>(dim), 0.0);
  e[static_cast<std::size_t>(index)] = 1.0;
  return Vec(std::move(e));
}

Vec operator+(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  std::vector<double> out(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
  return Vec(std::move(out));
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  std::vector<double> out(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) out[static_cast<std::size_t>(i)] = a[i] - b[i];
  return Vec(std::move(out));
}

Vec operator*(double s, const Vec& a) {
  std::vector<double> out(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) out[static_cast<std::size_t>(i)] = s * a[i];
  return Vec(std::move(out));
}

double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double max_entry(const Vec& a) { return *std::max_element(a.begin(), a.end()); }

double min_entry(const Vec& a) { return *std::min_element(a.begin(), a.end()); }

Vec concat(const Vec& a, const Vec& b) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(a.dim() + b.dim()));
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Vec(std::move(out));
}

std::pair<Vec, Vec> split_at(const Vec& xy, int first_dim) {
  if (first_dim < 1 || first_dim >= xy.dim()) {
    throw DimensionError("split point must leave both parts nonempty");
  }
  std::vector<double> a(xy.begin(), xy.begin() + first_dim);
  std::vector<double> b(xy.begin() + first_dim, xy.end());
  return {Vec(std::move(a)), Vec(std::move(b))};
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows_ < 1 || cols_ < 1) throw DimensionError("matrix dimensions must be positive");
  data_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), 0.0);
}

Matrix::Matrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ < 1 || cols_ < 1) throw DimensionError("matrix dimensions must be positive");
  if (data_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
    throw DimensionError("matrix data size does not match rows * cols");
  }
  require_finite(data_, "matrix");
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  if (rows.size() == 0) throw DimensionError("matrix dimensions must be positive");
  const std::size_t cols = rows.begin()->size();
  std::vector<double> data;
  data.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionError("matrix rows have uneven lengths");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(data));
}

Vec Matrix::multiply(const Vec& x) const {
  if (x.dim() != cols_) {
    throw DimensionError("matrix-vector dimension mismatch: " + std::to_string(cols_) + " vs " +
                         std::to_string(x.dim()));
  }
  std::vector<double> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    double sum = 0.0;
    for (int j = 0; j < cols_; ++j) sum += (*this)(i, j) * x[j];
    out[static_cast<std::size_t>(i)] = sum;
  }
  return Vec(std::move(out));
}

Vec Matrix::multiply_transpose(const Vec& x) const {
  if (x.dim() != rows_) {
    throw DimensionError("matrix-vector dimension mismatch: " + std::to_string(rows_) + " vs " +
                         std::to_string(x.dim()));
  }
  std::vector<double> out(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) {
    double sum = 0.0;
    for (int i = 0; i < rows_; ++i) sum += (*this)(i, j) * x[i];
    out[static_cast<std::size_t>(j)] = sum;
  }
  return Vec(std::move(out));
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::negated() const {
  std::vector<double> data(data_.size());
  for (std::size_t k = 0; k < data_.size(); ++k) data[k] = -data_[k];
  return Matrix(rows_, cols_, std::move(data));
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

double Matrix::max_abs() const {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace nasheq

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

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "nasheq/errors.hpp"

namespace nasheq {

// Dense real vector with a fixed positive dimension. Construction rejects
// NaN and infinite entries.
class Vec {
 public:
  explicit Vec(std::vector<double> entries);
  Vec(std::initializer_list<double> entries);

  static Vec zeros(int dim);
  static Vec constant(int dim, double value);
  static Vec unit(int dim, int index);

  int dim() const { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const Vec& other) const = default;

 private:
  std::vector<double> entries_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double s, const Vec& a);

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
double max_entry(const Vec& a);
double min_entry(const Vec& a);

Vec concat(const Vec& a, const Vec& b);
std::pair<Vec, Vec> split_at(const Vec& xy, int first_dim);

// Dense row-major matrix; same finiteness rule as Vec. Products accumulate
// row by row, ascending column index, so results are bit-deterministic.
class Matrix {
 public:
  Matrix(int rows, int cols);  // zero filled
  Matrix(int rows, int cols, std::vector<double> data);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }

  Vec multiply(const Vec& x) const;            // A x
  Vec multiply_transpose(const Vec& x) const;  // A' x
  Matrix transposed() const;
  Matrix negated() const;

  double frobenius_norm() const;
  double max_abs() const;

  bool operator==(const Matrix& other) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

}  // namespace nasheq

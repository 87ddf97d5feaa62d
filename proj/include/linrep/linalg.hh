// linalg.hh
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
//
// Dense exact linear algebra: row/column vectors, matrices, and an
// incremental basis that answers span-membership and coordinate queries.
// Zero-dimensional objects are first class throughout; the 0x0 matrix and
// the empty vector are legal values with the obvious conventions.

#ifndef LINREP_LINALG_HH
#define LINREP_LINALG_HH

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linrep/rational.hh"

namespace linrep {

class RowVector {
 public:
  RowVector() = default;
  explicit RowVector(std::size_t dimension) : entries_(dimension) {}
  RowVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit RowVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  std::size_t dimension() const { return entries_.size(); }
  const Rational& at(std::size_t i) const { return entries_.at(i); }
  Rational& at(std::size_t i) { return entries_.at(i); }
  bool is_zero() const;

  friend bool operator==(const RowVector&, const RowVector&) = default;

 private:
  std::vector<Rational> entries_;
};

class ColVector {
 public:
  ColVector() = default;
  explicit ColVector(std::size_t dimension) : entries_(dimension) {}
  ColVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit ColVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  std::size_t dimension() const { return entries_.size(); }
  const Rational& at(std::size_t i) const { return entries_.at(i); }
  Rational& at(std::size_t i) { return entries_.at(i); }
  bool is_zero() const;

  friend bool operator==(const ColVector&, const ColVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Dense row-major matrix. Rows and columns may independently be zero.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_.at(r * cols_ + c);
  }
  Rational& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

  RowVector row(std::size_t r) const;
  ColVector col(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
RowVector operator*(const RowVector& v, const Matrix& m);
ColVector operator*(const Matrix& m, const ColVector& v);
RowVector operator-(const RowVector& v);

/// Inner product u.w; the empty product is 0.
Rational dot(const RowVector& u, const ColVector& w);

/// Exact inverse, or nullopt for a singular (or non-square) matrix.
std::optional<Matrix> invert(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const RowVector& v);
std::ostream& operator<<(std::ostream& os, const ColVector& v);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Result of Basis::try_insert. When the vector was dependent, `coordinates`
/// expresses it exactly over the basis vectors in insertion order.
struct InsertOutcome {
  bool independent = false;
  std::vector<Rational> coordinates;
};

/// Ordered list of linearly independent vectors of a common ambient
/// dimension. Insertion keeps the original vectors; membership and
/// coordinate queries run against a privately maintained echelon form, so a
/// query costs O(size x dimension) scalar operations. Coordinates are always
/// reported with respect to the vectors as inserted.
template <typename V>
class Basis {
 public:
  explicit Basis(std::size_t ambient_dimension) : ambient_(ambient_dimension) {}

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t size() const { return vectors_.size(); }
  const V& vector(std::size_t i) const { return vectors_.at(i); }
  const std::vector<V>& vectors() const { return vectors_; }

  /// Inserts v if it is independent of the current basis; otherwise reports
  /// its exact coordinates. Throws std::invalid_argument on a dimension
  /// mismatch.
  InsertOutcome try_insert(const V& v) {
    Reduction red = reduce(v);
    if (red.is_zero) {
      return InsertOutcome{false, combine(red.weights)};
    }
    std::size_t pivot = 0;
    while (red.remainder[pivot].is_zero()) ++pivot;
    const Rational lead = red.remainder[pivot];

    std::vector<Rational> of_original(vectors_.size() + 1);
    of_original.back() = Rational(1) / lead;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (red.weights[i].is_zero()) continue;
      const std::vector<Rational>& combo = rows_[i].of_original;
      for (std::size_t j = 0; j < combo.size(); ++j) {
        of_original[j] -= red.weights[i] * combo[j] / lead;
      }
    }
    for (Rational& e : red.remainder) e /= lead;

    vectors_.push_back(v);
    rows_.push_back(EchelonRow{std::move(red.remainder), pivot, std::move(of_original)});
    return InsertOutcome{true, {}};
  }

  /// Exact coordinates of v over the basis vectors, or nullopt when v is not
  /// in the span. For the empty basis the zero vector has the empty
  /// coordinate list.
  std::optional<std::vector<Rational>> coordinates(const V& v) const {
    Reduction red = reduce(v);
    if (!red.is_zero) return std::nullopt;
    return combine(red.weights);
  }

 private:
  struct EchelonRow {
    std::vector<Rational> entries;      // pivot entry normalised to 1
    std::size_t pivot;
    std::vector<Rational> of_original;  // entries as a combination of vectors_
  };
  struct Reduction {
    std::vector<Rational> remainder;
    std::vector<Rational> weights;  // over echelon rows
    bool is_zero = false;
  };

  Reduction reduce(const V& v) const {
    if (v.dimension() != ambient_) {
      throw std::invalid_argument("basis: dimension mismatch");
    }
    Reduction red;
    red.remainder.resize(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) red.remainder[j] = v.at(j);
    red.weights.assign(rows_.size(), Rational());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational factor = red.remainder[rows_[i].pivot];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (!rows_[i].entries[j].is_zero()) {
          red.remainder[j] -= factor * rows_[i].entries[j];
        }
      }
      red.weights[i] = factor;
    }
    red.is_zero = true;
    for (const Rational& e : red.remainder) {
      if (!e.is_zero()) {
        red.is_zero = false;
        break;
      }
    }
    return red;
  }

  std::vector<Rational> combine(const std::vector<Rational>& weights) const {
    std::vector<Rational> coords(vectors_.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i].is_zero()) continue;
      const std::vector<Rational>& combo = rows_[i].of_original;
      for (std::size_t j = 0; j < combo.size(); ++j) {
        coords[j] += weights[i] * combo[j];
      }
    }
    return coords;
  }

  std::size_t ambient_;
  std::vector<V> vectors_;
  std::vector<EchelonRow> rows_;
};

}  // namespace linrep

#endif  // LINREP_LINALG_HH

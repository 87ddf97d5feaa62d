// test_linalg.cc
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

#include <random>

#include "doctest.h"
#include "linrep/linalg.hh"

using namespace linrep;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = Rational(Integer(num(rng)), Integer(den(rng)));
  return m;
}

RowVector random_vector(std::mt19937& rng, std::size_t dim) {
  std::uniform_int_distribution<int> num(-3, 3);
  RowVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v.at(i) = num(rng);
  return v;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("identity is neutral") {
  std::mt19937 rng(3);
  const Matrix m = random_matrix(rng, 2, 2);
  CHECK(Matrix::identity(2) * m == m);
  CHECK(m * Matrix::identity(2) == m);
}

TEST_CASE("row vector times matrix") {
  // (1,0) applied to [[1,1],[0,0]] picks out the first row.
  const RowVector u{1, 0};
  const Matrix m{{1, 1}, {0, 0}};
  CHECK(u * m == RowVector{1, 1});
}

TEST_CASE("zero-dimensional conventions") {
  const Matrix empty;
  CHECK(empty.rows() == 0);
  CHECK(empty * empty == empty);
  CHECK(RowVector(0) * empty == RowVector(0));
  CHECK(empty * ColVector(0) == ColVector(0));
  CHECK(dot(RowVector(0), ColVector(0)) == Rational(0));
  CHECK(Matrix::identity(0) == empty);
}

TEST_CASE("shape mismatches are rejected") {
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(RowVector(3) * Matrix(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(2, 2) * ColVector(3), std::invalid_argument);
  CHECK_THROWS_AS(dot(RowVector(1), ColVector(2)), std::invalid_argument);
  CHECK_THROWS_AS(Matrix({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("matrix product is associative") {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = random_matrix(rng, 3, 2);
    const Matrix b = random_matrix(rng, 2, 4);
    const Matrix c = random_matrix(rng, 4, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("inverse") {
  const Matrix t{{1, 1}, {0, 1}};
  const auto inv = invert(t);
  REQUIRE(inv.has_value());
  CHECK(*inv * t == Matrix::identity(2));
  CHECK(t * *inv == Matrix::identity(2));

  CHECK(!invert(Matrix{{1, 2}, {2, 4}}).has_value());
  CHECK(!invert(Matrix(2, 3)).has_value());
  CHECK(invert(Matrix()).has_value());  // the 0x0 matrix is its own inverse

  std::mt19937 rng(9);
  int found = 0;
  for (int i = 0; i < 40; ++i) {
    const Matrix m = random_matrix(rng, 3, 3);
    const auto mi = invert(m);
    if (!mi) continue;
    ++found;
    CHECK(*mi * m == Matrix::identity(3));
  }
  CHECK(found > 0);
}

TEST_CASE("try_insert grows the basis exactly on independent vectors") {
  Basis<RowVector> basis(2);
  CHECK(basis.try_insert(RowVector{1, 0}).independent);
  CHECK(basis.size() == 1);

  const InsertOutcome dep = basis.try_insert(RowVector{2, 0});
  CHECK(!dep.independent);
  REQUIRE(dep.coordinates.size() == 1);
  CHECK(dep.coordinates[0] == Rational(2));
  CHECK(basis.size() == 1);

  CHECK(basis.try_insert(RowVector{1, 1}).independent);
  CHECK(basis.size() == 2);
}

TEST_CASE("coordinates") {
  Basis<RowVector> basis(2);
  basis.try_insert(RowVector{1, 0});
  basis.try_insert(RowVector{1, 1});

  const auto coords = basis.coordinates(RowVector{0, 1});
  REQUIRE(coords.has_value());
  CHECK(*coords == std::vector<Rational>{-1, 1});

  Basis<RowVector> line(2);
  line.try_insert(RowVector{1, 0});
  CHECK(!line.coordinates(RowVector{0, 1}).has_value());

  Basis<RowVector> empty(2);
  const auto none = empty.coordinates(RowVector{0, 0});
  REQUIRE(none.has_value());
  CHECK(none->empty());

  CHECK_THROWS_AS(empty.coordinates(RowVector{1}), std::invalid_argument);
  CHECK_THROWS_AS(empty.try_insert(RowVector{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("column bases behave the same") {
  Basis<ColVector> basis(2);
  CHECK(basis.try_insert(ColVector{0, 1}).independent);
  CHECK(basis.try_insert(ColVector{1, 0}).independent);
  const auto coords = basis.coordinates(ColVector{3, -2});
  REQUIRE(coords.has_value());
  CHECK(*coords == std::vector<Rational>{-2, 3});
}

TEST_CASE("dependent coordinates reconstruct the vector") {
  std::mt19937 rng(17);
  for (int round = 0; round < 60; ++round) {
    const std::size_t dim = 1 + round % 5;
    Basis<RowVector> basis(dim);
    for (int insert = 0; insert < 8; ++insert) {
      const RowVector v = random_vector(rng, dim);
      const InsertOutcome outcome = basis.try_insert(v);
      CHECK(basis.size() <= dim);
      if (outcome.independent) continue;
      RowVector rebuilt(dim);
      REQUIRE(outcome.coordinates.size() == basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          rebuilt.at(j) += outcome.coordinates[i] * basis.vector(i).at(j);
        }
      }
      CHECK(rebuilt == v);
      // A vector already in the span never grows the basis.
      const std::size_t before = basis.size();
      basis.try_insert(v);
      CHECK(basis.size() == before);
    }
  }
}

}  // TEST_SUITE

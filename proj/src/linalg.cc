// linalg.cc
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

#include "linrep/linalg.hh"

#include <ostream>
#include <sstream>

namespace linrep {

namespace {

bool entries_zero(const std::vector<Rational>& entries) {
  for (const Rational& e : entries) {
    if (!e.is_zero()) return false;
  }
  return true;
}

template <typename V>
std::ostream& print_tuple(std::ostream& os, const V& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i > 0) os << ", ";
    os << v.at(i);
  }
  return os << ')';
}

}  // namespace

bool RowVector::is_zero() const { return entries_zero(entries_); }
bool ColVector::is_zero() const { return entries_zero(entries_); }

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RowVector Matrix::row(std::size_t r) const {
  RowVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.at(c) = at(r, c);
  return v;
}

ColVector Matrix::col(std::size_t c) const {
  ColVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.at(r) = at(r, c);
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: shape mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& f = a.at(i, k);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += f * b.at(k, j);
      }
    }
  }
  return out;
}

RowVector operator*(const RowVector& v, const Matrix& m) {
  if (v.dimension() != m.rows()) {
    throw std::invalid_argument("vector-matrix product: shape mismatch");
  }
  RowVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v.at(i).is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) out.at(j) += v.at(i) * m.at(i, j);
    }
  }
  return out;
}

ColVector operator*(const Matrix& m, const ColVector& v) {
  if (m.cols() != v.dimension()) {
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  }
  ColVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero() && !v.at(j).is_zero()) {
        out.at(i) += m.at(i, j) * v.at(j);
      }
    }
  }
  return out;
}

RowVector operator-(const RowVector& v) {
  RowVector out(v.dimension());
  for (std::size_t i = 0; i < v.dimension(); ++i) out.at(i) = -v.at(i);
  return out;
}

Rational dot(const RowVector& u, const ColVector& w) {
  if (u.dimension() != w.dimension()) {
    throw std::invalid_argument("inner product: dimension mismatch");
  }
  Rational out;
  for (std::size_t i = 0; i < u.dimension(); ++i) {
    if (!u.at(i).is_zero() && !w.at(i).is_zero()) out += u.at(i) * w.at(i);
  }
  return out;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  // Gauss-Jordan on [m | I].
  Matrix work = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational lead = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= lead;
      inv.at(col, j) /= lead;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      const Rational f = work.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::ostream& operator<<(std::ostream& os, const RowVector& v) {
  return print_tuple(os, v);
}

std::ostream& operator<<(std::ostream& os, const ColVector& v) {
  return print_tuple(os, v);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ", ";
      os << m.at(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace linrep

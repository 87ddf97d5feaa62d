// representation.cc
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

#include "linrep/representation.hh"

#include <stdexcept>
#include <string>

namespace linrep {

LinearRepresentation::LinearRepresentation(unsigned alphabet_size,
                                           RowVector entry,
                                           std::vector<Matrix> matrices,
                                           ColVector exit)
    : alphabet_size_(alphabet_size),
      entry_(std::move(entry)),
      matrices_(std::move(matrices)),
      exit_(std::move(exit)) {
  if (alphabet_size_ < 2) {
    throw std::invalid_argument("alphabet size must be at least 2");
  }
  const std::size_t dim = entry_.dimension();
  if (matrices_.size() != alphabet_size_) {
    throw std::invalid_argument("expected " + std::to_string(alphabet_size_) +
                                " matrices, got " +
                                std::to_string(matrices_.size()));
  }
  for (std::size_t a = 0; a < matrices_.size(); ++a) {
    if (matrices_[a].rows() != dim || matrices_[a].cols() != dim) {
      throw std::invalid_argument("matrix " + std::to_string(a) +
                                  " is not " + std::to_string(dim) + "x" +
                                  std::to_string(dim));
    }
  }
  if (exit_.dimension() != dim) {
    throw std::invalid_argument("exit vector dimension mismatch");
  }
}

const Matrix& LinearRepresentation::matrix(Letter a) const {
  if (a >= alphabet_size_) {
    throw std::invalid_argument("letter out of range");
  }
  return matrices_[a];
}

Matrix word_matrix(const LinearRepresentation& rep, const Word& b) {
  Matrix product = Matrix::identity(rep.dimension());
  for (const Letter a : b) {
    product = product * rep.matrix(a);
  }
  return product;
}

Rational eval_series(const LinearRepresentation& rep, const Word& b) {
  RowVector state = rep.entry();
  for (const Letter a : b) {
    state = state * rep.matrix(a);
  }
  return dot(state, rep.exit());
}

Rational eval_sequence(const LinearRepresentation& rep, const Integer& n) {
  return eval_series(rep, canonical_digits(n, rep.alphabet_size()));
}

}  // namespace linrep

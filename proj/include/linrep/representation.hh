// representation.hh
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
// Linear representations (entry vector, one square matrix per letter, exit
// vector) and their evaluation, both on words and on non-negative integers.

#ifndef LINREP_REPRESENTATION_HH
#define LINREP_REPRESENTATION_HH

#include <vector>

#include "linrep/linalg.hh"
#include "linrep/words.hh"

namespace linrep {

/// A D-dimensional linear representation over the alphabet {0, ..., q-1}:
/// a 1xD entry vector, q DxD matrices indexed by letter, and a Dx1 exit
/// vector. D = 0 is legal and represents the zero series. Immutable after
/// construction.
class LinearRepresentation {
 public:
  /// Validates shapes: exactly q matrices, all DxD, vectors of dimension D,
  /// q >= 2. Throws std::invalid_argument otherwise.
  LinearRepresentation(unsigned alphabet_size, RowVector entry,
                       std::vector<Matrix> matrices, ColVector exit);

  unsigned alphabet_size() const { return alphabet_size_; }
  std::size_t dimension() const { return entry_.dimension(); }

  const RowVector& entry() const { return entry_; }
  const ColVector& exit() const { return exit_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  /// Matrix for one letter. Throws std::invalid_argument when the letter is
  /// out of range.
  const Matrix& matrix(Letter a) const;

  friend bool operator==(const LinearRepresentation&,
                         const LinearRepresentation&) = default;

 private:
  unsigned alphabet_size_;
  RowVector entry_;
  std::vector<Matrix> matrices_;
  ColVector exit_;
};

/// Product of the letter matrices along b: position 0 of the word is the
/// leftmost factor. The empty word gives the identity; dimension 0 gives
/// the 0x0 matrix.
Matrix word_matrix(const LinearRepresentation& rep, const Word& b);

/// Series value entry * word_matrix(b) * exit; 0 for dimension 0.
Rational eval_series(const LinearRepresentation& rep, const Word& b);

/// Sequence value at index n: the series evaluated at the canonical digit
/// expansion of n (least significant digit first, no trailing zero).
/// Total for every representation; it matches the digit-recursion reading
/// exactly when the representation is proper (see regular.hh).
Rational eval_sequence(const LinearRepresentation& rep, const Integer& n);

}  // namespace linrep

#endif  // LINREP_REPRESENTATION_HH

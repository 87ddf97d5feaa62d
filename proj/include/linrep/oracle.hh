// oracle.hh
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
// Independent verification engines. Nothing here goes through the
// reduction machinery: the recursion evaluator peels digits arithmetically,
// brute-force comparison enumerates words, and the truncated Hankel rank is
// computed by plain Gaussian elimination.

#ifndef LINREP_ORACLE_HH
#define LINREP_ORACLE_HH

#include <cstddef>
#include <vector>

#include "linrep/representation.hh"

namespace linrep {

/// Cap on Hankel table cells (number of words squared); 4^9.
inline constexpr std::size_t kDefaultHankelCellCap = 262144;

/// Truncated Hankel table: all words of length <= max_len in
/// length-lexicographic order index both rows and columns, and
/// entries.at(i, j) is the series value at words[i] concatenated with
/// words[j].
struct HankelTable {
  unsigned max_len = 0;
  std::vector<Word> words;
  Matrix entries;
};

/// All words over {0, ..., q-1} of length <= max_len, shortest first and
/// letters ascending within a length class.
std::vector<Word> words_up_to(unsigned alphabet_size, unsigned max_len);

/// Sequence value at n computed by the defining digit recursion: peel
/// n = q*m + r, multiply the state by M(r), starting from the exit vector
/// at index 0. Throws std::domain_error for improper representations,
/// where the recursion is contradictory.
Rational recursion_oracle(const LinearRepresentation& rep, const Integer& n);

/// True iff the two series agree on every word of length <= max_len, by
/// plain enumeration. Throws std::invalid_argument when the alphabet sizes
/// differ.
bool brute_force_equal(const LinearRepresentation& a,
                       const LinearRepresentation& b, unsigned max_len);

/// Builds the truncated Hankel table. Throws std::length_error
/// ("truncation too large") when the table would exceed cell_cap cells.
HankelTable hankel_table(const LinearRepresentation& rep, unsigned max_len,
                         std::size_t cell_cap = kDefaultHankelCellCap);

/// Exact rank of the truncated Hankel table. Non-decreasing in max_len,
/// never exceeds the representation dimension, and equals the minimal
/// dimension once max_len reaches it.
std::size_t hankel_rank(const LinearRepresentation& rep, unsigned max_len,
                        std::size_t cell_cap = kDefaultHankelCellCap);

}  // namespace linrep

#endif  // LINREP_ORACLE_HH

// words.hh
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
// Words over the digit alphabet {0, ..., q-1} and their integer values.
//
// Convention used everywhere in this library: position 0 of a word is the
// LEAST significant digit, so word {0, 1, 1} over q = 2 has value
// 0 + 1*2 + 1*4 = 6, and trailing zeros (at the end of the word) are the
// most significant positions of the integer. Getting this backwards is the
// classic bug with digit representations; every word-consuming function
// below follows this one convention.

#ifndef LINREP_WORDS_HH
#define LINREP_WORDS_HH

#include <string>
#include <string_view>
#include <vector>

#include "linrep/rational.hh"

namespace linrep {

using Letter = unsigned;
using Word = std::vector<Letter>;

/// Value of a word as a base-q integer, least significant digit first.
/// The empty word has value 0. Throws std::invalid_argument when a letter
/// is out of range.
Integer word_value(const Word& b, unsigned alphabet_size);

/// The unique word with the given value whose last letter is nonzero;
/// canonical_digits(0, q) is the empty word. Requires alphabet_size >= 2
/// and n >= 0.
Word canonical_digits(const Integer& n, unsigned alphabet_size);

/// Longest prefix whose last letter is nonzero (possibly empty). Removing
/// trailing zeros never changes the word's value.
Word strip_trailing_zeros(Word b);

/// "0,1,1" for {0, 1, 1}; the empty word prints as "eps".
std::string word_to_string(const Word& b);

/// Inverse of word_to_string; "" and "eps" both denote the empty word.
/// Throws std::invalid_argument on malformed input.
Word word_from_string(std::string_view text);

}  // namespace linrep

#endif  // LINREP_WORDS_HH

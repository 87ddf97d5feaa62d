// oracle.cc
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

#include "linrep/oracle.hh"

#include <stdexcept>

#include "linrep/regular.hh"

namespace linrep {

std::vector<Word> words_up_to(unsigned alphabet_size, unsigned max_len) {
  std::vector<Word> words;
  words.push_back(Word{});
  std::size_t class_size = 1;
  for (unsigned len = 1; len <= max_len; ++len) {
    class_size *= alphabet_size;
    for (std::size_t index = 0; index < class_size; ++index) {
      Word b(len);
      std::size_t rest = index;
      // Lexicographic order: position 0 carries the highest weight.
      for (unsigned j = len; j-- > 0;) {
        b[j] = static_cast<Letter>(rest % alphabet_size);
        rest /= alphabet_size;
      }
      words.push_back(std::move(b));
    }
  }
  return words;
}

Rational recursion_oracle(const LinearRepresentation& rep, const Integer& n) {
  if (!is_proper(rep)) {
    throw std::domain_error("representation is not proper");
  }
  if (sgn(n) < 0) {
    throw std::invalid_argument("index must be non-negative");
  }
  std::vector<Letter> digits;
  Integer m = n;
  while (sgn(m) > 0) {
    const unsigned long r =
        mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), rep.alphabet_size());
    digits.push_back(static_cast<Letter>(r));
  }
  ColVector state = rep.exit();
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    state = rep.matrix(*it) * state;
  }
  return dot(rep.entry(), state);
}

bool brute_force_equal(const LinearRepresentation& a,
                       const LinearRepresentation& b, unsigned max_len) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw std::invalid_argument("alphabet size mismatch");
  }
  for (const Word& w : words_up_to(a.alphabet_size(), max_len)) {
    if (eval_series(a, w) != eval_series(b, w)) return false;
  }
  return true;
}

HankelTable hankel_table(const LinearRepresentation& rep, unsigned max_len,
                         std::size_t cell_cap) {
  const unsigned q = rep.alphabet_size();

  std::size_t word_limit = 0;
  while ((word_limit + 1) * (word_limit + 1) <= cell_cap) ++word_limit;
  std::size_t n_words = 1;
  std::size_t class_size = 1;
  for (unsigned len = 1; len <= max_len; ++len) {
    if (class_size > word_limit) {
      throw std::length_error("truncation too large");
    }
    class_size *= q;
    n_words += class_size;
    if (n_words > word_limit) {
      throw std::length_error("truncation too large");
    }
  }
  if (n_words > word_limit) {
    throw std::length_error("truncation too large");
  }

  HankelTable table;
  table.max_len = max_len;
  table.words = words_up_to(q, max_len);

  // Row b carries entry * M(b), built by appending the last letter to a
  // shorter word; column c carries M(c) * exit, built by prepending the
  // first letter. Entry (b, c) is then a single inner product.
  std::vector<RowVector> rows;
  std::vector<ColVector> cols;
  rows.reserve(n_words);
  cols.reserve(n_words);
  rows.push_back(rep.entry());
  cols.push_back(rep.exit());
  std::size_t prev_offset = 0;
  std::size_t offset = 1;
  class_size = 1;
  for (unsigned len = 1; len <= max_len; ++len) {
    const std::size_t prev_class = class_size;
    class_size *= q;
    for (std::size_t index = 0; index < class_size; ++index) {
      rows.push_back(rows[prev_offset + index / q] *
                     rep.matrix(static_cast<Letter>(index % q)));
      cols.push_back(rep.matrix(static_cast<Letter>(index / prev_class)) *
                     cols[prev_offset + index % prev_class]);
    }
    prev_offset = offset;
    offset += class_size;
  }

  table.entries = Matrix(n_words, n_words);
  for (std::size_t i = 0; i < n_words; ++i) {
    for (std::size_t j = 0; j < n_words; ++j) {
      table.entries.at(i, j) = dot(rows[i], cols[j]);
    }
  }
  return table;
}

std::size_t hankel_rank(const LinearRepresentation& rep, unsigned max_len,
                        std::size_t cell_cap) {
  const HankelTable table = hankel_table(rep, max_len, cell_cap);
  const std::size_t n = table.words.size();

  // Self-contained elimination: the certificate must not depend on the
  // basis machinery it certifies.
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Rational> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = table.entries.at(r, c);
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      const Rational factor = row[pivots[i]];
      if (factor.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!echelon[i][c].is_zero()) row[c] -= factor * echelon[i][c];
      }
    }
    std::size_t pivot = 0;
    while (pivot < n && row[pivot].is_zero()) ++pivot;
    if (pivot == n) continue;
    const Rational lead = row[pivot];
    for (std::size_t c = 0; c < n; ++c) row[c] /= lead;
    echelon.push_back(std::move(row));
    pivots.push_back(pivot);
    ++rank;
  }
  return rank;
}

}  // namespace linrep

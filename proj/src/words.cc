// words.cc
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

#include "linrep/words.hh"

#include <cctype>
#include <stdexcept>

namespace linrep {

Integer word_value(const Word& b, unsigned alphabet_size) {
  Integer value = 0;
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    if (*it >= alphabet_size) {
      throw std::invalid_argument("letter out of range");
    }
    value = value * alphabet_size + *it;
  }
  return value;
}

Word canonical_digits(const Integer& n, unsigned alphabet_size) {
  if (alphabet_size < 2) {
    throw std::invalid_argument("alphabet size must be at least 2");
  }
  if (sgn(n) < 0) {
    throw std::invalid_argument("index must be non-negative");
  }
  Word digits;
  Integer m = n;
  while (sgn(m) > 0) {
    const unsigned long r =
        mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), alphabet_size);
    digits.push_back(static_cast<Letter>(r));
  }
  return digits;
}

Word strip_trailing_zeros(Word b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

std::string word_to_string(const Word& b) {
  if (b.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(b[i]);
  }
  return out;
}

Word word_from_string(std::string_view text) {
  if (text.empty() || text == "eps") return Word{};
  Word out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view piece = text.substr(pos, comma - pos);
    if (piece.empty()) {
      throw std::invalid_argument("malformed word \"" + std::string(text) + "\"");
    }
    unsigned long value = 0;
    for (const char c : piece) {
      if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
        throw std::invalid_argument("malformed word \"" + std::string(text) + "\"");
      }
      value = value * 10 + static_cast<unsigned long>(c - '0');
      if (value > 1u << 20) {
        throw std::invalid_argument("letter too large in \"" + std::string(text) + "\"");
      }
    }
    out.push_back(static_cast<Letter>(value));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

}  // namespace linrep

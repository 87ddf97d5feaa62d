// rational.cc
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

#include "linrep/rational.hh"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace linrep {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw std::invalid_argument("zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::invalid_argument("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
  const auto malformed = [&]() -> void {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  };

  std::string_view num_part = text;
  std::string_view den_part;
  const std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (!all_digits(den_part)) malformed();
  }
  std::string_view digits = num_part;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) malformed();

  const Integer num(std::string(num_part), 10);
  if (slash == std::string_view::npos) {
    return Rational(num);
  }
  const Integer den(std::string(den_part), 10);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace linrep

// rational.hh
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
// Exact rational scalars over arbitrary-precision integers. All arithmetic
// in the library is done with these; there is no floating-point mode.

#ifndef LINREP_RATIONAL_HH
#define LINREP_RATIONAL_HH

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace linrep {

/// Arbitrary-precision integer, used for sequence indices and digit values.
using Integer = mpz_class;

/// Exact rational number, always held in canonical form: the denominator is
/// positive and coprime to the numerator. Equality is exact and decidable.
/// Immutable value type; safe to copy and share between threads.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}
  Rational(const Integer& n) : value_(n) {}

  /// Canonicalises num/den. Throws std::invalid_argument on a zero denominator.
  Rational(const Integer& num, const Integer& den);

  /// Parses "-3" or "5/7" style text (integer, or integer over a positive
  /// integer). Throws std::invalid_argument on anything else.
  static Rational from_string(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
  std::string str() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;  // kept canonical: GMP arithmetic preserves canonical form
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace linrep

#endif  // LINREP_RATIONAL_HH

// Copyright 2026 The Flowgames Authors.
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

#ifndef FLOWGAMES_RATIONAL_H_
#define FLOWGAMES_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace flowgames {

// Exact rational number in canonical form (reduced, positive denominator).
// Thin value wrapper over mpq_class so that expression templates never leak
// into callers and every result is canonical.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t v);  // NOLINT(runtime/explicit)
  Rational(int64_t num, int64_t den);
  explicit Rational(mpq_class v);

  // Accepts "p/q", "p" and "-p/q" with optional surrounding whitespace.
  // Throws InputError on anything else, including a zero denominator.
  static Rational Parse(std::string_view text);

  // "p/q", or just "p" when the denominator is 1.
  std::string ToString() const;
  double ToDouble() const { return value_.get_d(); }

  const mpq_class& get() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_;
};

Rational Abs(const Rational& r);
Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

// Exponent helper used by gadget constants: 2^-k for k >= 0.
Rational PowerOfHalf(int k);

}  // namespace flowgames

template <>
struct std::hash<flowgames::Rational> {
  size_t operator()(const flowgames::Rational& r) const noexcept {
    return std::hash<std::string>()(r.ToString());
  }
};

#endif  // FLOWGAMES_RATIONAL_H_

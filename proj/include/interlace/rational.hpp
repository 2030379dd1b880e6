/*
   Copyright 2026 The interlace authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INTERLACE_RATIONAL_HPP
#define INTERLACE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace interlace {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Raised for malformed user input (bad rationals, invalid family parameters, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "a", "a/b" or an exact decimal "1.25" (never via binary floating point).
Rational parse_rational(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Rational binomial(long n, long k);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), by direct product.
Rational pochhammer(const Rational& a, long k);

Rational factorial(long k);

Rational pow(const Rational& base, long exponent);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace interlace

#endif

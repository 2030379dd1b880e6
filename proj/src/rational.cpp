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

#include "interlace/rational.hpp"

#include <algorithm>
#include <cctype>

namespace interlace {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw InvalidArgument("empty rational");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(s.substr(0, slash), text);
        std::string_view den_text = s.substr(slash + 1);
        if (!all_digits(den_text)) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
        mpz_class den(std::string(den_text), 10);
        if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        std::string_view int_digits = int_part;
        if (!int_digits.empty() && (int_digits.front() == '-' || int_digits.front() == '+')) int_digits.remove_prefix(1);
        if ((int_digits.empty() && frac_part.empty()) || (!int_digits.empty() && !all_digits(int_digits)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw InvalidArgument("malformed decimal '" + std::string(text) + "'");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        mpz_class whole = int_digits.empty() ? mpz_class(0) : mpz_class(std::string(int_digits), 10);
        mpz_class frac = frac_part.empty() ? mpz_class(0) : mpz_class(std::string(frac_part), 10);
        mpz_class num = whole * scale + frac;
        if (negative) num = -num;
        Rational q(num, scale);
        q.canonicalize();
        return q;
    }

    return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(c);
}

Rational pochhammer(const Rational& a, long k) {
    Rational result(1);
    for (long i = 0; i < k; ++i) result *= a + i;
    return result;
}

Rational factorial(long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(f);
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw InvalidArgument("zero to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational result(1);
    Rational b = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

} // namespace interlace

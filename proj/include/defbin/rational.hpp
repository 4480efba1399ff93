#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace defbin {

// Exact rational scalar. mpq_class keeps values reduced with positive
// denominator as long as every value is built through canonicalizing
// entry points, which the helpers below are.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" and "n/d" with an optional leading sign, nothing else.
Rational parse_rational(std::string_view text);

// Canonical form: "n" or "n/d" with d > 1.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational factorial(unsigned long n);
Rational binomial(unsigned long n, unsigned long k);

// Rising factorial z(z+1)...(z+n-1).
Rational pochhammer(const Rational& z, unsigned long n);

// base^exp with integer exp; negative exp requires base != 0.
Rational pow_rational(const Rational& base, long exp);

}  // namespace defbin

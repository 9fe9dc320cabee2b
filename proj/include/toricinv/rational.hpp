#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "toricinv/errors.hpp"

namespace toricinv {

// Exact rationals are GMP mpq_class values: always canonical, i.e.
// gcd(|num|, den) = 1 and den > 0.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sgn(const Rat& q) { return ::sgn(q); }

inline Rat rat_abs(const Rat& q) { return ::abs(q); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw DenominatorVanishes("rat_pow: 0 to a negative power");
        Rat inv(base.get_den(), base.get_num());
        inv.canonicalize();
        return rat_pow(inv, -e);
    }
    Rat out(1);
    Rat acc = base;
    while (e > 0) {
        if (e & 1) out *= acc;
        e >>= 1;
        if (e) acc *= acc;
    }
    return out;
}

// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d), nonnegative; gcd(x,0) = |x|.
inline Rat rat_gcd(const Rat& x, const Rat& y) {
    if (x == 0) return rat_abs(y);
    if (y == 0) return rat_abs(x);
    Int gn, lden;
    mpz_gcd(gn.get_mpz_t(), x.get_num().get_mpz_t(), y.get_num().get_mpz_t());
    mpz_lcm(lden.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    Rat g(gn, lden);
    g.canonicalize();
    return g;
}

inline double to_double(const Rat& q) { return q.get_d(); }

// "3", "-3/7"; always canonical.
inline std::string to_fraction_string(const Rat& q) { return q.get_str(); }

// Parses "a", "a/b", plain decimals ("0.25", "-1.5") and scientific
// notation with integer mantissa parts ("1e-8", "2.5e3"), all exactly.
inline Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw UsageError("empty rational literal");
    std::string s = text;
    // fraction or integer: delegate to GMP
    if (s.find_first_of(".eE") == std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) throw UsageError("bad rational literal: " + text);
        q.canonicalize();
        if (q.get_den() == 0) throw UsageError("zero denominator: " + text);
        return q;
    }
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '.') {
            if (seen_dot) throw UsageError("bad rational literal: " + text);
            seen_dot = true;
        } else if (ch == 'e' || ch == 'E') {
            exponent = std::stol(s.substr(i + 1));
            break;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            if (seen_dot) ++frac_digits;
        } else {
            throw UsageError("bad rational literal: " + text);
        }
    }
    if (digits.empty()) throw UsageError("bad rational literal: " + text);
    Int mant(digits, 10);  // explicit base, leading zeros must not mean octal
    if (neg) mant = -mant;
    long net = exponent - frac_digits;
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    Rat q = (net >= 0) ? Rat(mant * p10) : Rat(mant, p10);
    q.canonicalize();
    return q;
}

// 15 significant digits, the CLI float rendering.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return std::string(buf);
}

} // namespace toricinv

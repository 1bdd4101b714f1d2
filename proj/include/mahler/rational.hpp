#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "mahler/errors.hpp"

namespace mahler {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw DomainError("rat_pow: zero base with negative exponent");
        return rat_pow(Rat(1) / base, -e);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Rat pow2(long e) {
    Rat r = 1;
    if (e >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(-e));
    return r;
}

// Largest e >= 0 with q^e <= h; requires q >= 2, h >= 1.
inline long floor_log(const Int& h, long q) {
    if (h < 1 || q < 2) throw DomainError("floor_log: need h >= 1 and q >= 2");
    long e = 0;
    Int p = q;
    while (p <= h) {
        p *= q;
        ++e;
    }
    return e;
}

inline Int floor_to_int(const Rat& x) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return r;
}

inline Int ceil_to_int(const Rat& x) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return r;
}

// Nearest dyadic below/above x with denominator 2^bits; used to keep
// interval endpoints from accumulating huge denominators.
inline Rat dyadic_floor(const Rat& x, long bits) {
    Rat scaled = x * pow2(bits);
    return Rat(floor_to_int(scaled)) * pow2(-bits);
}

inline Rat dyadic_ceil(const Rat& x, long bits) {
    Rat scaled = x * pow2(bits);
    return Rat(ceil_to_int(scaled)) * pow2(-bits);
}

// Dyadic u with u^2 >= x (resp. u^2 <= x), x >= 0.
inline Rat sqrt_upper(const Rat& x, long bits) {
    if (x < 0) throw DomainError("sqrt_upper: negative argument");
    if (x == 0) return Rat(0);
    Int scaled = ceil_to_int(x * pow2(2 * bits));
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    if (root * root < scaled) root += 1;
    return Rat(root) * pow2(-bits);
}

inline Rat sqrt_lower(const Rat& x, long bits) {
    if (x < 0) throw DomainError("sqrt_lower: negative argument");
    if (x == 0) return Rat(0);
    Int scaled = floor_to_int(x * pow2(2 * bits));
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return Rat(root) * pow2(-bits);
}

enum class Round { Down, Up };

// Exact decimal rendering of a rational, rounded toward the requested
// direction at `digits` places after the point.
inline std::string to_decimal(const Rat& x, unsigned digits, Round mode) {
    Int scale = int_pow(10, digits);
    Rat scaled = x * Rat(scale);
    Int n = (mode == Round::Down) ? floor_to_int(scaled) : ceil_to_int(scaled);
    bool neg = n < 0;
    Int a = abs(n);
    std::string s = a.get_str();
    if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    std::string out;
    if (neg) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

inline std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

}  // namespace mahler

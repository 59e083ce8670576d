#pragma once

#include <gmpxx.h>

#include <string>

namespace chipfire {

using BigInt = mpz_class;

inline BigInt big_abs(const BigInt& a) { return abs(a); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt big_pow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

/// True iff d divides a. Zero divides only zero.
inline bool big_divides(const BigInt& d, const BigInt& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Quotient rounded toward zero.
inline BigInt big_tdiv(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Exact quotient; the caller guarantees b | a.
inline BigInt big_divexact(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

}  // namespace chipfire

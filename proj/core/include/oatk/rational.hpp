#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace oatk {

// Exact arithmetic throughout: bound values, distance distributions and LP
// optima are identities, never floating approximations.
using BigInt = mpz_class;
using Rational = mpq_class;

// gmpxx has no long long constructors; route 64-bit values through long,
// which is 64-bit on every platform this builds for
static_assert(sizeof(long) == 8, "64-bit long required");

inline BigInt to_bigint(unsigned long long v) { return BigInt(static_cast<unsigned long>(v)); }
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }
inline Rational to_rational(unsigned long long v) {
    return Rational(static_cast<unsigned long>(v));
}

// den must be nonzero; result is reduced with positive denominator.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt rational_ceil(const Rational& q) {
    return ceil_div(q.get_num(), q.get_den());
}

inline BigInt rational_floor(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline BigInt pow_int(unsigned long base, unsigned long exp) {
    BigInt b;
    mpz_ui_pow_ui(b.get_mpz_t(), base, exp);
    return b;
}

// Smallest multiple of m that is >= v (m >= 1).
inline BigInt round_up_to_multiple(const BigInt& v, const BigInt& m) {
    return ceil_div(v, m) * m;
}

inline unsigned long long to_ull_checked(const BigInt& v, const char* what) {
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    unsigned long long r = 0;
    mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, v.get_mpz_t());
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace oatk

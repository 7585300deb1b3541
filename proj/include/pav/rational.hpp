#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and canonical
// rationals (GMP), plus the small combinatorial helpers used throughout.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pav {

using BigInt = mpz_class;
using Rational = mpq_class;  // kept canonical by gmpxx operators

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Renders "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Catalan number C_n = binom(2n, n) / (n + 1).
inline BigInt catalan(unsigned long n) {
    BigInt r = binomial(2 * n, n);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
    return r;
}

inline Rational pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("negative power of zero");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

// Rising factorial x(x+1)...(x+m-1) for rational x; empty product for m == 0.
inline Rational rising_factorial(const Rational& x, unsigned m) {
    Rational r(1);
    for (unsigned t = 0; t < m; ++t) r *= x + Rational(static_cast<long>(t));
    return r;
}

}  // namespace pav

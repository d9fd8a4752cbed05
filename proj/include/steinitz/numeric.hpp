#pragma once

#include <gmpxx.h>

#include <string>

#include "steinitz/errors.hpp"

namespace steinitz {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floordiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Exact quotient; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0)
        throw DivisionByZero("exact_div by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw InternalError("exact_div: not divisible");
    return q;
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

/// Trial-division squarefree test; fine at the scale of class-field data.
inline bool is_squarefree(const Int& n) {
    if (n <= 0)
        return false;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0)
                return false;
        }
    }
    return true;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Largest e with p^e | n; n must be nonzero.
inline unsigned valuation(Int& n, const Int& p) {
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

inline int kronecker(const Int& a, const Int& b) {
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

} // namespace steinitz

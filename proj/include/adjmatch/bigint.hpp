#pragma once

#include <gmpxx.h>

#include <string>

#include "adjmatch/errors.hpp"

namespace adjmatch {

// All counts in this library are exact; there is no fixed-width overflow
// path anywhere. GMP supplies the integer and rational substrate.
using BigInt = mpz_class;
using BigRat = mpq_class;

// num/den in canonical form. den must be positive.
inline BigRat make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) <= 0) {
        throw InternalInconsistencyError("make_rational: nonpositive denominator");
    }
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

// a / b, required to be exact. A nonzero remainder is a bug upstream.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw InternalInconsistencyError("exact_div: inexact division");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt pow_ui(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace adjmatch

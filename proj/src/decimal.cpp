#include "adjmatch/decimal.hpp"

#include <cstdio>
#include <stdexcept>

namespace adjmatch {

namespace {

BigInt ten_to(unsigned long e) { return pow_ui(BigInt(10), e); }

// floor(num/den) with half-to-even rounding of the discarded fraction.
// num, den > 0.
BigInt div_round_half_even(const BigInt& num, const BigInt& den) {
    BigInt quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const BigInt twice = rem * 2;
    const int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(quo.get_mpz_t()))) {
        quo += 1;
    }
    return quo;
}

}  // namespace

std::string to_decimal_string(const BigRat& value, unsigned places) {
    if (sgn(value) < 0) {
        throw std::invalid_argument("to_decimal_string: negative value");
    }
    const BigInt num = value.get_num() * ten_to(places);
    const BigInt quo = div_round_half_even(num, value.get_den());

    std::string digits = quo.get_str();
    if (places == 0) return digits;
    if (digits.size() < places + 1) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, 1, '.');
    return digits;
}

std::string to_scientific_string(const BigRat& value, unsigned significant) {
    if (significant < 1) {
        throw std::invalid_argument("to_scientific_string: need >= 1 digit");
    }
    if (sgn(value) < 0) {
        throw std::invalid_argument("to_scientific_string: negative value");
    }

    char expbuf[16];
    if (sgn(value) == 0) {
        std::string mant = "0";
        if (significant > 1) mant += "." + std::string(significant - 1, '0');
        return mant + "e+00";
    }

    const BigInt& num = value.get_num();
    const BigInt& den = value.get_den();

    // Exponent e with 10^e <= value < 10^(e+1); start from the digit-count
    // estimate and correct by direct comparison.
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    auto less_than_pow = [&](long p) {
        // value < 10^p ?
        return p >= 0 ? num < den * ten_to(p) : num * ten_to(-p) < den;
    };
    while (less_than_pow(e)) --e;
    while (!less_than_pow(e + 1)) ++e;

    // Mantissa scaled to `significant` integer digits, rounded half-even.
    const long shift = static_cast<long>(significant) - 1 - e;
    BigInt mant = shift >= 0 ? div_round_half_even(num * ten_to(shift), den)
                             : div_round_half_even(num, den * ten_to(-shift));
    std::string digits = mant.get_str();
    if (digits.size() > significant) {  // rounding carried into a new digit
        digits = digits.substr(0, significant);
        ++e;
    }

    std::string out(1, digits[0]);
    if (significant > 1) out += "." + digits.substr(1);
    std::snprintf(expbuf, sizeof expbuf, "e%+03ld", e);
    return out + expbuf;
}

}  // namespace adjmatch

#pragma once

#include <cstddef>
#include <vector>

#include "adjmatch/bigint.hpp"

namespace adjmatch {

// Dense polynomial with big-integer coefficients, indexed by degree.
struct BigPolynomial {
    std::vector<BigInt> coefficients;

    BigPolynomial() = default;
    explicit BigPolynomial(std::size_t degree) : coefficients(degree + 1, BigInt(0)) {}
    explicit BigPolynomial(std::vector<BigInt> coeffs) : coefficients(std::move(coeffs)) {}

    std::size_t degree() const {
        return coefficients.empty() ? 0 : coefficients.size() - 1;
    }

    const BigInt& operator[](std::size_t i) const { return coefficients[i]; }
    BigInt& operator[](std::size_t i) { return coefficients[i]; }

    bool operator==(const BigPolynomial&) const = default;
};

}  // namespace adjmatch

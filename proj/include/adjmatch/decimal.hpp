#pragma once

#include <string>

#include "adjmatch/bigint.hpp"

namespace adjmatch {

// Renders a nonnegative rational with exactly `places` digits after the
// decimal point, rounding half to even. The rounding happens in integer
// arithmetic, so the result is exact for any magnitude.
std::string to_decimal_string(const BigRat& value, unsigned places);

// Renders a positive rational in scientific notation with `significant`
// digits (e.g. "6.76672e-41"), rounding half to even. Zero renders as
// "0.00000e+00" with the requested digit count.
std::string to_scientific_string(const BigRat& value, unsigned significant);

}  // namespace adjmatch

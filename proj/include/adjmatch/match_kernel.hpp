#pragma once

#include <cstddef>
#include <cstdint>

namespace adjmatch {

// Rank labels in an arrangement. 16 bits covers any deck this library will
// enumerate or simulate.
using Rank = std::uint16_t;

// Number of indices i with values[i] == values[i+1]. Reference kernel;
// kept inline so enumeration loops pay no call overhead.
inline unsigned count_adjacent_equal_scalar(const Rank* values, std::size_t len) {
    unsigned count = 0;
    for (std::size_t i = 1; i < len; ++i) {
        count += values[i - 1] == values[i];
    }
    return count;
}

#if defined(ADJMATCH_HAVE_AVX2)
// AVX2 variant: 16 lanes of 16-bit compares per step. Only called after a
// runtime CPU check.
unsigned count_adjacent_equal_avx2(const Rank* values, std::size_t len);
#endif

// Dispatched entry point: picks the widest kernel the CPU supports once,
// at first use. Equivalent to the scalar kernel on every input.
unsigned count_adjacent_equal(const Rank* values, std::size_t len);

// Name of the kernel behind count_adjacent_equal: "avx2" or "scalar".
const char* active_match_kernel();

}  // namespace adjmatch

// Compiled with -mavx2; callers must gate on a runtime CPU check.

#include "adjmatch/match_kernel.hpp"

#if defined(ADJMATCH_HAVE_AVX2)

#include <immintrin.h>

namespace adjmatch {

unsigned count_adjacent_equal_avx2(const Rank* values, std::size_t len) {
    if (len < 2) return 0;
    const std::size_t pairs = len - 1;
    std::size_t i = 0;
    unsigned count = 0;
    for (; i + 16 <= pairs; i += 16) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i));
        const __m256i b =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i + 1));
        const __m256i eq = _mm256_cmpeq_epi16(a, b);
        // Two mask bits per 16-bit lane.
        const unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(eq));
        count += static_cast<unsigned>(__builtin_popcount(mask)) / 2;
    }
    for (; i < pairs; ++i) {
        count += values[i] == values[i + 1];
    }
    return count;
}

}  // namespace adjmatch

#endif

#include "adjmatch/match_kernel.hpp"

namespace adjmatch {

namespace {

using KernelFn = unsigned (*)(const Rank*, std::size_t);

unsigned scalar_kernel(const Rank* values, std::size_t len) {
    return count_adjacent_equal_scalar(values, len);
}

struct Selected {
    KernelFn fn;
    const char* name;
};

Selected select_kernel() {
#if defined(ADJMATCH_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) {
        return {&count_adjacent_equal_avx2, "avx2"};
    }
#endif
    return {&scalar_kernel, "scalar"};
}

const Selected& kernel() {
    static const Selected k = select_kernel();
    return k;
}

}  // namespace

unsigned count_adjacent_equal(const Rank* values, std::size_t len) {
    return kernel().fn(values, len);
}

const char* active_match_kernel() { return kernel().name; }

}  // namespace adjmatch

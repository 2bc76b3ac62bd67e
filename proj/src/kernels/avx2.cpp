#include "tdc/kernels.hpp"

#include <immintrin.h>

namespace tdc::kernels::avx2 {

namespace {

// Lane i of the result is all-ones iff sets[i] != 0 and sets[i] is inside mask.
inline __m256i subset_lanes(__m256i sets, __m256i mask) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i outside = _mm256_andnot_si256(mask, sets);
    const __m256i inside = _mm256_cmpeq_epi64(outside, zero);
    const __m256i empty = _mm256_cmpeq_epi64(sets, zero);
    return _mm256_andnot_si256(empty, inside);
}

inline unsigned lane_bits(__m256i lanes) {
    return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(lanes)));
}

} // namespace

std::ptrdiff_t first_subset(std::span<const std::uint64_t> sets, std::uint64_t mask) {
    const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
    const std::size_t n = sets.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets.data() + i));
        const unsigned bits = lane_bits(subset_lanes(s, m));
        if (bits != 0) return static_cast<std::ptrdiff_t>(i + __builtin_ctz(bits));
    }
    for (; i < n; ++i) {
        if (sets[i] != 0 && (sets[i] & ~mask) == 0) return static_cast<std::ptrdiff_t>(i);
    }
    return npos;
}

bool all_covered(std::span<const std::uint64_t> sets, std::span<const std::uint64_t> masks) {
    for (std::uint64_t mask : masks) {
        if (first_subset(sets, mask) == npos) return false;
    }
    return true;
}

std::size_t count_subsets(std::span<const std::uint64_t> sets, std::uint64_t mask) {
    const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
    const std::size_t n = sets.size();
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets.data() + i));
        count += static_cast<std::size_t>(__builtin_popcount(lane_bits(subset_lanes(s, m))));
    }
    for (; i < n; ++i) count += (sets[i] != 0 && (sets[i] & ~mask) == 0);
    return count;
}

} // namespace tdc::kernels::avx2

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Bitset kernels behind the domination checks. Each kernel has a scalar
// reference and, on x86-64, an AVX2 variant; calls go through a table that
// is chosen once from CPUID. The two variants must agree bit for bit.

namespace tdc::kernels {

inline constexpr std::ptrdiff_t npos = -1;

/// Index of the first non-empty set with (set & ~mask) == 0, or npos.
using FirstSubsetFn = std::ptrdiff_t (*)(std::span<const std::uint64_t> sets, std::uint64_t mask);

/// True iff every mask in `masks` contains some non-empty set from `sets`.
using AllCoveredFn = bool (*)(std::span<const std::uint64_t> sets, std::span<const std::uint64_t> masks);

/// Number of sets that are non-empty subsets of mask.
using CountSubsetsFn = std::size_t (*)(std::span<const std::uint64_t> sets, std::uint64_t mask);

struct KernelTable {
    std::string_view isa;
    FirstSubsetFn first_subset;
    AllCoveredFn all_covered;
    CountSubsetsFn count_subsets;
};

namespace scalar {
std::ptrdiff_t first_subset(std::span<const std::uint64_t> sets, std::uint64_t mask);
bool all_covered(std::span<const std::uint64_t> sets, std::span<const std::uint64_t> masks);
std::size_t count_subsets(std::span<const std::uint64_t> sets, std::uint64_t mask);
} // namespace scalar

#if defined(TDC_HAVE_AVX2)
namespace avx2 {
std::ptrdiff_t first_subset(std::span<const std::uint64_t> sets, std::uint64_t mask);
bool all_covered(std::span<const std::uint64_t> sets, std::span<const std::uint64_t> masks);
std::size_t count_subsets(std::span<const std::uint64_t> sets, std::uint64_t mask);
} // namespace avx2
#endif

const KernelTable& scalar_table() noexcept;
/// AVX2 table when compiled in and supported by this CPU, else nullptr.
const KernelTable* avx2_table() noexcept;

/// Table in use. Starts as the best supported variant; TDC_KERNELS=scalar
/// in the environment forces the reference path.
const KernelTable& active() noexcept;
/// Overrides the active table (tests, benchmarking). Not thread-safe with
/// concurrent kernel calls.
void set_active(const KernelTable& table) noexcept;

inline std::ptrdiff_t first_subset(std::span<const std::uint64_t> sets, std::uint64_t mask) {
    return active().first_subset(sets, mask);
}
inline bool all_covered(std::span<const std::uint64_t> sets, std::span<const std::uint64_t> masks) {
    return active().all_covered(sets, masks);
}
inline std::size_t count_subsets(std::span<const std::uint64_t> sets, std::uint64_t mask) {
    return active().count_subsets(sets, mask);
}

} // namespace tdc::kernels

#include "tdc/kernels.hpp"

namespace tdc::kernels::scalar {

std::ptrdiff_t first_subset(std::span<const std::uint64_t> sets, std::uint64_t mask) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
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
    std::size_t count = 0;
    for (std::uint64_t s : sets) count += (s != 0 && (s & ~mask) == 0);
    return count;
}

} // namespace tdc::kernels::scalar

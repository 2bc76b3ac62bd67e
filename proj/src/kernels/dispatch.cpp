#include "tdc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace tdc::kernels {

namespace {

constexpr KernelTable kScalar{"scalar", &scalar::first_subset, &scalar::all_covered,
                              &scalar::count_subsets};

#if defined(TDC_HAVE_AVX2)
constexpr KernelTable kAvx2{"avx2", &avx2::first_subset, &avx2::all_covered, &avx2::count_subsets};
#endif

const KernelTable* detect() noexcept {
    if (const char* env = std::getenv("TDC_KERNELS"); env && std::string_view(env) == "scalar") {
        return &kScalar;
    }
    if (const KernelTable* t = avx2_table()) return t;
    return &kScalar;
}

std::atomic<const KernelTable*>& slot() noexcept {
    static std::atomic<const KernelTable*> table{detect()};
    return table;
}

} // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(TDC_HAVE_AVX2)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
    return nullptr;
}

const KernelTable& active() noexcept { return *slot().load(std::memory_order_relaxed); }

void set_active(const KernelTable& table) noexcept {
    slot().store(&table, std::memory_order_relaxed);
}

} // namespace tdc::kernels

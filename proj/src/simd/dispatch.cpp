#include "pdaw/simd/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace pdaw::simd {
namespace {

bool cpu_has_avx2()
{
#if defined(PDAW_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

const KernelTable& select()
{
    const auto tables = available_kernels();
    if (const char* forced = std::getenv("PDAW_SIMD")) {
        const std::string_view want{forced};
        for (const auto* t : tables)
            if (t->name == want)
                return *t;
        return scalar_kernels();
    }
    return *tables.back();
}

} // namespace

std::vector<const KernelTable*> available_kernels()
{
    std::vector<const KernelTable*> out{&scalar_kernels()};
#if defined(PDAW_HAVE_AVX2)
    if (cpu_has_avx2())
        out.push_back(&avx2_kernels());
#endif
#if defined(PDAW_HAVE_NEON)
    out.push_back(&neon_kernels());
#endif
    return out;
}

const KernelTable& active() noexcept
{
    static const KernelTable& table = select();
    return table;
}

} // namespace pdaw::simd

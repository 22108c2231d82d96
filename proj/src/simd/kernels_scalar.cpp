#include "pdaw/simd/kernels.hpp"

#include <bit>

namespace pdaw::simd {
namespace {

std::size_t popcount_scalar(const Word* a, std::size_t words)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t words)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::size_t and_store_popcount_scalar(const Word* a, const Word* b, Word* out, std::size_t words)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) {
        const Word w = a[i] & b[i];
        out[i] = w;
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

void xor_bytes_scalar(std::byte* dst, const std::byte* src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] ^= src[i];
}

} // namespace

const KernelTable& scalar_kernels() noexcept
{
    static const KernelTable table{
        "scalar",
        &popcount_scalar,
        &and_popcount_scalar,
        &and_store_popcount_scalar,
        &xor_bytes_scalar,
    };
    return table;
}

} // namespace pdaw::simd

// NEON is baseline on AArch64, so no runtime check is needed for this table.

#include "pdaw/simd/kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace pdaw::simd {
namespace {

inline std::size_t sum_counts(uint8x16_t counts)
{
    return static_cast<std::size_t>(vaddlvq_u8(counts));
}

std::size_t popcount_neon(const Word* a, std::size_t words)
{
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(a + i));
        total += sum_counts(vcntq_u8(v));
    }
    for (; i < words; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount_neon(const Word* a, const Word* b, std::size_t words)
{
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint64x2_t w = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        total += sum_counts(vcntq_u8(vreinterpretq_u8_u64(w)));
    }
    for (; i < words; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::size_t and_store_popcount_neon(const Word* a, const Word* b, Word* out, std::size_t words)
{
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint64x2_t w = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        vst1q_u64(out + i, w);
        total += sum_counts(vcntq_u8(vreinterpretq_u8_u64(w)));
    }
    for (; i < words; ++i) {
        const Word w = a[i] & b[i];
        out[i] = w;
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

void xor_bytes_neon(std::byte* dst, const std::byte* src, std::size_t n)
{
    auto* d8 = reinterpret_cast<std::uint8_t*>(dst);
    const auto* s8 = reinterpret_cast<const std::uint8_t*>(src);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16)
        vst1q_u8(d8 + i, veorq_u8(vld1q_u8(d8 + i), vld1q_u8(s8 + i)));
    for (; i < n; ++i)
        d8[i] ^= s8[i];
}

} // namespace

const KernelTable& neon_kernels() noexcept
{
    static const KernelTable table{
        "neon",
        &popcount_neon,
        &and_popcount_neon,
        &and_store_popcount_neon,
        &xor_bytes_neon,
    };
    return table;
}

} // namespace pdaw::simd

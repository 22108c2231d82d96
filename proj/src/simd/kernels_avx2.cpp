// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include "pdaw/simd/kernels.hpp"

#include <immintrin.h>

#include <cstring>

namespace pdaw::simd {
namespace {

// Nibble-lookup popcount (Mula): per-byte counts via pshufb, summed with sad.
inline __m256i popcount_bytes(__m256i v)
{
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline std::size_t horizontal_sum(__m256i acc)
{
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const Word* p)
{
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

std::size_t popcount_avx2(const Word* a, std::size_t words)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4)
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(load(a + i)), _mm256_setzero_si256()));
    std::size_t total = horizontal_sum(acc);
    for (; i < words; ++i)
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    return total;
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t words)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i w = _mm256_and_si256(load(a + i), load(b + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(w), _mm256_setzero_si256()));
    }
    std::size_t total = horizontal_sum(acc);
    for (; i < words; ++i)
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
    return total;
}

std::size_t and_store_popcount_avx2(const Word* a, const Word* b, Word* out, std::size_t words)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i w = _mm256_and_si256(load(a + i), load(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), w);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(w), _mm256_setzero_si256()));
    }
    std::size_t total = horizontal_sum(acc);
    for (; i < words; ++i) {
        const Word w = a[i] & b[i];
        out[i] = w;
        total += static_cast<std::size_t>(_mm_popcnt_u64(w));
    }
    return total;
}

void xor_bytes_avx2(std::byte* dst, const std::byte* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

} // namespace

const KernelTable& avx2_kernels() noexcept
{
    static const KernelTable table{
        "avx2",
        &popcount_avx2,
        &and_popcount_avx2,
        &and_store_popcount_avx2,
        &xor_bytes_avx2,
    };
    return table;
}

} // namespace pdaw::simd

#pragma once

// Data-parallel inner loops shared by the bound engine, the canonicalizer and
// the delivery simulator. Every kernel has a portable scalar reference in
// kernels_scalar.cpp; vector variants live in kernels_avx2.cpp and
// kernels_neon.cpp and must agree with the reference bit for bit.
//
// The active table is picked once at first use from what the CPU supports.
// Setting PDAW_SIMD=scalar|avx2|neon in the environment overrides the pick
// (an unavailable request falls back to scalar).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace pdaw::simd {

using Word = std::uint64_t;

struct KernelTable {
    std::string_view name;
    /// Population count of `words` 64-bit words.
    std::size_t (*popcount)(const Word* a, std::size_t words);
    /// popcount(a & b) without materialising the intersection.
    std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
    /// out = a & b; returns popcount(out). `out` may alias `a`.
    std::size_t (*and_store_popcount)(const Word* a, const Word* b, Word* out, std::size_t words);
    /// dst ^= src over n bytes.
    void (*xor_bytes)(std::byte* dst, const std::byte* src, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

#if defined(PDAW_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif
#if defined(PDAW_HAVE_NEON)
const KernelTable& neon_kernels() noexcept;
#endif

/// Tables compiled in and runnable on this CPU; scalar is always first.
std::vector<const KernelTable*> available_kernels();

/// The table used by the library.
const KernelTable& active() noexcept;

inline std::size_t popcount(std::span<const Word> a) noexcept
{
    return active().popcount(a.data(), a.size());
}

inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept
{
    return active().and_popcount(a.data(), b.data(), a.size());
}

inline std::size_t and_store_popcount(std::span<const Word> a, std::span<const Word> b,
                                      std::span<Word> out) noexcept
{
    return active().and_store_popcount(a.data(), b.data(), out.data(), a.size());
}

inline void xor_bytes(std::span<std::byte> dst, std::span<const std::byte> src) noexcept
{
    active().xor_bytes(dst.data(), src.data(), dst.size());
}

} // namespace pdaw::simd

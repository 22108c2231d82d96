#pragma once

#include "pdaw/simd/kernels.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#ifndef PDAW_MAX_ROWS
#define PDAW_MAX_ROWS 4096
#endif

namespace pdaw {

inline constexpr std::size_t kMaxRows = PDAW_MAX_ROWS;

/**
 * A subset of the row universe {0, ..., universe-1}, stored as packed 64-bit
 * words. The universe is at most kMaxRows. Bits past the universe are always
 * clear, so word-wise equality and popcounts are exact.
 */
class RowSet {
public:
    using Word = simd::Word;
    static constexpr std::size_t kWordBits = 64;

    RowSet() = default;
    explicit RowSet(std::size_t universe);
    RowSet(std::size_t universe, std::initializer_list<std::size_t> members);

    static RowSet full(std::size_t universe);
    /// Members given as 1-based row numbers.
    static RowSet from_one_based(std::size_t universe, std::span<const int> rows);

    static constexpr std::size_t words_for(std::size_t universe) noexcept
    {
        return (universe + kWordBits - 1) / kWordBits;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const Word> words() const noexcept { return words_; }

    bool test(std::size_t row) const noexcept
    {
        return (words_[row / kWordBits] >> (row % kWordBits)) & 1U;
    }
    void set(std::size_t row) noexcept { words_[row / kWordBits] |= Word{1} << (row % kWordBits); }
    void reset(std::size_t row) noexcept { words_[row / kWordBits] &= ~(Word{1} << (row % kWordBits)); }

    std::size_t count() const noexcept { return simd::popcount(words_); }
    bool empty() const noexcept;

    RowSet& operator&=(const RowSet& other) noexcept;
    RowSet& operator|=(const RowSet& other) noexcept;
    RowSet complement() const;

    std::size_t intersection_count(const RowSet& other) const noexcept
    {
        return simd::and_popcount(words_, other.words_);
    }
    bool is_subset_of(const RowSet& other) const noexcept;

    /// Members as 0-based indices, ascending.
    std::vector<std::size_t> members() const;
    /// Members as 1-based row numbers, ascending.
    std::vector<int> one_based() const;

    friend bool operator==(const RowSet&, const RowSet&) = default;
    friend std::strong_ordering operator<=>(const RowSet& a, const RowSet& b);

    std::size_t hash() const noexcept;

private:
    void check_universe(const RowSet& other) const;

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

inline RowSet operator&(RowSet a, const RowSet& b) { return a &= b; }
inline RowSet operator|(RowSet a, const RowSet& b) { return a |= b; }

} // namespace pdaw

template <>
struct std::hash<pdaw::RowSet> {
    std::size_t operator()(const pdaw::RowSet& s) const noexcept { return s.hash(); }
};

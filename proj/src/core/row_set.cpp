#include "pdaw/row_set.hpp"

#include "pdaw/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace pdaw {

RowSet::RowSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0)
{
    if (universe > kMaxRows)
        throw CapacityError("row universe " + std::to_string(universe) + " exceeds PDAW_MAX_ROWS=" +
                            std::to_string(kMaxRows));
}

RowSet::RowSet(std::size_t universe, std::initializer_list<std::size_t> members) : RowSet(universe)
{
    for (auto r : members) {
        if (r >= universe)
            throw StructuralError("row " + std::to_string(r) + " outside universe of size " +
                                  std::to_string(universe));
        set(r);
    }
}

RowSet RowSet::full(std::size_t universe)
{
    RowSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    if (const auto tail = universe % kWordBits; tail != 0)
        s.words_.back() = (Word{1} << tail) - 1;
    return s;
}

RowSet RowSet::from_one_based(std::size_t universe, std::span<const int> rows)
{
    RowSet s(universe);
    for (int r : rows) {
        if (r < 1 || static_cast<std::size_t>(r) > universe)
            throw StructuralError("row " + std::to_string(r) + " outside [1," + std::to_string(universe) + "]");
        s.set(static_cast<std::size_t>(r - 1));
    }
    return s;
}

bool RowSet::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void RowSet::check_universe(const RowSet& other) const
{
    if (other.universe_ != universe_)
        throw StructuralError("row sets over different universes (" + std::to_string(universe_) + " vs " +
                              std::to_string(other.universe_) + ")");
}

RowSet& RowSet::operator&=(const RowSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

RowSet& RowSet::operator|=(const RowSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

RowSet RowSet::complement() const
{
    RowSet out = full(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] &= ~words_[i];
    return out;
}

bool RowSet::is_subset_of(const RowSet& other) const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0)
            return false;
    return true;
}

std::vector<std::size_t> RowSet::members() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<int> RowSet::one_based() const
{
    std::vector<int> out;
    for (auto r : members())
        out.push_back(static_cast<int>(r) + 1);
    return out;
}

std::strong_ordering operator<=>(const RowSet& a, const RowSet& b)
{
    if (auto c = a.universe_ <=> b.universe_; c != 0)
        return c;
    // Characteristic vectors compared with row 0 most significant.
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        const auto x = a.words_[w];
        const auto y = b.words_[w];
        if (x == y)
            continue;
        const auto diff = x ^ y;
        const auto low = diff & (~diff + 1);
        return (x & low) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t RowSet::hash() const noexcept
{
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_)
        h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace pdaw

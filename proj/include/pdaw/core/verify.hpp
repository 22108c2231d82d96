#pragma once

#include "pdaw/core/pda_grid.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace pdaw {

/// The placement-delivery axioms. C3 is split into its two clauses.
enum class Axiom {
    C1,   // every column has the same number of stars
    C2,   // every id in [S] occurs
    C3a,  // equal symbols lie in distinct rows and columns
    C3b,  // the 2x2 cross cells of equal symbols are both stars
};

std::string_view to_string(Axiom a) noexcept;

struct Violation {
    Axiom axiom = Axiom::C1;
    /// Offending symbol; kStar for C1.
    Symbol symbol = kStar;
    /// Witness cells, 0-based. C3a: the two equal cells. C3b: the two equal
    /// cells, then the cross cells that are not stars. C1: the star cells of
    /// the deviating column. C2: empty (the id occurs nowhere).
    std::vector<CellRef> cells;
    std::string detail;

    friend bool operator==(const Violation& a, const Violation& b)
    {
        return a.axiom == b.axiom && a.symbol == b.symbol && a.cells == b.cells;
    }
    friend auto operator<=>(const Violation& a, const Violation& b)
    {
        if (auto c = a.axiom <=> b.axiom; c != 0)
            return c;
        if (auto c = a.cells <=> b.cells; c != 0)
            return c;
        return a.symbol <=> b.symbol;
    }
};

struct VerifyResult {
    /// Sorted by axiom, then witness cells (row, then column), then symbol.
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
};

/// Checks C1, C2 (S = largest id present), C3a and C3b. C3 runs over symbol
/// buckets, so the cost is the sum of squared symbol multiplicities.
VerifyResult verify_pda(const PdaGrid& grid);

/// (K, F, Z, S) of a grid with uniform star counts; S is the largest id.
/// Throws ParameterError naming two columns whose star counts differ.
PdaParams pda_params(const PdaGrid& grid);

} // namespace pdaw

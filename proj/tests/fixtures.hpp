#pragma once

// Arrays and placements transcribed from the worked examples, in the PDA
// text format.

#include "pdaw/core/pda_grid.hpp"
#include "pdaw/core/star_pattern.hpp"
#include "pdaw/core/text_format.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fixtures {

// (6,4,2,4)
inline const char* kPda6424 = R"(PDA 4 6
* * * 1 2 3
* 1 2 * * 4
1 * 3 * 4 *
2 3 * 4 * *
)";

// (6,4,1,11)
inline const char* kPda64111 = R"(PDA 4 6
1 2 3 * 7 8
4 5 * 3 9 10
6 * 5 2 11 *
* 6 4 1 * 11
)";

// (4,6,3,4), the MN array for K=4, t=2
inline const char* kMn42 = R"(PDA 6 4
* * 1 2
* 1 * 3
* 2 3 *
1 * * 4
2 * 4 *
3 4 * *
)";

// (6,8,5,5)
inline const char* kPda6855 = R"(PDA 8 6
1 * * * 4 *
2 4 * * * 5
* 1 2 * * *
3 * 4 * * *
* 3 * 2 * *
* * 5 1 3 *
* * * * 2 1
* * * 4 * 3
)";

// bipartite (m=5, a=2, b=1) with the 3-subset labels written as strings.
inline const char* kBipartite521Labels = R"(
*   *   *   *   123 124 125 134 135 145
*   123 124 125 *   *   *   234 235 245
123 *   134 135 *   234 235 *   *   345
124 134 *   145 234 *   245 *   345 *
125 135 145 *   235 245 *   345 *   *
)";

// Partition PDA q=3, m=2, cells labelled by 3-vectors written as digits.
inline const char* kPartition32Labels = R"(
*   212 312 *   122 132 111 *   113
113 *   313 *   223 233 211 212 *
111 211 *   *   321 331 *   312 313
*   223 323 113 *   133 121 122 *
121 *   321 211 *   231 *   222 223
122 222 *   312 *   332 321 *   323
*   231 331 111 121 *   *   132 133
132 *   332 212 222 *   231 *   233
133 233 *   313 323 *   331 332 *
)";

/// Builds a grid from whitespace-separated labels, numbering distinct labels
/// by first appearance in a row-major scan.
inline pdaw::PdaGrid grid_from_labels(const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::vector<pdaw::Symbol>> rows;
    std::map<std::string, pdaw::Symbol> ids;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<pdaw::Symbol> row;
        for (std::string tok; ls >> tok;) {
            if (tok == "*") {
                row.push_back(pdaw::kStar);
                continue;
            }
            auto [it, inserted] = ids.emplace(tok, static_cast<pdaw::Symbol>(ids.size() + 1));
            row.push_back(it->second);
        }
        if (!row.empty())
            rows.push_back(row);
    }
    return pdaw::PdaGrid::from_rows(rows);
}

inline pdaw::PdaGrid grid(const char* text) { return pdaw::read_pda_text(text); }

/// The (6,8,5,5) placement as listed beside its array (A_6 = {6,8,2}), which
/// differs from the array's own column 6.
inline pdaw::StarPattern pda6855_listed_sets()
{
    return pdaw::StarPattern::from_one_based(
        8, {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {5, 6, 8}, {6, 7, 1}, {6, 8, 2}});
}

/// The mn(4,2) placement as listed.
inline pdaw::StarPattern mn42_sets()
{
    return pdaw::StarPattern::from_one_based(6, {{4, 5, 6}, {2, 3, 6}, {1, 3, 5}, {1, 2, 4}});
}

} // namespace fixtures

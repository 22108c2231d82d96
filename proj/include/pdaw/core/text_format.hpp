#pragma once

// Line-oriented text formats, 1-based on the wire.
//
//   PDA F K            PLC F K
//   * * 1 2            * . .
//   ...  (F lines)     ...  (F lines of K tokens from {*, .}; '.' = uncached)
//
// Writers emit single spaces between tokens and a trailing newline on every
// line, so write(read(text)) == text for any text a writer produced.

#include "pdaw/core/pda_grid.hpp"
#include "pdaw/core/star_pattern.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace pdaw {

std::string write_pda_text(const PdaGrid& grid);
/// Symbol ids are kept as written (no relabeling), so C2 gaps stay visible.
PdaGrid read_pda_text(std::string_view text);

std::string write_placement_text(const StarPattern& pattern);
StarPattern read_placement_text(std::string_view text);

/// Either format, chosen by the header keyword.
std::variant<PdaGrid, StarPattern> read_any_text(std::string_view text);

/// The star pattern of either format (a PDA is converted via to_star_pattern).
StarPattern read_pattern_text(std::string_view text);

} // namespace pdaw

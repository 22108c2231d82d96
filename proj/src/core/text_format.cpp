#include "pdaw/core/text_format.hpp"

#include "pdaw/error.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace pdaw {
namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

// Non-blank lines, each split into tokens.
std::vector<std::vector<std::string_view>> tokenize(std::string_view text)
{
    std::vector<std::vector<std::string_view>> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        if (auto toks = split_ws(line); !toks.empty())
            lines.push_back(std::move(toks));
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    return lines;
}

std::size_t parse_count(std::string_view tok, const char* what)
{
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0)
        throw StructuralError(std::string("bad ") + what + " '" + std::string(tok) + "' in header");
    return v;
}

struct Header {
    std::string_view kind;
    std::size_t rows;
    std::size_t cols;
};

Header parse_header(const std::vector<std::vector<std::string_view>>& lines)
{
    if (lines.empty())
        throw StructuralError("empty input");
    const auto& h = lines.front();
    if (h.size() != 3 || (h[0] != "PDA" && h[0] != "PLC"))
        throw StructuralError("expected header 'PDA F K' or 'PLC F K'");
    Header out{h[0], parse_count(h[1], "F"), parse_count(h[2], "K")};
    if (lines.size() != out.rows + 1)
        throw StructuralError("header declares " + std::to_string(out.rows) + " rows, found " +
                              std::to_string(lines.size() - 1));
    for (std::size_t r = 1; r < lines.size(); ++r)
        if (lines[r].size() != out.cols)
            throw StructuralError("row " + std::to_string(r) + " has " + std::to_string(lines[r].size()) +
                                  " tokens, expected " + std::to_string(out.cols));
    return out;
}

Symbol parse_symbol(std::string_view tok, std::size_t row, std::size_t col)
{
    if (tok == "*")
        return kStar;
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v <= 0 || v > 0x7fffffff)
        throw StructuralError("cell (" + std::to_string(row) + "," + std::to_string(col) + ") holds '" +
                              std::string(tok) + "'; expected '*' or a positive integer");
    return static_cast<Symbol>(v);
}

PdaGrid grid_from(const std::vector<std::vector<std::string_view>>& lines, const Header& h)
{
    std::vector<Symbol> cells;
    cells.reserve(h.rows * h.cols);
    for (std::size_t r = 1; r <= h.rows; ++r)
        for (std::size_t c = 0; c < h.cols; ++c)
            cells.push_back(parse_symbol(lines[r][c], r, c + 1));
    return PdaGrid(h.rows, h.cols, std::move(cells));
}

StarPattern pattern_from(const std::vector<std::vector<std::string_view>>& lines, const Header& h)
{
    std::vector<RowSet> sets(h.cols, RowSet(h.rows));
    for (std::size_t r = 1; r <= h.rows; ++r)
        for (std::size_t c = 0; c < h.cols; ++c) {
            const auto tok = lines[r][c];
            if (tok == ".")
                sets[c].set(r - 1);
            else if (tok != "*")
                throw StructuralError("placement cell (" + std::to_string(r) + "," + std::to_string(c + 1) +
                                      ") holds '" + std::string(tok) + "'; expected '*' or '.'");
        }
    return StarPattern(h.rows, std::move(sets));
}

} // namespace

std::string write_pda_text(const PdaGrid& grid)
{
    std::ostringstream os;
    os << "PDA " << grid.rows() << ' ' << grid.cols() << '\n';
    for (std::size_t r = 0; r < grid.rows(); ++r) {
        for (std::size_t c = 0; c < grid.cols(); ++c) {
            if (c != 0)
                os << ' ';
            if (grid.is_star(r, c))
                os << '*';
            else
                os << grid.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

PdaGrid read_pda_text(std::string_view text)
{
    const auto lines = tokenize(text);
    const auto h = parse_header(lines);
    if (h.kind != "PDA")
        throw StructuralError("expected a PDA file, found a placement (PLC) header");
    return grid_from(lines, h);
}

std::string write_placement_text(const StarPattern& pattern)
{
    std::ostringstream os;
    os << "PLC " << pattern.rows() << ' ' << pattern.users() << '\n';
    for (std::size_t r = 0; r < pattern.rows(); ++r) {
        for (std::size_t k = 0; k < pattern.users(); ++k) {
            if (k != 0)
                os << ' ';
            os << (pattern.is_star(r, k) ? '*' : '.');
        }
        os << '\n';
    }
    return os.str();
}

StarPattern read_placement_text(std::string_view text)
{
    const auto lines = tokenize(text);
    const auto h = parse_header(lines);
    if (h.kind != "PLC")
        throw StructuralError("expected a placement (PLC) file, found a PDA header");
    return pattern_from(lines, h);
}

std::variant<PdaGrid, StarPattern> read_any_text(std::string_view text)
{
    const auto lines = tokenize(text);
    const auto h = parse_header(lines);
    if (h.kind == "PDA")
        return grid_from(lines, h);
    return pattern_from(lines, h);
}

StarPattern read_pattern_text(std::string_view text)
{
    auto any = read_any_text(text);
    if (auto* g = std::get_if<PdaGrid>(&any))
        return to_star_pattern(*g);
    return std::get<StarPattern>(std::move(any));
}

} // namespace pdaw

#pragma once

// Rational-valued hexagons and the `hexmagic v1` text format:
//
//   hexmagic v1
//   order: <n>
//   row: v1 v2 ... vk        (2n-1 rows of lengths n, n+1, ..., 2n-1, ..., n)
//
// Values are integers or p/q in lowest terms; '#' starts a comment line.

#include "hexmagic/hexgrid.hpp"
#include "hexmagic/rational.hpp"
#include "hexmagic/text_io.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hexmagic {

using Hexagon = HexArray<Rational>;

inline std::vector<Rational> line_sums(const Hexagon& h) {
    const LineSet lines(h.order());
    std::vector<Rational> sums;
    sums.reserve(lines.size());
    for (const auto& line : lines) {
        Rational s = 0;
        for (auto i : line.cells) s += h[i];
        sums.push_back(std::move(s));
    }
    return sums;
}

inline Hexagon canonical_form(const Hexagon& h) { return canonical_form<Rational>(h); }

inline std::string render(const Hexagon& h) {
    const int n = h.order();
    std::string out = "hexmagic v1\norder: " + std::to_string(n) + "\n";
    std::size_t idx = 0;
    for (int r = -(n - 1); r <= n - 1; ++r) {
        out += "row:";
        for (int k = 0; k < row_length(n, r); ++k) {
            out += ' ';
            out += to_string(h[idx++]);
        }
        out += '\n';
    }
    return out;
}

inline Hexagon parse_hexagon(std::string_view text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty() || lines[0].text != "hexmagic v1")
        throw ParseError("missing 'hexmagic v1' header", lines.empty() ? 1 : lines[0].number);
    if (lines.size() < 2) throw ParseError("missing order line");
    const int n = detail::parse_order(lines[1]);
    const std::size_t rows = static_cast<std::size_t>(2 * n - 1);
    if (lines.size() - 2 != rows)
        throw ParseError("order " + std::to_string(n) + " needs " + std::to_string(rows) + " rows, found " +
                         std::to_string(lines.size() - 2));
    std::vector<Rational> cells;
    cells.reserve(static_cast<std::size_t>(cell_count(n)));
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& line = lines[i + 2];
        const int r = static_cast<int>(i) - (n - 1);
        const auto tokens = detail::split_ws(detail::expect_key(line, "row"));
        if (tokens.size() != static_cast<std::size_t>(row_length(n, r)))
            throw ParseError("row needs " + std::to_string(row_length(n, r)) + " values, found " +
                                 std::to_string(tokens.size()),
                             line.number);
        for (auto tok : tokens) {
            try {
                cells.push_back(parse_rational(tok));
            } catch (const NumberFormatError& e) {
                throw ParseError(e.what(), line.number);
            }
        }
    }
    return Hexagon(n, std::move(cells));
}

inline Hexagon load_hexagon(const std::filesystem::path& path) { return parse_hexagon(read_text_file(path)); }

inline void save_hexagon(const std::filesystem::path& path, const Hexagon& h) { write_text_file(path, render(h)); }

/// Indented picture of the hexagon for terminals.
inline std::string render_ascii(const Hexagon& h) {
    const int n = h.order();
    std::vector<std::string> texts;
    std::size_t width = 1;
    for (const auto& v : h) {
        texts.push_back(to_string(v));
        width = std::max(width, texts.back().size());
    }
    const std::size_t cellw = width + 1;
    std::string out;
    std::size_t idx = 0;
    for (int r = -(n - 1); r <= n - 1; ++r) {
        out.append(static_cast<std::size_t>(std::abs(r)) * cellw / 2, ' ');
        for (int k = 0; k < row_length(n, r); ++k) {
            const auto& t = texts[idx++];
            out.append(cellw - t.size(), ' ');
            out += t;
        }
        out += '\n';
    }
    return out;
}

}  // namespace hexmagic

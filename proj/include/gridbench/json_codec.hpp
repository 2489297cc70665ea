#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"

namespace gridbench {

enum class JsonStyle {
    Compact,  ///< canonical form, no whitespace: [[3,3],[2,1]]
    Spaced,   ///< display form, one space after commas: [[3, 3], [2, 1]]
};

/// Serialize a grid as a nested array of integers, row-major.
inline std::string to_json(const Grid& g, JsonStyle style = JsonStyle::Compact) {
    const char* sep = style == JsonStyle::Compact ? "," : ", ";
    std::string out;
    out.reserve(static_cast<std::size_t>(g.rows()) * g.cols() * 4);
    out += '[';
    for (int r = 0; r < g.rows(); ++r) {
        if (r > 0) out += sep;
        out += '[';
        for (int c = 0; c < g.cols(); ++c) {
            if (c > 0) out += sep;
            out += std::to_string(static_cast<int>(g.at(r, c)));
        }
        out += ']';
    }
    out += ']';
    return out;
}

/// Parse a nested integer array into a grid.
///
/// Accepts arbitrary whitespace between tokens. Rejects ragged rows,
/// trailing commas, values outside 0..kMaxCellValue, and any trailing
/// garbage after the closing bracket.
inline Grid from_json(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() &&
               (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
            ++i;
    };
    auto expect = [&](char ch, const char* what) {
        skip_ws();
        if (i >= text.size() || text[i] != ch) throw ParseError(i, what);
        ++i;
    };
    auto parse_value = [&]() -> long long {
        skip_ws();
        const std::size_t start = i;
        bool neg = false;
        if (i < text.size() && text[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= text.size() || text[i] < '0' || text[i] > '9')
            throw ParseError(start, "expected an integer");
        long long v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000) break;  // bail before overflow, range check below
            ++i;
        }
        return neg ? -v : v;
    };

    expect('[', "expected '['");
    std::vector<std::vector<CellValue>> rows;
    skip_ws();
    if (i < text.size() && text[i] == ']')
        throw ParseError(i, "grid has no rows");
    while (true) {
        expect('[', "expected '[' to open a row");
        std::vector<CellValue> row;
        skip_ws();
        if (i < text.size() && text[i] == ']')
            throw ParseError(i, "row has no cells");
        while (true) {
            const long long v = parse_value();
            if (v < 0 || v > kMaxCellValue) throw ValueOutOfRange(v);
            row.push_back(static_cast<CellValue>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
                if (i < text.size() && text[i] == ']')
                    throw ParseError(i, "trailing comma in row");
                continue;
            }
            expect(']', "expected ',' or ']' in row");
            break;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw RaggedRows(rows.size());
        rows.push_back(std::move(row));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip_ws();
            if (i < text.size() && text[i] == ']')
                throw ParseError(i, "trailing comma after last row");
            continue;
        }
        expect(']', "expected ',' or ']' after a row");
        break;
    }
    skip_ws();
    if (i != text.size()) throw ParseError(i, "trailing characters after grid");

    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.front().size());
    std::vector<CellValue> cells;
    cells.reserve(static_cast<std::size_t>(r) * c);
    for (const auto& row : rows) cells.insert(cells.end(), row.begin(), row.end());
    return Grid(r, c, std::move(cells));
}

}  // namespace gridbench

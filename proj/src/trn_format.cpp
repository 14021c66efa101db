#include "tourpaths/tournament.hpp"

namespace tourpaths {

std::string to_trn(const Tournament& t) {
    const std::size_t n = t.size();
    std::string out = std::to_string(n);
    out += '\n';
    out.reserve(out.size() + n * (n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out += t.has_edge(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

namespace {

// Splits on '\n'. A single final newline terminates the last line; anything
// after it (including a second newline) shows up as an extra line.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto end = text.find('\n');
        if (end == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, end));
        text.remove_prefix(end + 1);
    }
    return lines;
}

}  // namespace

Tournament parse_trn(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ValidationError("ParseError: empty input");

    const std::string_view header = lines.front();
    if (header.empty() || header.size() > 9 || header.front() == '0') {
        throw ValidationError("ParseError: line 1 must be a positive decimal vertex count");
    }
    std::size_t n = 0;
    for (char c : header) {
        if (c < '0' || c > '9') {
            throw ValidationError("ParseError: line 1 must be a positive decimal vertex count");
        }
        n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    if (lines.size() != n + 1) {
        throw ValidationError("ParseError: expected " + std::to_string(n) + " matrix rows, found " +
                              std::to_string(lines.size() - 1));
    }

    std::vector<std::vector<bool>> adjacency(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        const std::string_view row = lines[i + 1];
        if (row.size() != n) {
            throw ValidationError("ParseError: row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] != '0' && row[j] != '1') {
                throw ValidationError("ParseError: row " + std::to_string(i) +
                                      " contains a character other than '0' or '1'");
            }
            adjacency[i][j] = row[j] == '1';
        }
    }
    return Tournament::from_matrix(adjacency);
}

}  // namespace tourpaths

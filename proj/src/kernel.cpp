#include "tourpaths/kernel.hpp"

#include <charconv>

namespace tourpaths {

namespace detail {

std::string index_pair(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace detail

ExactKernel tournament_to_kernel(const Tournament& t) {
    const std::size_t n = t.size();
    std::vector<std::vector<Rational>> raw(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (t.has_edge(i, j)) raw[i][j] = 1;
        }
    }
    return ExactKernel::validate(raw);
}

FloatKernel to_float(const ExactKernel& kernel) {
    const std::size_t m = kernel.blocks();
    std::vector<std::vector<double>> raw(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) raw[i][j] = kernel(i, j).get_d();
    }
    return FloatKernel::validate(raw);
}

namespace {

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

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos == line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

double parse_double(std::string_view token) {
    double value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw ValidationError("BadNumber(" + std::string(token) + ")");
    }
    return value;
}

}  // namespace

StepKernel parse_knl(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ValidationError("ParseError: empty input");
    const std::string_view header = lines.front();
    std::size_t m = 0;
    auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), m);
    if (ec != std::errc() || ptr != header.data() + header.size() || m == 0 || header.front() == '0') {
        throw ValidationError("ParseError: line 1 must be a positive decimal block count");
    }
    if (lines.size() != m + 1) {
        throw ValidationError("ParseError: expected " + std::to_string(m) + " kernel rows, found " +
                              std::to_string(lines.size() - 1));
    }

    std::vector<std::vector<std::string_view>> tokens(m);
    bool exact = false;
    for (std::size_t i = 0; i < m; ++i) {
        tokens[i] = split_tokens(lines[i + 1]);
        if (tokens[i].size() != m) {
            throw ValidationError("ParseError: row " + std::to_string(i) + " has " +
                                  std::to_string(tokens[i].size()) + " entries, expected " +
                                  std::to_string(m));
        }
        for (auto tok : tokens[i]) exact = exact || tok.find('/') != std::string_view::npos;
    }

    if (exact) {
        std::vector<std::vector<Rational>> raw(m, std::vector<Rational>(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) raw[i][j] = parse_rational(tokens[i][j]);
        }
        return ExactKernel::validate(raw);
    }
    std::vector<std::vector<double>> raw(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) raw[i][j] = parse_double(tokens[i][j]);
    }
    return FloatKernel::validate(raw);
}

std::string to_knl(const ExactKernel& kernel) {
    const std::size_t m = kernel.blocks();
    std::string out = std::to_string(m) + "\n";
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (j > 0) out += ' ';
            // Integers are written as "p/1" so the file stays in exact mode.
            Rational v = kernel(i, j);
            out += v.get_num().get_str() + "/" + v.get_den().get_str();
        }
        out += '\n';
    }
    return out;
}

std::string to_knl(const FloatKernel& kernel) {
    const std::size_t m = kernel.blocks();
    std::string out = std::to_string(m) + "\n";
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (j > 0) out += ' ';
            out += format_double(kernel(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace tourpaths

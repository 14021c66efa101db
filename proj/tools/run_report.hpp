#ifndef TOURPATHS_TOOLS_RUN_REPORT_HPP
#define TOURPATHS_TOOLS_RUN_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tourpaths::cli {

// FNV-1a, 64-bit, rendered as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

// Line-oriented report printed on stdout:
//
//   command: <echo>
//   input: <path> fnv1a64=<digest>
//   <key>: <value>
//   check <name>: pass|FAIL
//   status: PASS|FAIL
//
// Wall time goes to stderr so stdout is byte-reproducible.
class RunReport {
public:
    explicit RunReport(std::string command);

    void input(const std::string& path, std::string_view contents);
    void field(const std::string& key, const std::string& value);
    void line(const std::string& text);
    bool check(const std::string& name, bool passed);

    bool passed() const noexcept { return passed_; }
    bool has_checks() const noexcept { return checks_ > 0; }

    void print(std::ostream& out, std::ostream& timing) const;

private:
    std::vector<std::string> lines_;
    bool passed_ = true;
    std::size_t checks_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace tourpaths::cli

#endif  // TOURPATHS_TOOLS_RUN_REPORT_HPP

#include "run_report.hpp"

#include <cstdio>

namespace tourpaths::cli {

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

RunReport::RunReport(std::string command) : start_(std::chrono::steady_clock::now()) {
    lines_.push_back("command: " + std::move(command));
}

void RunReport::input(const std::string& path, std::string_view contents) {
    lines_.push_back("input: " + path + " fnv1a64=" + fnv1a64_hex(contents));
}

void RunReport::field(const std::string& key, const std::string& value) {
    lines_.push_back(key + ": " + value);
}

void RunReport::line(const std::string& text) { lines_.push_back(text); }

bool RunReport::check(const std::string& name, bool passed) {
    ++checks_;
    passed_ = passed_ && passed;
    lines_.push_back("check " + name + ": " + (passed ? "pass" : "FAIL"));
    return passed;
}

void RunReport::print(std::ostream& out, std::ostream& timing) const {
    for (const auto& l : lines_) out << l << '\n';
    if (checks_ > 0) out << "status: " << (passed_ ? "PASS" : "FAIL") << '\n';
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", elapsed.count());
    timing << "wall_time_s: " << buffer << '\n';
}

}  // namespace tourpaths::cli

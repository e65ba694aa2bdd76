#include "msm/format.hpp"

#include <cstdio>

namespace msm {

namespace {

std::string printf_double(const char* fmt, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), fmt, value);
    return std::string(buffer);
}

}  // namespace

std::string format_distance(double value) {
    // The '#' flag keeps trailing zeros; a bare trailing point (possible for
    // 12-digit integers) is dropped.
    std::string out = printf_double("%#.12g", value);
    if (!out.empty() && out.back() == '.') out.pop_back();
    return out;
}

std::string format_exact(double value) { return printf_double("%.17g", value); }

}  // namespace msm

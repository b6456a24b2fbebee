#pragma once
//
// Deterministic number formatting for CSV/JSON exports: shortest decimal
// that round-trips the double exactly (≤ 17 significant digits), locale-free,
// with the signed zero normalized away so "-0" never leaks into output.
//
#include <charconv>
#include <cstdint>
#include <string>

namespace rbf {

inline std::string format_double(double x) {
    if (x == 0.0) return "0";  // covers -0.0 as well
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t n) { return std::to_string(n); }

// same signed-zero normalization for values placed into JSON documents
inline double normalize_zero(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace rbf

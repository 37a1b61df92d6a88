#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "borel/errors.hpp"
#include "borel/scaled.hpp"

namespace borel {

/// Parse a complex literal of the form "a+bi" (optional spaces, either part
/// may be missing: "2", "-1.5e-3", "i", "-i", "2i", "1-2i").
inline Complex parse_complex(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorCode::bad_input, "empty complex literal");

    const bool has_i = s.back() == 'i' || s.back() == 'I';

    // Split point: last '+'/'-' that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] != '+' && s[k] != '-') continue;
        const char prev = s[k - 1];
        if (prev == 'e' || prev == 'E') continue;
        split = k;
        break;
    }

    auto to_double = [&](const std::string& part) -> double {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (end != part.c_str() + part.size())
            fail(ErrorCode::bad_input, "cannot parse complex literal '" + text + "'");
        return v;
    };

    if (has_i) {
        std::string imag_part = s.substr(0, s.size() - 1);
        if (split == std::string::npos) return {0.0, to_double(imag_part)};
        std::string real_part = s.substr(0, split);
        imag_part = s.substr(split, s.size() - 1 - split);
        return {to_double(real_part), to_double(imag_part)};
    }
    if (split != std::string::npos)
        fail(ErrorCode::bad_input, "two real parts in complex literal '" + text + "'");
    return {to_double(s), 0.0};
}

/// 17 significant digits, the round-trip precision of binary64.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string format_complex(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

} // namespace borel

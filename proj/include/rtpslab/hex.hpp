#pragma once

#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rtpslab {

/// Render bytes as lowercase hex pairs separated by single spaces.
inline std::string hex_dump(std::span<const uint8_t> bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 3);
    for (size_t i = 0; i < bytes.size(); ++i) {
        if (i != 0) {
            out.push_back(' ');
        }
        out.push_back(digits[bytes[i] >> 4]);
        out.push_back(digits[bytes[i] & 0xF]);
    }
    return out;
}

/// Parse hex text into bytes. Whitespace (including newlines) separates or
/// joins pairs freely; `#` starts a comment that runs to end of line.
inline std::vector<uint8_t> hex_parse(std::string_view text) {
    std::vector<uint8_t> out;
    int nibble = -1;
    bool in_comment = false;
    for (char c : text) {
        if (in_comment) {
            if (c == '\n') {
                in_comment = false;
            }
            continue;
        }
        if (c == '#') {
            in_comment = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        int value;
        if (c >= '0' && c <= '9') {
            value = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            value = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            value = c - 'A' + 10;
        } else {
            throw std::invalid_argument(std::string("hex_parse: bad character '") + c + "'");
        }
        if (nibble < 0) {
            nibble = value;
        } else {
            out.push_back(static_cast<uint8_t>((nibble << 4) | value));
            nibble = -1;
        }
    }
    if (nibble >= 0) {
        throw std::invalid_argument("hex_parse: odd number of hex digits");
    }
    return out;
}

}  // namespace rtpslab

#include "egress/detail/utf8.hpp"

namespace egress::detail {

std::optional<std::vector<char32_t>> utf8_decode(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
    while (i < text.size()) {
        uint8_t b0 = bytes[i];
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        if ((b0 & 0xe0) == 0xc0) {
            len = 2;
            cp = b0 & 0x1f;
        } else if ((b0 & 0xf0) == 0xe0) {
            len = 3;
            cp = b0 & 0x0f;
        } else if ((b0 & 0xf8) == 0xf0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            return std::nullopt;
        }
        if (i + len > text.size()) return std::nullopt;
        for (int k = 1; k < len; ++k) {
            uint8_t b = bytes[i + k];
            if ((b & 0xc0) != 0x80) return std::nullopt;
            cp = (cp << 6) | (b & 0x3f);
        }
        // Overlong / surrogate / range checks.
        if (len == 2 && cp < 0x80) return std::nullopt;
        if (len == 3 && cp < 0x800) return std::nullopt;
        if (len == 4 && cp < 0x10000) return std::nullopt;
        if (cp >= 0xd800 && cp <= 0xdfff) return std::nullopt;
        if (cp > 0x10ffff) return std::nullopt;
        out.push_back(cp);
        i += len;
    }
    return out;
}

bool utf8_valid(std::string_view text) { return utf8_decode(text).has_value(); }

void utf8_append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(char(cp));
    } else if (cp < 0x800) {
        out.push_back(char(0xc0 | (cp >> 6)));
        out.push_back(char(0x80 | (cp & 0x3f)));
    } else if (cp < 0x10000) {
        out.push_back(char(0xe0 | (cp >> 12)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(char(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(char(0xf0 | (cp >> 18)));
        out.push_back(char(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(char(0x80 | (cp & 0x3f)));
    }
}

std::string utf8_encode(const std::vector<char32_t>& points) {
    std::string out;
    out.reserve(points.size());
    for (char32_t cp : points) utf8_append(out, cp);
    return out;
}

}  // namespace egress::detail

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace egress::detail {

// Strict UTF-8 decode: rejects overlong forms, surrogates, and values
// beyond U+10FFFF. Returns nullopt on the first invalid sequence.
std::optional<std::vector<char32_t>> utf8_decode(std::string_view text);

bool utf8_valid(std::string_view text);

std::string utf8_encode(const std::vector<char32_t>& points);
void utf8_append(std::string& out, char32_t cp);

}  // namespace egress::detail

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace egress::detail {

using Sha256 = std::array<uint8_t, 32>;

Sha256 sha256(std::span<const uint8_t> bytes);
Sha256 sha256(std::string_view text);

std::string hex_encode(std::span<const uint8_t> bytes);
// Returns false on odd length or non-hex characters.
bool hex_decode(std::string_view hex, std::span<uint8_t> out);

}  // namespace egress::detail

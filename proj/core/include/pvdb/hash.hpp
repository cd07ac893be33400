#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace pvdb {

using Sha1Digest = std::array<std::uint8_t, 20>;
using Sha256Digest = std::array<std::uint8_t, 32>;

Sha1Digest sha1(std::string_view bytes);
Sha256Digest sha256(std::string_view bytes);
std::string sha256_hex(std::string_view bytes);

}  // namespace pvdb

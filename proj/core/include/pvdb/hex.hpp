#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pvdb {

std::string to_hex(const std::uint8_t* data, std::size_t n);

/// Decodes exactly 2*n lowercase or uppercase hex chars into out. Returns
/// false on bad length or non-hex input.
bool from_hex(std::string_view hex, std::uint8_t* out, std::size_t n);

}  // namespace pvdb

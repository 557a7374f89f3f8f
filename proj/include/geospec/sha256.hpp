#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace geospec {

// Model descriptors are fingerprinted with SHA-256 so a table file can be
// checked against the surface it was enumerated for.
std::array<std::uint8_t, 32> sha256(const void* data, std::size_t len);
std::array<std::uint8_t, 32> sha256(const std::string& s);
std::string hex_digest(const std::array<std::uint8_t, 32>& d);

}  // namespace geospec

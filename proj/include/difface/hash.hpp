#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace difface {

// Hex-encoded SHA-256. Used for schedule fingerprints and artifact integrity.
std::string sha256_hex(const void* data, size_t len);
std::string sha256_hex(const std::string& data);
std::string sha256_hex(const std::vector<unsigned char>& data);

}  // namespace difface

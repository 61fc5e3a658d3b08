#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace vffkit {

// FNV-1a 64-bit. Used for transcript request keys and output manifests;
// stability across platforms matters here, cryptographic strength does not.
uint64_t fnv1a64(std::string_view bytes);

// Digest rendered as 16 lowercase hex characters.
std::string digest_hex(std::string_view bytes);

// Digest of a file's contents.
std::string digest_file(const std::string& path);

}  // namespace vffkit

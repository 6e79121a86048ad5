#pragma once

// Internal helpers shared by the library sources. Not installed.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace atc::detail {

inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

/// Reads a whole file as bytes. Throws IoError.
std::string read_file_bytes(const std::filesystem::path& path);

/// Validates UTF-8 (throwing EncodingError with `where` = path text) and
/// strips a leading byte-order mark.
std::string decode_utf8_text(std::string bytes, const std::string& where);

}  // namespace atc::detail

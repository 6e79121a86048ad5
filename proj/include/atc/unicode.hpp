#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace atc::uni {

// General-category predicates backed by generated range tables.
bool is_letter(char32_t cp);
bool is_mark(char32_t cp);
bool is_number(char32_t cp);

/// Simple 1:1 lowercase mapping; identity for uncased code points.
char32_t to_lower(char32_t cp);

inline constexpr char32_t kTatweel = 0x0640;

/// Combining mark inside one of the Arabic blocks (tashkeel and friends).
bool is_arabic_diacritic(char32_t cp);

/// Decodes the code point starting at byte `i` and advances `i` past it.
/// Malformed sequences yield U+FFFD and advance by one byte.
char32_t decode_at(std::string_view s, std::size_t& i);

void append_utf8(std::string& out, char32_t cp);

/// Byte offset of the first invalid UTF-8 sequence, or nullopt if valid.
/// Rejects overlong encodings, surrogates and code points past U+10FFFF.
std::optional<std::size_t> find_invalid_utf8(std::string_view s);

std::size_t cp_count(std::string_view s);

}  // namespace atc::uni

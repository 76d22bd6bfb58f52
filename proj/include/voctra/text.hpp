#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace voctra::text {

// Word-initial boundary marker (U+2581 LOWER ONE EIGHTH BLOCK), shared by
// every tokenizer in the toolkit.
inline constexpr std::string_view kBoundaryMarker = "\xE2\x96\x81";
inline constexpr char32_t kBoundaryMarkerCp = 0x2581;

// Strict UTF-8 decode; rejects overlong forms, surrogates, and values
// beyond U+10FFFF. Throws ParseError naming the byte offset.
std::vector<char32_t> decode_utf8(std::string_view s);

bool is_valid_utf8(std::string_view s);

std::string encode_utf8(const std::vector<char32_t>& cps);
void append_utf8(std::string& out, char32_t cp);

// Canonical composition (NFC): full canonical decomposition, canonical
// reordering, then primary-composite recomposition (Hangul handled
// algorithmically).
std::string nfc(std::string_view s);

// Unicode full lowercasing (one codepoint may expand to several).
std::string lowercase(std::string_view s);

// The project-wide text normalization: NFC, lowercase, NFC again (the
// case mapping can reintroduce decomposed sequences).
std::string normalize(std::string_view s);

bool is_whitespace(char32_t cp);

// Maximal non-whitespace runs of an already-normalized string.
std::vector<std::string> split_words(std::string_view s);

// Splits a string into its codepoints, each re-encoded as UTF-8.
std::vector<std::string> codepoint_strings(std::string_view s);

// Number of codepoints (assumes valid UTF-8).
std::size_t codepoint_count(std::string_view s);

}  // namespace voctra::text

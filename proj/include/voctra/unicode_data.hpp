#pragma once

#include <cstddef>

namespace voctra::unicode {

// Tables generated from the Unicode character database by
// scripts/gen_unicode_data.py; sorted by codepoint (kCompositions by pair)
// for binary search.

struct DecompEntry {
    char32_t cp;
    char32_t d0;
    char32_t d1;  // 0 for singleton decompositions
};

struct CombiningEntry {
    char32_t cp;
    unsigned char ccc;
};

struct ComposeEntry {
    char32_t first;
    char32_t second;
    char32_t composed;
};

struct LowerEntry {
    char32_t cp;
    char32_t lower[3];  // unused slots zero
};

extern const DecompEntry kDecompositions[];
extern const std::size_t kDecompositionCount;

extern const CombiningEntry kCombiningClasses[];
extern const std::size_t kCombiningClassCount;

extern const ComposeEntry kCompositions[];
extern const std::size_t kCompositionCount;

extern const LowerEntry kLowercaseMappings[];
extern const std::size_t kLowercaseMappingCount;

extern const char32_t kWhitespace[];
extern const std::size_t kWhitespaceCount;

}  // namespace voctra::unicode

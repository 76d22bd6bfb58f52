#include "voctra/text.hpp"

#include <algorithm>

#include "voctra/errors.hpp"
#include "voctra/unicode_data.hpp"

namespace voctra::text {
namespace {

using namespace voctra::unicode;

// Hangul syllable composition constants (UAX #15 §3.12).
constexpr char32_t kSBase = 0xAC00;
constexpr char32_t kLBase = 0x1100;
constexpr char32_t kVBase = 0x1161;
constexpr char32_t kTBase = 0x11A7;
constexpr int kLCount = 19, kVCount = 21, kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = kLCount * kNCount;

const DecompEntry* find_decomp(char32_t cp) {
    const DecompEntry* end = kDecompositions + kDecompositionCount;
    const DecompEntry* it = std::lower_bound(
        kDecompositions, end, cp,
        [](const DecompEntry& e, char32_t v) { return e.cp < v; });
    return (it != end && it->cp == cp) ? it : nullptr;
}

int combining_class(char32_t cp) {
    const CombiningEntry* end = kCombiningClasses + kCombiningClassCount;
    const CombiningEntry* it = std::lower_bound(
        kCombiningClasses, end, cp,
        [](const CombiningEntry& e, char32_t v) { return e.cp < v; });
    return (it != end && it->cp == cp) ? it->ccc : 0;
}

char32_t compose_pair(char32_t a, char32_t b) {
    // Hangul L+V and LV+T.
    if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount) {
        return kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
    }
    if (a >= kSBase && a < kSBase + kSCount && (a - kSBase) % kTCount == 0 &&
        b > kTBase && b < kTBase + kTCount) {
        return a + (b - kTBase);
    }
    const ComposeEntry* end = kCompositions + kCompositionCount;
    const ComposeEntry* it = std::lower_bound(
        kCompositions, end, std::pair<char32_t, char32_t>{a, b},
        [](const ComposeEntry& e, const std::pair<char32_t, char32_t>& v) {
            return e.first != v.first ? e.first < v.first : e.second < v.second;
        });
    if (it != end && it->first == a && it->second == b) return it->composed;
    return 0;
}

void decompose_into(char32_t cp, std::vector<char32_t>& out) {
    if (cp >= kSBase && cp < kSBase + kSCount) {
        char32_t s = cp - kSBase;
        out.push_back(kLBase + s / kNCount);
        out.push_back(kVBase + (s % kNCount) / kTCount);
        if (s % kTCount != 0) out.push_back(kTBase + s % kTCount);
        return;
    }
    if (const DecompEntry* e = find_decomp(cp)) {
        decompose_into(e->d0, out);
        if (e->d1 != 0) decompose_into(e->d1, out);
        return;
    }
    out.push_back(cp);
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char b0 = static_cast<unsigned char>(s[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw ParseError("invalid UTF-8 byte at offset " + std::to_string(i));
        }
        if (i + len > s.size()) {
            throw ParseError("truncated UTF-8 sequence at offset " + std::to_string(i));
        }
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xC0) != 0x80) {
                throw ParseError("invalid UTF-8 continuation at offset " +
                                 std::to_string(i + k));
            }
            cp = (cp << 6) | (b & 0x3F);
        }
        static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMin[len]) {
            throw ParseError("overlong UTF-8 sequence at offset " + std::to_string(i));
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            throw ParseError("invalid codepoint at offset " + std::to_string(i));
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

bool is_valid_utf8(std::string_view s) {
    try {
        decode_utf8(s);
        return true;
    } catch (const ParseError&) {
        return false;
    }
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

std::string nfc(std::string_view s) {
    std::vector<char32_t> cps = decode_utf8(s);

    // 1. Full canonical decomposition.
    std::vector<char32_t> dec;
    dec.reserve(cps.size());
    for (char32_t cp : cps) decompose_into(cp, dec);

    // 2. Canonical ordering: stable sort runs of nonzero combining class.
    for (std::size_t i = 1; i < dec.size(); ++i) {
        int cc = combining_class(dec[i]);
        if (cc == 0) continue;
        std::size_t j = i;
        while (j > 0 && combining_class(dec[j - 1]) > cc) {
            std::swap(dec[j - 1], dec[j]);
            --j;
        }
    }

    // 3. Composition.
    std::vector<char32_t> out;
    out.reserve(dec.size());
    std::ptrdiff_t last_starter = -1;
    int last_cc = -1;  // ccc of the most recent char after the starter
    for (char32_t c : dec) {
        int cc = combining_class(c);
        if (last_starter >= 0) {
            bool blocked = (out.size() - static_cast<std::size_t>(last_starter) > 1) &&
                           last_cc >= cc;
            if (!blocked) {
                if (char32_t comp = compose_pair(out[last_starter], c)) {
                    out[last_starter] = comp;
                    continue;
                }
            }
        }
        if (cc == 0) {
            last_starter = static_cast<std::ptrdiff_t>(out.size());
            last_cc = -1;
        } else {
            last_cc = cc;
        }
        out.push_back(c);
    }
    return encode_utf8(out);
}

std::string lowercase(std::string_view s) {
    std::vector<char32_t> cps = decode_utf8(s);
    std::string out;
    out.reserve(s.size());
    const LowerEntry* end = kLowercaseMappings + kLowercaseMappingCount;
    for (char32_t cp : cps) {
        const LowerEntry* it = std::lower_bound(
            kLowercaseMappings, end, cp,
            [](const LowerEntry& e, char32_t v) { return e.cp < v; });
        if (it != end && it->cp == cp) {
            for (char32_t l : it->lower) {
                if (l != 0) append_utf8(out, l);
            }
        } else {
            append_utf8(out, cp);
        }
    }
    return out;
}

std::string normalize(std::string_view s) { return nfc(lowercase(nfc(s))); }

bool is_whitespace(char32_t cp) {
    const char32_t* end = unicode::kWhitespace + unicode::kWhitespaceCount;
    return std::binary_search(unicode::kWhitespace, end, cp);
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<char32_t> cps = decode_utf8(s);
    std::vector<std::string> words;
    std::string cur;
    for (char32_t cp : cps) {
        if (is_whitespace(cp)) {
            if (!cur.empty()) {
                words.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            append_utf8(cur, cp);
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    return words;
}

std::vector<std::string> codepoint_strings(std::string_view s) {
    std::vector<char32_t> cps = decode_utf8(s);
    std::vector<std::string> out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        std::string one;
        append_utf8(one, cp);
        out.push_back(std::move(one));
    }
    return out;
}

std::size_t codepoint_count(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
}

}  // namespace voctra::text

#!/usr/bin/env python3
"""Generates src/unicode_data.cpp from Python's unicodedata module.

Emits sorted lookup tables for canonical decomposition, canonical combining
class, primary composition pairs, simple lowercase mapping, and the
whitespace set. Run from the repository root:

    python3 scripts/gen_unicode_data.py

The output file is committed; regeneration is only needed when bumping the
Unicode version.
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE, HANGUL_S_COUNT = 0xAC00, 11172


def is_surrogate(cp):
    return 0xD800 <= cp <= 0xDFFF


def main():
    decomps = []   # (cp, d0, d1)  d1 == 0 for singleton decompositions
    ccc = []       # (cp, class)
    lowers = []    # (cp, l0, l1, l2)  unused slots zero
    spaces = []

    for cp in range(MAX_CP):
        if is_surrogate(cp):
            continue
        ch = chr(cp)

        d = unicodedata.decomposition(ch)
        if d and not d.startswith("<"):
            parts = [int(x, 16) for x in d.split()]
            assert 1 <= len(parts) <= 2, hex(cp)
            decomps.append((cp, parts[0], parts[1] if len(parts) == 2 else 0))

        c = unicodedata.combining(ch)
        if c:
            ccc.append((cp, c))

        low = ch.lower()
        if low != ch:
            lps = [ord(x) for x in low]
            assert 1 <= len(lps) <= 3, hex(cp)
            while len(lps) < 3:
                lps.append(0)
            lowers.append((cp, lps[0], lps[1], lps[2]))

        if ch.isspace():
            spaces.append(cp)

    # Primary composites: pair decompositions that NFC maps back to the
    # composed form (this filters composition exclusions automatically).
    # Hangul LV/LVT composition is algorithmic and handled in code.
    comps = []
    for cp, d0, d1 in decomps:
        if d1 == 0:
            continue
        if HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT:
            continue
        if unicodedata.normalize("NFC", chr(d0) + chr(d1)) == chr(cp):
            comps.append((d0, d1, cp))
    comps.sort()

    out = sys.stdout
    out.write("// Generated by scripts/gen_unicode_data.py -- do not edit.\n")
    out.write("// Unicode %s (Python unicodedata).\n\n" % unicodedata.unidata_version)
    out.write('#include "voctra/unicode_data.hpp"\n\n')
    out.write("#include <algorithm>\n\nnamespace voctra::unicode {\n\n")

    out.write("const DecompEntry kDecompositions[] = {\n")
    for cp, d0, d1 in decomps:
        out.write("    {0x%X, 0x%X, 0x%X},\n" % (cp, d0, d1))
    out.write("};\nconst std::size_t kDecompositionCount = %d;\n\n" % len(decomps))

    out.write("const CombiningEntry kCombiningClasses[] = {\n")
    for cp, c in ccc:
        out.write("    {0x%X, %d},\n" % (cp, c))
    out.write("};\nconst std::size_t kCombiningClassCount = %d;\n\n" % len(ccc))

    out.write("const ComposeEntry kCompositions[] = {\n")
    for a, b, c in comps:
        out.write("    {0x%X, 0x%X, 0x%X},\n" % (a, b, c))
    out.write("};\nconst std::size_t kCompositionCount = %d;\n\n" % len(comps))

    out.write("const LowerEntry kLowercaseMappings[] = {\n")
    for cp, l0, l1, l2 in lowers:
        out.write("    {0x%X, {0x%X, 0x%X, 0x%X}},\n" % (cp, l0, l1, l2))
    out.write("};\nconst std::size_t kLowercaseMappingCount = %d;\n\n" % len(lowers))

    out.write("const char32_t kWhitespace[] = {\n")
    for cp in spaces:
        out.write("    0x%X,\n" % cp)
    out.write("};\nconst std::size_t kWhitespaceCount = %d;\n\n" % len(spaces))

    out.write("}  // namespace voctra::unicode\n")


if __name__ == "__main__":
    main()

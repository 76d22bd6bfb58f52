#!/usr/bin/env python3
"""Generates tests/data/nfc_cases.tsv: columns input, nfc(input),
nfc(nfc(input).lower()). Escapes each string as \\uXXXX sequences so the
fixture stays ASCII. Cases mix composed/decomposed Latin, Greek, Cyrillic,
Hangul, and random combining-mark runs."""

import random
import unicodedata


def esc(s):
    return "".join("\\u{%X}" % ord(c) for c in s)


def main():
    rng = random.Random(20240517)
    cases = [
        "café",
        "café",
        "Å",                      # A + ring -> Å
        "ñ",                      # n + tilde -> ñ
        "Å",                       # angstrom sign -> Å
        "Ω",                       # ohm sign -> Ω
        "ṩ",                # dot-below + dot-above ordering
        "ṩ",
        "q̣̇",
        "ḍ̇",
        "ą́",
        "ǖ",
        "가",                 # Hangul L+V -> syllable
        "각",           # Hangul L+V+T
        "각",                 # LV syllable + T
        "Ё",                 # Cyrillic E + diaeresis
        "Ϊ́",           # Greek iota diaeresis tonos
        "ά",                       # alpha with oxia (singleton chain)
        "İ",
        "İ",                       # dotted capital I (lowercases to i + dot)
        "STRASSE ß",
        "ﬁle",                     # fi ligature (compat: NFC keeps it)
        "x̨́ý̨",
        "",
        "plain ascii 123",
    ]
    marks = ["̀", "́", "̄", "̆", "̈", "̣",
             "̧", "̨", "̊", "̱"]
    bases = "aceginosuyAEIOUzNZαεеи"
    for _ in range(200):
        n = rng.randint(1, 8)
        s = []
        for _ in range(n):
            s.append(rng.choice(bases))
            for _ in range(rng.randint(0, 3)):
                s.append(rng.choice(marks))
        cases.append("".join(s))
    # random precomposed characters fed back through decomposition
    pre = [chr(c) for c in range(0xC0, 0x250) if unicodedata.decomposition(chr(c))]
    for _ in range(60):
        s = "".join(rng.choice(pre) for _ in range(rng.randint(1, 6)))
        cases.append(unicodedata.normalize("NFD", s))
        cases.append(s)

    with open("tests/data/nfc_cases.tsv", "w") as f:
        for c in cases:
            nfc = unicodedata.normalize("NFC", c)
            norm = unicodedata.normalize("NFC", nfc.lower())
            f.write("%s\t%s\t%s\n" % (esc(c), esc(nfc), esc(norm)))


if __name__ == "__main__":
    main()

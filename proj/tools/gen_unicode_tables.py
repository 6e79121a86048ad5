#!/usr/bin/env python3
"""Regenerate src/unicode_tables.inc from the Python unicodedata database.

Emits code point ranges for the general categories the tokenizer needs
(letters, marks, numbers) plus a simple 1:1 lowercase map. Multi-codepoint
lowercase expansions are dropped so the mapping stays idempotent.
"""

import sys
import unicodedata

MAX_CP = 0x110000

def category_ranges(prefixes):
    ranges = []
    start = None
    prev = None
    for cp in range(MAX_CP):
        cat = unicodedata.category(chr(cp))
        if cat[0] in prefixes and cat != "Cs":
            if start is None:
                start = cp
            prev = cp
        else:
            if start is not None:
                ranges.append((start, prev))
                start = None
    if start is not None:
        ranges.append((start, prev))
    return ranges


def lower_map():
    pairs = {}
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        l = c.lower()
        if l != c and len(l) == 1:
            pairs[cp] = ord(l)
    # U+0130 has a two-codepoint full lowering; its simple lowering is plain i.
    pairs[0x0130] = 0x0069
    # The map must be idempotent: lowering a lowered char is a no-op.
    for cp, lo in pairs.items():
        assert pairs.get(lo, lo) == lo, f"non-idempotent case map at U+{cp:04X}"
    return sorted(pairs.items())


def emit(out):
    out.write("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
              % unicodedata.unidata_version)
    out.write("// clang-format off\n")
    for name, prefixes in (("kLetterRanges", "L"),
                           ("kMarkRanges", "M"),
                           ("kNumberRanges", "N")):
        ranges = category_ranges(prefixes)
        out.write("inline constexpr CpRange %s[] = {\n" % name)
        for i in range(0, len(ranges), 6):
            row = ranges[i:i + 6]
            out.write("    " + " ".join("{0x%X,0x%X}," % r for r in row) + "\n")
        out.write("};\n")
    pairs = lower_map()
    out.write("inline constexpr CaseMap kLowerMap[] = {\n")
    for i in range(0, len(pairs), 6):
        row = pairs[i:i + 6]
        out.write("    " + " ".join("{0x%X,0x%X}," % p for p in row) + "\n")
    out.write("};\n")
    out.write("// clang-format on\n")


if __name__ == "__main__":
    path = sys.argv[1] if len(sys.argv) > 1 else "src/unicode_tables.inc"
    with open(path, "w", encoding="utf-8") as f:
        emit(f)
    print("wrote", path)

#!/usr/bin/env python3
"""Regenerate src/stopwords_data.inc from data/stopwords_ar.txt."""

import sys

src = sys.argv[1] if len(sys.argv) > 1 else "data/stopwords_ar.txt"
dst = sys.argv[2] if len(sys.argv) > 2 else "src/stopwords_data.inc"

words = []
with open(src, encoding="utf-8") as f:
    for line in f:
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line)

with open(dst, "w", encoding="utf-8") as f:
    f.write("// Generated by tools/gen_stopwords_inc.py from data/stopwords_ar.txt."
            " Do not edit.\n")
    f.write("inline constexpr const char* kBuiltinStopWords[%d] = {\n" % len(words))
    for i in range(0, len(words), 8):
        row = words[i:i + 8]
        f.write("    " + " ".join('"%s",' % w for w in row) + "\n")
    f.write("};\n")
print("wrote %s (%d words)" % (dst, len(words)))

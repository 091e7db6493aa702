#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from Python's bundled Unicode database.

The tokenizer needs four tables:
  * word_ranges   - codepoint intervals of categories L*, M*, N*
  * mark_ranges   - codepoint intervals of category Mn (strippable marks)
  * casefold      - codepoints whose full case folding differs from identity
  * strip_decomp  - codepoints whose canonical decomposition contains at
                    least one Mn mark, mapped to that decomposition with
                    the marks removed

Run from the repository root:  python3 tools/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges(predicate):
    out = []
    start = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = predicate(chr(cp))
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def gen():
    word = ranges(lambda c: unicodedata.category(c)[0] in "LMN")
    marks = ranges(lambda c: unicodedata.category(c) == "Mn")

    casefold = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        f = c.casefold()
        if f != c:
            casefold.append((cp, [ord(x) for x in f]))

    strip = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        if unicodedata.category(c) == "Mn":
            continue
        d = unicodedata.normalize("NFD", c)
        if len(d) == 1 and d == c:
            continue
        kept = [ord(x) for x in d if unicodedata.category(x) != "Mn"]
        if len(d) > len(kept):
            strip.append((cp, kept))

    pool = []
    def pooled(seq):
        off = len(pool)
        pool.extend(seq)
        return off, len(seq)

    cf_entries = [(cp, *pooled(seq)) for cp, seq in casefold]
    st_entries = [(cp, *pooled(seq)) for cp, seq in strip]

    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py from UCD %s. Do not edit.\n\n"
      % unicodedata.unidata_version)
    w("namespace {\n\n")
    w("struct CpRange { char32_t lo; char32_t hi; };\n")
    w("struct CpMap { char32_t cp; std::uint32_t offset; std::uint32_t len; };\n\n")

    def dump_ranges(name, rs):
        w("constexpr CpRange %s[] = {\n" % name)
        for i in range(0, len(rs), 6):
            row = ", ".join("{0x%X, 0x%X}" % r for r in rs[i:i + 6])
            w("    %s,\n" % row)
        w("};\n\n")

    def dump_maps(name, entries):
        w("constexpr CpMap %s[] = {\n" % name)
        for i in range(0, len(entries), 5):
            row = ", ".join("{0x%X, %d, %d}" % e for e in entries[i:i + 5])
            w("    %s,\n" % row)
        w("};\n\n")

    dump_ranges("kWordRanges", word)
    dump_ranges("kMarkRanges", marks)
    dump_maps("kCaseFold", cf_entries)
    dump_maps("kStripDecomp", st_entries)

    w("constexpr char32_t kFoldPool[] = {\n")
    for i in range(0, len(pool), 10):
        row = ", ".join("0x%X" % v for v in pool[i:i + 10])
        w("    %s,\n" % row)
    w("};\n\n")
    w("}  // namespace\n")


if __name__ == "__main__":
    gen()

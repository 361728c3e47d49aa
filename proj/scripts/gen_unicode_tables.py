#!/usr/bin/env python3
"""Regenerates include/anspar/unicode_tables.hpp from the Python unicodedata
module. Run from the repository root:

    python3 scripts/gen_unicode_tables.py > include/anspar/unicode_tables.hpp
"""
import sys
import unicodedata

MAX_CP = 0x110000

# Coarse classes used by the tokenizer. Keep in sync with unicode.hpp.
CLS_OTHER, CLS_LETTER, CLS_MARK, CLS_NUMBER, CLS_PUNCT, CLS_SYMBOL, CLS_SEP, CLS_FORMAT = range(8)

CAT_TO_CLS = {
    'L': CLS_LETTER, 'M': CLS_MARK, 'N': CLS_NUMBER,
    'P': CLS_PUNCT, 'S': CLS_SYMBOL, 'Z': CLS_SEP,
}


def coarse_class(cp):
    cat = unicodedata.category(chr(cp))
    if cat == 'Cf':
        return CLS_FORMAT
    return CAT_TO_CLS.get(cat[0], CLS_OTHER)


def emit_category_ranges(out):
    ranges = []
    start = 0
    cur = coarse_class(0)
    for cp in range(1, MAX_CP):
        c = coarse_class(cp)
        if c != cur:
            if cur != CLS_OTHER:
                ranges.append((start, cp - 1, cur))
            start = cp
            cur = c
    if cur != CLS_OTHER:
        ranges.append((start, MAX_CP - 1, cur))
    out.write("struct CategoryRange { char32_t first; char32_t last; unsigned char cls; };\n")
    out.write("inline constexpr CategoryRange kCategoryRanges[] = {\n")
    for a, b, c in ranges:
        out.write("  {0x%X,0x%X,%d},\n" % (a, b, c))
    out.write("};\n\n")
    return len(ranges)


def emit_lower(out):
    pairs = []
    for cp in range(MAX_CP):
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            pairs.append((cp, ord(lo)))
    out.write("struct LowerPair { char32_t cp; char32_t lower; };\n")
    out.write("inline constexpr LowerPair kLowerPairs[] = {\n")
    for a, b in pairs:
        out.write("  {0x%X,0x%X},\n" % (a, b))
    out.write("};\n\n")
    return len(pairs)


def emit_decomp(out):
    # Full canonical decomposition (NFD) per codepoint; Hangul syllables are
    # handled algorithmically in C++ and skipped here.
    pool = []
    entries = []
    for cp in range(MAX_CP):
        if 0xAC00 <= cp <= 0xD7A3:
            continue
        if unicodedata.category(chr(cp)) in ('Cs',):
            continue
        nfd = unicodedata.normalize('NFD', chr(cp))
        if len(nfd) == 1 and ord(nfd) == cp:
            continue
        seq = [ord(ch) for ch in nfd]
        entries.append((cp, len(pool), len(seq)))
        pool.extend(seq)
    out.write("struct DecompEntry { char32_t cp; unsigned int offset; unsigned char len; };\n")
    out.write("inline constexpr DecompEntry kDecompEntries[] = {\n")
    for cp, off, ln in entries:
        out.write("  {0x%X,%d,%d},\n" % (cp, off, ln))
    out.write("};\n")
    out.write("inline constexpr char32_t kDecompPool[] = {\n")
    for i in range(0, len(pool), 12):
        out.write("  " + ",".join("0x%X" % c for c in pool[i:i + 12]) + ",\n")
    out.write("};\n\n")
    return len(entries), len(pool)


def emit_ccc(out):
    entries = [(cp, unicodedata.combining(chr(cp)))
               for cp in range(MAX_CP) if unicodedata.combining(chr(cp))]
    out.write("struct CccEntry { char32_t cp; unsigned char ccc; };\n")
    out.write("inline constexpr CccEntry kCccEntries[] = {\n")
    for cp, c in entries:
        out.write("  {0x%X,%d},\n" % (cp, c))
    out.write("};\n\n")
    return len(entries)


def emit_compositions(out):
    # Primary composites: pairs (a, b) whose NFC re-composes to a single
    # codepoint. Testing via normalize() bakes in the composition exclusions.
    pairs = []
    for cp in range(MAX_CP):
        if 0xAC00 <= cp <= 0xD7A3:
            continue
        if unicodedata.category(chr(cp)) in ('Cs',):
            continue
        d = unicodedata.decomposition(chr(cp))
        if not d or d.startswith('<'):
            continue
        parts = d.split()
        if len(parts) != 2:
            continue
        a, b = int(parts[0], 16), int(parts[1], 16)
        if unicodedata.normalize('NFC', chr(a) + chr(b)) == chr(cp):
            pairs.append((a, b, cp))
    pairs.sort()
    out.write("struct CompPair { char32_t a; char32_t b; char32_t composed; };\n")
    out.write("inline constexpr CompPair kCompPairs[] = {\n")
    for a, b, c in pairs:
        out.write("  {0x%X,0x%X,0x%X},\n" % (a, b, c))
    out.write("};\n\n")
    return len(pairs)


def main():
    out = sys.stdout
    out.write("// Generated by scripts/gen_unicode_tables.py (unicodedata %s). Do not edit.\n"
              % unicodedata.unidata_version)
    out.write("#pragma once\n\nnamespace anspar::uni {\n\n")
    nr = emit_category_ranges(out)
    nl = emit_lower(out)
    nd, np = emit_decomp(out)
    nc = emit_ccc(out)
    ncp = emit_compositions(out)
    out.write("}  // namespace anspar::uni\n")
    sys.stderr.write("ranges=%d lower=%d decomp=%d pool=%d ccc=%d comp=%d\n"
                     % (nr, nl, nd, np, nc, ncp))


if __name__ == '__main__':
    main()

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "anspar/unicode_tables.hpp"

namespace anspar::uni {

enum class Cls : unsigned char {
  Other = 0,
  Letter = 1,
  Mark = 2,
  Number = 3,
  Punct = 4,
  Symbol = 5,
  Separator = 6,
  Format = 7,
};

inline Cls classify(char32_t cp) {
  auto it = std::upper_bound(std::begin(kCategoryRanges), std::end(kCategoryRanges), cp,
                             [](char32_t v, const CategoryRange& r) { return v < r.first; });
  if (it == std::begin(kCategoryRanges)) return Cls::Other;
  --it;
  if (cp >= it->first && cp <= it->last) return static_cast<Cls>(it->cls);
  return Cls::Other;
}

inline char32_t to_lower(char32_t cp) {
  auto it = std::lower_bound(std::begin(kLowerPairs), std::end(kLowerPairs), cp,
                             [](const LowerPair& p, char32_t v) { return p.cp < v; });
  if (it != std::end(kLowerPairs) && it->cp == cp) return it->lower;
  return cp;
}

inline unsigned char combining_class(char32_t cp) {
  auto it = std::lower_bound(std::begin(kCccEntries), std::end(kCccEntries), cp,
                             [](const CccEntry& e, char32_t v) { return e.cp < v; });
  if (it != std::end(kCccEntries) && it->cp == cp) return it->ccc;
  return 0;
}

// Variation selectors ride along with emoji and carry no text content.
inline bool is_variation_selector(char32_t cp) {
  return (cp >= 0xFE00 && cp <= 0xFE0F) || (cp >= 0xE0100 && cp <= 0xE01EF);
}

// --- UTF-8 <-> codepoints ---------------------------------------------------

// Decodes UTF-8; invalid bytes become U+FFFD.
inline std::vector<char32_t> utf8_decode(const std::string& s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    int extra = 0;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      cp = b & 0x1F;
      extra = 1;
    } else if ((b & 0xF0) == 0xE0) {
      cp = b & 0x0F;
      extra = 2;
    } else if ((b & 0xF8) == 0xF0) {
      cp = b & 0x07;
      extra = 3;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (extra > 0 && i + extra >= n) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      unsigned char c = static_cast<unsigned char>(s[i + k]);
      if ((c & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (c & 0x3F);
    }
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF) ||
        (extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
        (extra == 3 && cp < 0x10000)) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

inline void utf8_append(std::string& s, char32_t cp) {
  if (cp < 0x80) {
    s.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    s.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    s.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    s.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string s;
  s.reserve(cps.size());
  for (char32_t cp : cps) utf8_append(s, cp);
  return s;
}

// --- NFC normalization ------------------------------------------------------

namespace detail {

constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

inline void decompose_cp(char32_t cp, std::vector<char32_t>& out) {
  if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
    char32_t s = cp - kHangulSBase;
    out.push_back(kHangulLBase + s / kHangulNCount);
    out.push_back(kHangulVBase + (s % kHangulNCount) / kHangulTCount);
    char32_t t = s % kHangulTCount;
    if (t) out.push_back(kHangulTBase + t);
    return;
  }
  auto it = std::lower_bound(std::begin(kDecompEntries), std::end(kDecompEntries), cp,
                             [](const DecompEntry& e, char32_t v) { return e.cp < v; });
  if (it != std::end(kDecompEntries) && it->cp == cp) {
    for (unsigned k = 0; k < it->len; ++k) out.push_back(kDecompPool[it->offset + k]);
    return;
  }
  out.push_back(cp);
}

inline bool compose_pair(char32_t a, char32_t b, char32_t& out) {
  // Hangul L+V and LV+T.
  if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount && b >= kHangulVBase &&
      b < kHangulVBase + kHangulVCount) {
    out = kHangulSBase + ((a - kHangulLBase) * kHangulVCount + (b - kHangulVBase)) * kHangulTCount;
    return true;
  }
  if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
      (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
      b < kHangulTBase + kHangulTCount) {
    out = a + (b - kHangulTBase);
    return true;
  }
  auto it = std::lower_bound(
      std::begin(kCompPairs), std::end(kCompPairs), std::pair<char32_t, char32_t>(a, b),
      [](const CompPair& p, const std::pair<char32_t, char32_t>& v) {
        return p.a != v.first ? p.a < v.first : p.b < v.second;
      });
  if (it != std::end(kCompPairs) && it->a == a && it->b == b) {
    out = it->composed;
    return true;
  }
  return false;
}

}  // namespace detail

inline std::vector<char32_t> nfc(const std::vector<char32_t>& in) {
  // Canonical decomposition.
  std::vector<char32_t> buf;
  buf.reserve(in.size() + 4);
  for (char32_t cp : in) detail::decompose_cp(cp, buf);

  // Canonical ordering: stable sort of nonzero-ccc runs.
  for (size_t i = 1; i < buf.size(); ++i) {
    unsigned char cc = combining_class(buf[i]);
    if (cc == 0) continue;
    size_t j = i;
    while (j > 0) {
      unsigned char prev = combining_class(buf[j - 1]);
      if (prev == 0 || prev <= cc) break;
      std::swap(buf[j - 1], buf[j]);
      --j;
    }
  }

  // Composition.
  if (buf.empty()) return buf;
  std::vector<char32_t> out;
  out.reserve(buf.size());
  long starter = -1;
  int last_ccc = -1;  // ccc of the last combining char seen since starter; -1 = none
  for (char32_t cp : buf) {
    unsigned char cc = combining_class(cp);
    if (starter >= 0) {
      char32_t composed;
      bool blocked = (last_ccc >= 0 && last_ccc >= static_cast<int>(cc));
      if (!blocked && detail::compose_pair(out[starter], cp, composed)) {
        out[starter] = composed;
        continue;
      }
    }
    if (cc == 0) {
      starter = static_cast<long>(out.size());
      last_ccc = -1;
    } else {
      last_ccc = cc;
    }
    out.push_back(cp);
  }
  return out;
}

inline std::string nfc(const std::string& utf8) { return utf8_encode(nfc(utf8_decode(utf8))); }

}  // namespace anspar::uni

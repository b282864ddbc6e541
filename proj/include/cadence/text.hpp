// Core data model: immutable 1-indexed byte texts, cadences, occurrence
// indexing, definition-level validators, and the 2-cadence detector.
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cadence {

using Pos = std::int64_t;  // 1-based position in a text
using Len = std::int64_t;

/// Immutable byte string addressed by positions 1..n. The alphabet is the
/// full byte range 0..255; no character-set interpretation is applied.
class Text {
 public:
  Text() = default;
  explicit Text(std::string bytes) : bytes_(std::move(bytes)) {}

  Len length() const { return static_cast<Len>(bytes_.size()); }
  bool empty() const { return bytes_.empty(); }

  // Unchecked 1-based access; callers guarantee 1 <= i <= length().
  std::uint8_t operator[](Pos i) const {
    return static_cast<std::uint8_t>(bytes_[static_cast<std::size_t>(i - 1)]);
  }

  std::uint8_t at(Pos i) const {
    if (i < 1 || i > length())
      throw std::out_of_range("Text::at: position " + std::to_string(i) +
                              " outside 1.." + std::to_string(length()));
    return (*this)[i];
  }

  const std::string& bytes() const { return bytes_; }

 private:
  std::string bytes_;
};

/// A cadence (i, d) of order k: i <= d <= n and every in-range position
/// congruent to i modulo d carries the same symbol as position i.
struct Cadence {
  Pos i = 0;
  Pos d = 0;
  std::int64_t k = 0;  // floor((n - i) / d) + 1
  std::uint8_t ch = 0;

  friend bool operator==(const Cadence&, const Cadence&) = default;
};

/// Order of the arithmetic progression {i, i+d, i+2d, ...} inside [1, n].
inline std::int64_t cadence_order(Len n, Pos i, Pos d) {
  if (i < 1 || i > d || d > n)
    throw std::invalid_argument("cadence_order: need 1 <= i <= d <= n");
  return (n - i) / d + 1;
}

/// True iff (i, d) is a cadence of `text`. Because i <= d, position i is the
/// least positive position congruent to i mod d, so scanning i, i+d, i+2d,...
/// covers every in-range member of the residue class.
inline bool is_cadence(const Text& text, Pos i, Pos d) {
  const Len n = text.length();
  if (i < 1 || i > d || d > n)
    throw std::invalid_argument("is_cadence: need 1 <= i <= d <= n");
  const std::uint8_t c = text[i];
  for (Pos j = i + d; j <= n; j += d)
    if (text[j] != c) return false;
  return true;
}

inline Cadence make_cadence(const Text& text, Pos i, Pos d) {
  return Cadence{i, d, cadence_order(text.length(), i, d), text[i]};
}

/// True iff i is an anchored cadence: every multiple of i inside [1, n]
/// carries the symbol at position i.
inline bool is_anchored(const Text& text, Pos i) {
  const Len n = text.length();
  if (i < 1 || i > n)
    throw std::invalid_argument("is_anchored: need 1 <= i <= n");
  const std::uint8_t c = text[i];
  for (Pos j = 2 * i; j <= n; j += i)
    if (text[j] != c) return false;
  return true;
}

/// Sorted position lists per byte value; n_a = count(a).
class OccurrenceIndex {
 public:
  const std::vector<Pos>& positions(std::uint8_t a) const { return lists_[a]; }
  Len count(std::uint8_t a) const {
    return static_cast<Len>(lists_[a].size());
  }

  /// Byte values with at least one occurrence, ascending.
  std::vector<std::uint8_t> occurring_symbols() const {
    std::vector<std::uint8_t> out;
    for (int a = 0; a < 256; ++a)
      if (!lists_[a].empty()) out.push_back(static_cast<std::uint8_t>(a));
    return out;
  }

  friend OccurrenceIndex index_occurrences(const Text&);

 private:
  std::array<std::vector<Pos>, 256> lists_;
};

inline OccurrenceIndex index_occurrences(const Text& text) {
  OccurrenceIndex idx;
  const Len n = text.length();
  for (Pos i = 1; i <= n; ++i) idx.lists_[text[i]].push_back(i);
  return idx;
}

struct TwoCadenceEntry {
  std::uint8_t ch = 0;
  bool found = false;
  Pos leftmost = 0;   // witness pair when found; the cadence is
  Pos rightmost = 0;  // (leftmost, rightmost - leftmost)
};

struct TwoCadenceReport {
  std::vector<TwoCadenceEntry> entries;  // occurring symbols, byte-ascending

  bool any() const {
    for (const auto& e : entries)
      if (e.found) return true;
    return false;
  }
  const TwoCadenceEntry* entry(std::uint8_t a) const {
    for (const auto& e : entries)
      if (e.ch == a) return &e;
    return nullptr;
  }
};

/// A symbol has a 2-cadence iff its leftmost occurrence i and rightmost
/// occurrence j satisfy 2i <= j and 2j - i > n.
inline TwoCadenceReport detect_2cadence(const Text& text) {
  const Len n = text.length();
  const OccurrenceIndex idx = index_occurrences(text);
  TwoCadenceReport report;
  for (std::uint8_t a : idx.occurring_symbols()) {
    const auto& pos = idx.positions(a);
    TwoCadenceEntry e;
    e.ch = a;
    const Pos i = pos.front(), j = pos.back();
    if (2 * i <= j && 2 * j - i > n) {
      e.found = true;
      e.leftmost = i;
      e.rightmost = j;
    }
    report.entries.push_back(e);
  }
  return report;
}

/// Unbiased draw from [0, k) via rejection; deterministic given the
/// generator state.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("uniform_below: k must be positive");
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % k;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % k;
}

/// Uniform i.i.d. text of length n. Alphabets up to 26 use letters starting
/// at 'A'; larger alphabets use raw byte values 0..alphabet_size-1.
inline Text random_text(Len n, int alphabet_size, std::mt19937_64& rng) {
  if (n < 0 || alphabet_size < 1 || alphabet_size > 256)
    throw std::invalid_argument("random_text: bad length or alphabet size");
  std::string s(static_cast<std::size_t>(n), '\0');
  const bool letters = alphabet_size <= 26;
  for (auto& c : s) {
    const auto v = uniform_below(rng, static_cast<std::uint64_t>(alphabet_size));
    c = static_cast<char>(letters ? 'A' + v : v);
  }
  return Text(std::move(s));
}

}  // namespace cadence

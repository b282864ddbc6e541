// Brute-force ground truth: quadratic cadence enumeration, direct anchored
// scan, equally spaced same-symbol triples, and brute 3SUM. Every fast path
// in the library is tested against these.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cadence/text.hpp"

namespace cadence {

/// Equally spaced occurrences x < j < z of one symbol (x + z = 2j). Unlike a
/// 3-cadence, no begin/end constraint is imposed.
struct TripleAP {
  Pos x = 0;
  Pos j = 0;
  Pos z = 0;

  friend bool operator==(const TripleAP&, const TripleAP&) = default;
};

/// Integer weight multiset with a declared range: every weight lies in
/// [-2*bound, 2*bound].
struct WeightSet {
  std::vector<std::int64_t> weights;
  std::int64_t bound = 0;

  WeightSet() = default;
  WeightSet(std::vector<std::int64_t> w, std::int64_t b)
      : weights(std::move(w)), bound(b) {
    for (auto v : weights)
      if (v < -2 * bound || v > 2 * bound)
        throw std::invalid_argument(
            "WeightSet: weight outside [-2*bound, 2*bound]");
  }

  static WeightSet from_weights(std::vector<std::int64_t> w) {
    std::int64_t m = 0;
    for (auto v : w) m = std::max(m, v < 0 ? -v : v);
    return WeightSet(std::move(w), (m + 1) / 2);
  }
};

/// All cadences (i, d) of order >= k_min, ascending by (i, d). Worst case is
/// quadratic in the text length; that bound is optimal for enumeration.
inline std::vector<Cadence> enumerate_cadences(const Text& text,
                                               std::int64_t k_min) {
  const Len n = text.length();
  std::vector<Cadence> out;
  for (Pos i = 1; i <= n; ++i) {
    for (Pos d = i; d <= n; ++d) {
      const std::int64_t k = (n - i) / d + 1;
      if (k < k_min) break;  // k is nonincreasing in d
      const std::uint8_t c = text[i];
      bool ok = true;
      for (Pos j = i + d; j <= n; j += d)
        if (text[j] != c) {
          ok = false;
          break;
        }
      if (ok) out.push_back(Cadence{i, d, k, c});
    }
  }
  return out;
}

/// Every anchored cadence, found by scanning multiples of each position.
inline std::vector<Pos> brute_anchored(const Text& text) {
  const Len n = text.length();
  std::vector<Pos> out;
  for (Pos i = 1; i <= n; ++i)
    if (is_anchored(text, i)) out.push_back(i);
  return out;
}

/// First cadence of order exactly k in (i, d) order, optionally restricted
/// to cadences whose repeated symbol is `symbol`.
inline std::optional<Cadence> brute_k_cadence(
    const Text& text, std::int64_t k,
    std::optional<std::uint8_t> symbol = std::nullopt) {
  const Len n = text.length();
  if (k < 1) throw std::invalid_argument("brute_k_cadence: k must be >= 1");
  for (Pos i = 1; i <= n; ++i) {
    if (symbol && text[i] != *symbol) continue;
    for (Pos d = i; d <= n; ++d) {
      if ((n - i) / d + 1 != k) continue;
      if (is_cadence(text, i, d)) return make_cadence(text, i, d);
    }
  }
  return std::nullopt;
}

/// All equally spaced triples of occurrences of `a`, ascending by (x, z).
/// Quadratic in the occurrence count of `a`.
inline std::vector<TripleAP> brute_ap_triples(const Text& text,
                                              std::uint8_t a) {
  const OccurrenceIndex idx = index_occurrences(text);
  const auto& pos = idx.positions(a);
  std::vector<TripleAP> out;
  for (std::size_t p = 0; p < pos.size(); ++p) {
    for (std::size_t q = p + 1; q < pos.size(); ++q) {
      const Pos x = pos[p], z = pos[q];
      if ((x + z) % 2 != 0) continue;
      const Pos j = (x + z) / 2;  // x < j < z since x < z
      if (text[j] == a) out.push_back(TripleAP{x, j, z});
    }
  }
  return out;
}

/// Three pairwise-distinct set elements summing to zero, if any. The weight
/// multiset is collapsed to its distinct values first (set semantics).
inline std::optional<std::array<std::int64_t, 3>> brute_3sum_zero(
    const WeightSet& w) {
  std::vector<std::int64_t> v = w.weights;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (std::size_t p = 0; p < v.size(); ++p) {
    for (std::size_t q = p + 1; q < v.size(); ++q) {
      const std::int64_t need = -(v[p] + v[q]);
      if (need == v[p] || need == v[q]) continue;
      if (std::binary_search(v.begin(), v.end(), need))
        return std::array<std::int64_t, 3>{v[p], v[q], need};
    }
  }
  return std::nullopt;
}

}  // namespace cadence

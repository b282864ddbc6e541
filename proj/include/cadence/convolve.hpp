// Exact nonnegative-integer convolution of 0/1 indicator vectors, computed
// with a number-theoretic transform so every pair count comes out as an
// exact integer. Logical indices may be negative; the offset field maps the
// stored array onto logical coordinates.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cadence/text.hpp"

namespace cadence {

// Allocation guard for a single convolution; keeps desk-scale memory bounded.
inline constexpr std::int64_t kConvolutionSpanLimit = std::int64_t{1} << 24;

namespace detail {

// 15 * 2^27 + 1, prime, primitive root 31; supports transforms up to 2^27.
// Pair counts never exceed the span guard 2^24 < kModulus, so results taken
// mod kModulus are the true integer counts.
inline constexpr std::uint64_t kModulus = 2013265921;
inline constexpr std::uint64_t kPrimitiveRoot = 31;
inline constexpr std::uint64_t kBarrettFactor =
    std::uint64_t(-1) / kModulus;  // floor(2^64 / kModulus)

// Barrett reduction of x < 2^63; the approximate quotient is off by at most
// one, so a single correction loop suffices.
inline std::uint64_t reduce_mod(std::uint64_t x) {
  const std::uint64_t q = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(x) * kBarrettFactor) >> 64);
  std::uint64_t r = x - q * kModulus;
  while (r >= kModulus) r -= kModulus;
  return r;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return reduce_mod(a * b);  // a, b < kModulus < 2^31, so a*b fits in 64 bits
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kModulus ? s - kModulus : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kModulus - b;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  base %= kModulus;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return r;
}

// In-place iterative transform; a.size() must be a power of two <= 2^27.
inline void ntt(std::vector<std::uint64_t>& a, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t wlen = pow_mod(kPrimitiveRoot, (kModulus - 1) / len);
    if (invert) wlen = pow_mod(wlen, kModulus - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t w = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::uint64_t u = a[i + j];
        const std::uint64_t v = mul_mod(a[i + j + len / 2], w);
        a[i + j] = add_mod(u, v);
        a[i + j + len / 2] = sub_mod(u, v);
        w = mul_mod(w, wlen);
      }
    }
  }
  if (invert) {
    const std::uint64_t n_inv = pow_mod(n, kModulus - 2);
    for (auto& x : a) x = mul_mod(x, n_inv);
  }
}

}  // namespace detail

/// 0/1 vector over a contiguous logical index range; entry t lives at
/// logical index offset + t.
struct IndicatorVector {
  std::int64_t offset = 0;
  std::vector<std::uint8_t> bits;

  std::int64_t span() const { return static_cast<std::int64_t>(bits.size()); }
  std::int64_t lo() const { return offset; }
  std::int64_t hi() const { return offset + span() - 1; }
  bool empty() const { return bits.empty(); }

  bool test(std::int64_t idx) const {
    return idx >= lo() && idx <= hi() &&
           bits[static_cast<std::size_t>(idx - offset)] != 0;
  }

  /// Dense vector spanning min..max of the given logical positions.
  static IndicatorVector from_positions(std::span<const std::int64_t> pos) {
    IndicatorVector v;
    if (pos.empty()) return v;
    const auto [mn, mx] = std::minmax_element(pos.begin(), pos.end());
    v.offset = *mn;
    v.bits.assign(static_cast<std::size_t>(*mx - *mn + 1), 0);
    for (auto p : pos) v.bits[static_cast<std::size_t>(p - v.offset)] = 1;
    return v;
  }

  /// Restriction to logical range [from, to]; may be empty.
  IndicatorVector slice(std::int64_t from, std::int64_t to) const {
    IndicatorVector out;
    const std::int64_t a = std::max(from, lo());
    const std::int64_t b = std::min(to, hi());
    if (a > b) return out;
    out.offset = a;
    out.bits.assign(bits.begin() + (a - offset), bits.begin() + (b - offset + 1));
    return out;
  }
};

/// Exact pair counts per sum; counts[t] counts pairs (p, q), one index from
/// each input, with p + q = offset + t.
struct SumCounts {
  std::int64_t offset = 0;
  std::vector<std::int64_t> counts;

  std::int64_t span() const {
    return static_cast<std::int64_t>(counts.size());
  }
  std::int64_t lo() const { return offset; }
  std::int64_t hi() const { return offset + span() - 1; }
  bool empty() const { return counts.empty(); }

  std::int64_t at(std::int64_t sum) const {
    if (sum < lo() || sum > hi()) return 0;
    return counts[static_cast<std::size_t>(sum - offset)];
  }
};

namespace detail {

struct Support {
  std::int64_t first = 0;  // index into bits of first/last set entry
  std::int64_t last = -1;
  bool empty() const { return last < first; }
};

inline Support find_support(const IndicatorVector& v) {
  Support s;
  std::int64_t i = 0, n = v.span();
  while (i < n && v.bits[static_cast<std::size_t>(i)] == 0) ++i;
  if (i == n) return s;
  std::int64_t j = n - 1;
  while (v.bits[static_cast<std::size_t>(j)] == 0) --j;
  s.first = i;
  s.last = j;
  return s;
}

// Convolution of the supported subranges, written into out at the proper
// offset. Small supports take a direct double loop; larger ones go through
// the transform.
inline void accumulate_counts(const IndicatorVector& x, Support sx,
                              const IndicatorVector& y, Support sy,
                              SumCounts& out) {
  const std::int64_t wx = sx.last - sx.first + 1;
  const std::int64_t wy = sy.last - sy.first + 1;
  const std::int64_t base = (x.offset + sx.first) + (y.offset + sy.first);
  if (wx * wy <= (std::int64_t{1} << 16)) {
    for (std::int64_t p = 0; p < wx; ++p) {
      if (!x.bits[static_cast<std::size_t>(sx.first + p)]) continue;
      for (std::int64_t q = 0; q < wy; ++q) {
        if (!y.bits[static_cast<std::size_t>(sy.first + q)]) continue;
        out.counts[static_cast<std::size_t>(base + p + q - out.offset)] += 1;
      }
    }
    return;
  }
  std::size_t size = 1;
  while (size < static_cast<std::size_t>(wx + wy - 1)) size <<= 1;
  std::vector<std::uint64_t> fa(size, 0), fb(size, 0);
  for (std::int64_t p = 0; p < wx; ++p)
    fa[static_cast<std::size_t>(p)] =
        x.bits[static_cast<std::size_t>(sx.first + p)];
  for (std::int64_t q = 0; q < wy; ++q)
    fb[static_cast<std::size_t>(q)] =
        y.bits[static_cast<std::size_t>(sy.first + q)];
  ntt(fa, false);
  ntt(fb, false);
  for (std::size_t t = 0; t < size; ++t) fa[t] = mul_mod(fa[t], fb[t]);
  ntt(fa, true);
  for (std::int64_t t = 0; t < wx + wy - 1; ++t)
    out.counts[static_cast<std::size_t>(base + t - out.offset)] +=
        static_cast<std::int64_t>(fa[static_cast<std::size_t>(t)]);
}

}  // namespace detail

/// Exact pair counts for every achievable sum. Result offset is
/// x.offset + y.offset and the counts array spans all sums the index ranges
/// can form; unachievable entries are zero.
inline SumCounts convolve_counts(const IndicatorVector& x,
                                 const IndicatorVector& y) {
  const std::int64_t sx = x.span(), sy = y.span();
  if (sx + sy > kConvolutionSpanLimit)
    throw std::length_error("convolve_counts: combined span exceeds guard");
  SumCounts out;
  out.offset = x.offset + y.offset;
  if (sx == 0 || sy == 0) return out;
  out.counts.assign(static_cast<std::size_t>(sx + sy - 1), 0);
  const auto supx = detail::find_support(x);
  const auto supy = detail::find_support(y);
  if (supx.empty() || supy.empty()) return out;
  detail::accumulate_counts(x, supx, y, supy, out);
  return out;
}

/// Pair counts restricted to sums in [sum_lo, sum_hi]. The second vector is
/// clipped to the index range that can reach the window, so the cost is
/// proportional to x's span plus the window width, up to log factors. An
/// empty effective window yields an empty SumCounts.
inline SumCounts convolve_window(const IndicatorVector& x,
                                 const IndicatorVector& y, std::int64_t sum_lo,
                                 std::int64_t sum_hi) {
  if (sum_lo > sum_hi)
    throw std::invalid_argument("convolve_window: sum_lo > sum_hi");
  if (sum_hi - sum_lo + 1 > kConvolutionSpanLimit)
    throw std::length_error("convolve_window: window exceeds span guard");
  SumCounts out;
  out.offset = sum_lo;
  const auto supx = detail::find_support(x);
  if (supx.empty()) return out;
  const std::int64_t x_lo = x.offset + supx.first;
  const std::int64_t x_hi = x.offset + supx.last;
  const IndicatorVector yc = y.slice(sum_lo - x_hi, sum_hi - x_lo);
  const auto supy = detail::find_support(yc);
  if (supy.empty()) return out;
  const IndicatorVector xs = x.slice(x_lo, x_hi);
  const SumCounts full = convolve_counts(xs, yc);
  const std::int64_t a = std::max(sum_lo, full.lo());
  const std::int64_t b = std::min(sum_hi, full.hi());
  if (a > b) return out;
  out.counts.assign(static_cast<std::size_t>(sum_hi - sum_lo + 1), 0);
  for (std::int64_t s = a; s <= b; ++s)
    out.counts[static_cast<std::size_t>(s - sum_lo)] = full.at(s);
  return out;
}

}  // namespace cadence

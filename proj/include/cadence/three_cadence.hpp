// Order-3 cadence machinery: the thirds partition, the weight-set reduction
// to convolution-solvable 3SUM, a staircase-corrected exact counter, a
// quadratic pair scanner, the hybrid per-symbol dispatcher, and the reverse
// encoder from weight sets back to texts.
//
// Two detector modes ship deliberately. `thirds` detects equally spaced
// occurrence triples straddling the thirds of the text — a necessary but not
// sufficient condition for an order-3 cadence (see the "000100100100"
// regression pair in the tests). `exact` applies the per-middle cutoffs
// L(j), U(j) that encode the begin/end constraints of the definition and is
// the default everywhere.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cadence/convolve.hpp"
#include "cadence/oracle.hpp"
#include "cadence/text.hpp"

namespace cadence {

inline constexpr std::int64_t kDefaultLeafWidth = 32;

/// Occurrence positions of one symbol split at n/3 and 2n/3. A genuine
/// order-3 cadence places its three terms one in each part.
struct ThirdsPartition {
  std::uint8_t symbol = 0;
  Len n = 0;
  std::vector<Pos> l1;  // 3j <= n
  std::vector<Pos> l2;  // n < 3j <= 2n
  std::vector<Pos> l3;  // 3j > 2n
};

inline ThirdsPartition thirds(const Text& text, std::uint8_t a) {
  const Len n = text.length();
  ThirdsPartition p;
  p.symbol = a;
  p.n = n;
  for (Pos j = 1; j <= n; ++j) {
    if (text[j] != a) continue;
    if (3 * j <= n)
      p.l1.push_back(j);
    else if (3 * j <= 2 * n)
      p.l2.push_back(j);
    else
      p.l3.push_back(j);
  }
  return p;
}

/// The multiset L1 ∪ L3 ∪ {-2j : j ∈ L2}; a zero-sum triple drawing one
/// element from each class certifies an equally spaced occurrence triple.
struct ReductionWeights {
  std::vector<std::int64_t> weights;
  Len n = 0;

  WeightSet as_weight_set() const { return WeightSet(weights, n); }
};

inline ReductionWeights build_weights(const ThirdsPartition& p) {
  ReductionWeights w;
  w.n = p.n;
  w.weights.reserve(p.l1.size() + p.l3.size() + p.l2.size());
  for (Pos j : p.l1) {
    if (3 * j > p.n) throw std::invalid_argument("build_weights: bad L1");
    w.weights.push_back(j);
  }
  for (Pos j : p.l3) {
    if (3 * j <= 2 * p.n || j > p.n)
      throw std::invalid_argument("build_weights: bad L3");
    w.weights.push_back(j);
  }
  for (Pos j : p.l2) {
    if (3 * j <= p.n || 3 * j > 2 * p.n)
      throw std::invalid_argument("build_weights: bad L2");
    w.weights.push_back(-2 * j);
  }
  return w;
}

/// Counter block carried through every detection path; instrumentation is
/// part of the contract, not debug state.
struct DetectCounters {
  std::int64_t convolutions = 0;
  std::int64_t pairs_examined = 0;
};

struct ThreeSumOutcome {
  bool found = false;
  std::int64_t witness_sum = 0;  // a + c = -b when found
};

/// Zero-sum triple test for three range-disjoint classes: small positives A,
/// negatives B, large positives C, as produced by build_weights. Computes
/// pair counts of A + C by convolution and probes each -b.
inline ThreeSumOutcome threesum_disjoint(
    const std::vector<std::int64_t>& small_pos,
    const std::vector<std::int64_t>& negatives,
    const std::vector<std::int64_t>& large_pos,
    DetectCounters* counters = nullptr) {
  for (auto v : small_pos)
    if (v <= 0) throw std::invalid_argument("threesum_disjoint: A not positive");
  for (auto v : negatives)
    if (v >= 0) throw std::invalid_argument("threesum_disjoint: B not negative");
  for (auto v : large_pos)
    if (v <= 0) throw std::invalid_argument("threesum_disjoint: C not positive");
  ThreeSumOutcome out;
  if (small_pos.empty() || negatives.empty() || large_pos.empty()) return out;
  const auto a_max = *std::max_element(small_pos.begin(), small_pos.end());
  const auto c_min = *std::min_element(large_pos.begin(), large_pos.end());
  if (a_max >= c_min)
    throw std::invalid_argument("threesum_disjoint: A and C ranges overlap");
  const auto xa = IndicatorVector::from_positions(small_pos);
  const auto xc = IndicatorVector::from_positions(large_pos);
  const SumCounts counts = convolve_counts(xa, xc);
  if (counters) counters->convolutions += 1;
  for (auto b : negatives) {
    if (counts.at(-b) > 0) {
      out.found = true;
      out.witness_sum = -b;
      return out;
    }
  }
  return out;
}

enum class Detect3Mode : std::uint8_t { thirds, exact, quadratic, brute };

/// Which engine actually ran for a symbol inside the hybrid dispatcher.
enum class Detect3Path : std::uint8_t { none, quadratic, convolution, brute };

struct SymbolVerdict {
  std::uint8_t ch = 0;
  bool found = false;
  Detect3Path path = Detect3Path::none;
  std::optional<Cadence> witness;       // exact / quadratic / brute routes
  std::vector<Pos> middles;             // thirds routes: candidate middles
  std::optional<std::int64_t> count;    // exact-count route only
};

struct ThreeCadenceReport {
  Detect3Mode mode = Detect3Mode::exact;
  std::vector<SymbolVerdict> verdicts;  // occurring symbols, byte-ascending
  DetectCounters counters;

  bool any() const {
    for (const auto& v : verdicts)
      if (v.found) return true;
    return false;
  }
  const SymbolVerdict* verdict(std::uint8_t a) const {
    for (const auto& v : verdicts)
      if (v.ch == a) return &v;
    return nullptr;
  }
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace detail

/// Per-middle cutoffs making the triple (x, j, 2j-x) of equal symbols an
/// order-3 cadence exactly when lower(j) <= x <= upper(j). Derivation from
/// the definition: i <= d gives 2x <= j; order > 2 needs 2j - x <= n, so
/// x >= 2j - n; order < 4 needs 3j - 2x > n, so 2x < 3j - n. Both cutoffs
/// are nondecreasing in j, which the exact counter exploits.
struct Staircase {
  Len n = 0;

  Pos lower(Pos j) const { return std::max<Pos>(1, 2 * j - n); }
  Pos upper(Pos j) const {
    return std::min(detail::floor_div(j, 2), detail::floor_div(3 * j - n - 1, 2));
  }
  bool admits(Pos j, Pos x) const { return lower(j) <= x && x <= upper(j); }
};

namespace detail {

inline std::vector<Pos> occurrences_of(const Text& text, std::uint8_t a) {
  std::vector<Pos> occ;
  for (Pos i = 1, n = text.length(); i <= n; ++i)
    if (text[i] == a) occ.push_back(i);
  return occ;
}

// Divide-and-conquer exact counter over the sorted middle list. A node
// (lo, hi, x_lo) owes every pair (x, j) with j = middles[t], lo <= t <= hi,
// and x_lo <= x <= upper(j); the lower cutoff costs nothing because the
// z-side indicator only covers [1, n], which is equivalent to x >= 2j - n.
// The node counts x in [x_lo, upper(middles[mid])] against all middles at
// index >= mid in one windowed convolution (sound since upper() is
// nondecreasing), then recurses left with x_lo intact and right with the
// band above upper(middles[mid]). Cost O(n log^2 n): per recursion level the
// x-bands are pairwise disjoint and the sum windows cover disjoint middle
// ranges.
struct ExactCounter {
  const Text& text;
  std::uint8_t symbol;
  Staircase stairs;
  std::vector<Pos> occ;
  std::vector<Pos> middles;  // occurrences with a nonempty x-window
  IndicatorVector occ_ind;   // occurrence indicator over [1, n]
  std::int64_t leaf_width;
  DetectCounters* counters;

  std::int64_t count = 0;
  std::optional<Cadence> witness;

  ExactCounter(const Text& t, std::uint8_t a, std::int64_t leaf,
               DetectCounters* c)
      : text(t), symbol(a), stairs{t.length()}, leaf_width(leaf), counters(c) {
    occ = occurrences_of(text, symbol);
    for (Pos j : occ)
      if (stairs.upper(j) >= stairs.lower(j)) middles.push_back(j);
    occ_ind.offset = 1;
    occ_ind.bits.assign(static_cast<std::size_t>(text.length()), 0);
    for (Pos p : occ) occ_ind.bits[static_cast<std::size_t>(p - 1)] = 1;
  }

  void run() {
    if (!middles.empty())
      solve(0, static_cast<std::int64_t>(middles.size()) - 1, 1);
  }

  void solve(std::int64_t lo, std::int64_t hi, Pos x_lo) {
    if (lo > hi) return;
    if (x_lo > stairs.upper(middles[static_cast<std::size_t>(hi)])) return;
    if (hi - lo + 1 <= leaf_width) {
      leaf(lo, hi, x_lo);
      return;
    }
    const std::int64_t mid = lo + (hi - lo) / 2;
    const Pos jm = middles[static_cast<std::size_t>(mid)];
    const Pos band_hi = stairs.upper(jm);
    if (x_lo <= band_hi) node(mid, hi, x_lo, band_hi);
    solve(lo, mid - 1, x_lo);
    solve(mid + 1, hi, std::max(x_lo, band_hi + 1));
  }

  // One windowed convolution covering x in [x_lo, band_hi] for every middle
  // at index mid..hi.
  void node(std::int64_t mid, std::int64_t hi, Pos x_lo, Pos band_hi) {
    const IndicatorVector xs = occ_ind.slice(x_lo, band_hi);
    const Pos sum_lo = 2 * middles[static_cast<std::size_t>(mid)];
    const Pos sum_hi = 2 * middles[static_cast<std::size_t>(hi)];
    const SumCounts counts = convolve_window(xs, occ_ind, sum_lo, sum_hi);
    if (counters) counters->convolutions += 1;
    for (std::int64_t t = mid; t <= hi; ++t) {
      const Pos j = middles[static_cast<std::size_t>(t)];
      const std::int64_t c = counts.at(2 * j);
      count += c;
      if (c > 0 && !witness) recover_witness(j, x_lo, band_hi);
    }
  }

  // Runs at most once per full count; finds some x behind a positive
  // windowed count by direct scan of the band.
  void recover_witness(Pos j, Pos x_lo, Pos x_hi) {
    const Len n = text.length();
    for (Pos x = std::max(x_lo, stairs.lower(j)); x <= x_hi; ++x) {
      const Pos z = 2 * j - x;
      if (z > n) continue;
      if (occ_ind.test(x) && occ_ind.test(z)) {
        witness = make_cadence(text, x, j - x);
        return;
      }
    }
  }

  void leaf(std::int64_t lo, std::int64_t hi, Pos x_lo) {
    for (std::int64_t t = lo; t <= hi; ++t) {
      const Pos j = middles[static_cast<std::size_t>(t)];
      const Pos a = std::max(x_lo, stairs.lower(j));
      const Pos b = stairs.upper(j);
      if (a > b) continue;
      auto it = std::lower_bound(occ.begin(), occ.end(), a);
      for (; it != occ.end() && *it <= b; ++it) {
        const Pos x = *it;
        const Pos z = 2 * j - x;  // z <= n because x >= lower(j) >= 2j - n
        if (counters) counters->pairs_examined += 1;
        if (text[z] == symbol) {
          count += 1;
          if (!witness) witness = make_cadence(text, x, j - x);
        }
      }
    }
  }
};

}  // namespace detail

struct ExactCount {
  std::int64_t count = 0;
  std::optional<Cadence> witness;
};

/// Exact number of order-3 cadences (i, d) with S[i] = a, plus one witness
/// when the count is positive. Near-linearithmic via windowed convolutions.
inline ExactCount count_3cadences_exact(const Text& text, std::uint8_t a,
                                        std::int64_t leaf_width = kDefaultLeafWidth,
                                        DetectCounters* counters = nullptr) {
  if (leaf_width < 1)
    throw std::invalid_argument("count_3cadences_exact: leaf width must be >= 1");
  detail::ExactCounter engine(text, a, leaf_width, counters);
  engine.run();
  return ExactCount{engine.count, std::move(engine.witness)};
}

/// First order-3 cadence of symbol a by direct occurrence-pair scan with the
/// staircase cutoffs; cost quadratic in the occurrence count.
inline std::optional<Cadence> quadratic_3cadence(
    const Text& text, std::uint8_t a, DetectCounters* counters = nullptr) {
  const std::vector<Pos> occ = detail::occurrences_of(text, a);
  const Staircase stairs{text.length()};
  for (std::size_t p = 0; p < occ.size(); ++p) {
    for (std::size_t q = p + 1; q < occ.size(); ++q) {
      const Pos x = occ[p], z = occ[q];
      if (counters) counters->pairs_examined += 1;
      if ((x + z) % 2 != 0) continue;
      const Pos j = (x + z) / 2;
      if (text[j] != a) continue;
      if (stairs.admits(j, x)) return make_cadence(text, x, j - x);
    }
  }
  return std::nullopt;
}

namespace detail {

struct ThirdsScan {
  bool found = false;
  std::vector<Pos> middles;
};

// Convolution route: pair counts of L1 + L3 probed at 2j for each j in L2.
inline ThirdsScan thirds_convolution(const ThirdsPartition& p,
                                     DetectCounters* counters) {
  ThirdsScan out;
  if (p.l1.empty() || p.l2.empty() || p.l3.empty()) return out;
  const auto x1 = IndicatorVector::from_positions(p.l1);
  const auto x3 = IndicatorVector::from_positions(p.l3);
  const SumCounts counts = convolve_counts(x1, x3);
  if (counters) counters->convolutions += 1;
  for (Pos j : p.l2)
    if (counts.at(2 * j) > 0) out.middles.push_back(j);
  out.found = !out.middles.empty();
  return out;
}

// Pair-scan route with identical verdicts and middles; preferred when the
// occurrence count is small enough that quadratic work beats a transform.
inline ThirdsScan thirds_pair_scan(const ThirdsPartition& p,
                                   DetectCounters* counters) {
  ThirdsScan out;
  if (p.l1.empty() || p.l2.empty() || p.l3.empty()) return out;
  std::vector<char> hit(p.l2.size(), 0);
  for (Pos x : p.l1) {
    for (Pos z : p.l3) {
      if (counters) counters->pairs_examined += 1;
      if ((x + z) % 2 != 0) continue;
      const Pos j = (x + z) / 2;
      const auto it = std::lower_bound(p.l2.begin(), p.l2.end(), j);
      if (it != p.l2.end() && *it == j)
        hit[static_cast<std::size_t>(it - p.l2.begin())] = 1;
    }
  }
  for (std::size_t t = 0; t < p.l2.size(); ++t)
    if (hit[t]) out.middles.push_back(p.l2[t]);
  out.found = !out.middles.empty();
  return out;
}

}  // namespace detail

/// The literal thirds reduction for one symbol: reports whether some equally
/// spaced occurrence triple straddles the thirds, with the candidate middle
/// positions. Never misses a true order-3 cadence but may report boundary
/// triples that violate the i <= d or order constraints.
inline ThreeCadenceReport detect_3sub_thirds(const Text& text, std::uint8_t a) {
  ThreeCadenceReport report;
  report.mode = Detect3Mode::thirds;
  SymbolVerdict v;
  v.ch = a;
  v.path = Detect3Path::convolution;
  auto scan = detail::thirds_convolution(thirds(text, a), &report.counters);
  v.found = scan.found;
  v.middles = std::move(scan.middles);
  report.verdicts.push_back(std::move(v));
  return report;
}

/// Per-symbol hybrid dispatcher. Symbols with n_a^2 <= n log2 n take the
/// quadratic engine for their mode; denser symbols take the convolution
/// engine (thirds reduction or exact counter). `quadratic` and `brute`
/// force a single engine for every symbol.
inline ThreeCadenceReport detect_3cadence(
    const Text& text, Detect3Mode mode = Detect3Mode::exact,
    std::int64_t leaf_width = kDefaultLeafWidth) {
  const Len n = text.length();
  const double budget = n > 1 ? static_cast<double>(n) * std::log2(n) : 0.0;
  const OccurrenceIndex idx = index_occurrences(text);
  ThreeCadenceReport report;
  report.mode = mode;
  for (std::uint8_t a : idx.occurring_symbols()) {
    const double quad_cost = static_cast<double>(idx.count(a)) *
                             static_cast<double>(idx.count(a));
    const bool small = quad_cost <= budget;
    SymbolVerdict v;
    v.ch = a;
    switch (mode) {
      case Detect3Mode::thirds: {
        const ThirdsPartition p = thirds(text, a);
        auto scan = small ? detail::thirds_pair_scan(p, &report.counters)
                          : detail::thirds_convolution(p, &report.counters);
        v.path = small ? Detect3Path::quadratic : Detect3Path::convolution;
        v.found = scan.found;
        v.middles = std::move(scan.middles);
        break;
      }
      case Detect3Mode::exact: {
        if (small) {
          v.path = Detect3Path::quadratic;
          v.witness = quadratic_3cadence(text, a, &report.counters);
          v.found = v.witness.has_value();
        } else {
          v.path = Detect3Path::convolution;
          ExactCount ec =
              count_3cadences_exact(text, a, leaf_width, &report.counters);
          v.found = ec.count > 0;
          v.count = ec.count;
          v.witness = std::move(ec.witness);
        }
        break;
      }
      case Detect3Mode::quadratic: {
        v.path = Detect3Path::quadratic;
        v.witness = quadratic_3cadence(text, a, &report.counters);
        v.found = v.witness.has_value();
        break;
      }
      case Detect3Mode::brute: {
        v.path = Detect3Path::brute;
        v.witness = brute_k_cadence(text, 3, a);
        v.found = v.witness.has_value();
        break;
      }
    }
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

/// Reverse reduction: a weight set becomes a text of length 2R over
/// {'0','1','2'} with '1' at 2w for positive w and at |w| for negative w;
/// unmarked positions are '0' up to R and '2' beyond. Weights are treated
/// as a set; positions claimed by two different weights are reported as
/// collisions ('1' is idempotent, so construction proceeds).
struct EncodedWeights {
  Text text;
  std::vector<Pos> collisions;
};

inline EncodedWeights encode_weights_to_text(const WeightSet& w) {
  std::vector<std::int64_t> values = w.weights;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::int64_t radius = 0;
  for (auto v : values) {
    if (v == 0)
      throw std::invalid_argument("encode_weights_to_text: zero weight");
    radius = std::max(radius, v < 0 ? -v : v);
  }
  EncodedWeights out;
  if (values.empty()) return out;
  std::string s(static_cast<std::size_t>(2 * radius), '2');
  for (std::int64_t p = 1; p <= radius; ++p)
    s[static_cast<std::size_t>(p - 1)] = '0';
  std::vector<std::int64_t> marks(static_cast<std::size_t>(2 * radius) + 1, 0);
  for (auto v : values) {
    const std::int64_t p = v > 0 ? 2 * v : -v;
    marks[static_cast<std::size_t>(p)] += 1;
    s[static_cast<std::size_t>(p - 1)] = '1';
  }
  for (std::int64_t p = 1; p <= 2 * radius; ++p)
    if (marks[static_cast<std::size_t>(p)] > 1) out.collisions.push_back(p);
  out.text = Text(std::move(s));
  return out;
}

/// Checks the restricted equivalence behind the reverse reduction: the
/// weight set has a (+, +, -) zero-sum triple of distinct elements iff the
/// encoded text has an all-'1' arithmetic progression whose endpoints are
/// doubled positive weights and whose middle is a negated negative weight.
inline bool verify_encoding(const WeightSet& w, const Text& t) {
  std::vector<std::int64_t> positives, neg_abs;
  {
    std::vector<std::int64_t> values = w.weights;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto v : values) {
      if (v == 0)
        throw std::invalid_argument("verify_encoding: zero weight");
      (v > 0 ? positives : neg_abs).push_back(v > 0 ? v : -v);
    }
    std::sort(neg_abs.begin(), neg_abs.end());
  }
  bool zero_triple = false;
  for (std::size_t p = 0; p < positives.size() && !zero_triple; ++p)
    for (std::size_t q = p + 1; q < positives.size() && !zero_triple; ++q)
      zero_triple = std::binary_search(neg_abs.begin(), neg_abs.end(),
                                       positives[p] + positives[q]);
  bool marked_ap = false;
  for (const TripleAP& tr : brute_ap_triples(t, '1')) {
    if (tr.x % 2 != 0 || tr.z % 2 != 0) continue;
    if (!std::binary_search(positives.begin(), positives.end(), tr.x / 2))
      continue;
    if (!std::binary_search(positives.begin(), positives.end(), tr.z / 2))
      continue;
    if (!std::binary_search(neg_abs.begin(), neg_abs.end(), tr.j)) continue;
    marked_ap = true;
    break;
  }
  return zero_triple == marked_ap;
}

}  // namespace cadence

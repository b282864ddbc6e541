#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "cadence/anchored.hpp"
#include "cadence/oracle.hpp"

using namespace cadence;

namespace {

const Text kAla("ALABARALAALABARDA");

bool is_prime_slow(Pos v) {
  if (v < 2) return false;
  for (Pos d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// sum over j <= n of the number of distinct primes dividing j
std::int64_t omega_sum(Len n) {
  std::vector<std::int64_t> omega(static_cast<std::size_t>(n) + 1, 0);
  for (Pos p = 2; p <= n; ++p)
    if (omega[static_cast<std::size_t>(p)] == 0)  // p prime
      for (Pos j = p; j <= n; j += p) omega[static_cast<std::size_t>(j)] += 1;
  std::int64_t total = 0;
  for (Pos j = 1; j <= n; ++j) total += omega[static_cast<std::size_t>(j)];
  return total;
}

std::vector<Text> corpus(std::uint64_t seed, int count, Len max_n,
                         int max_sigma) {
  std::mt19937_64 rng(seed);
  std::vector<Text> out;
  for (int iter = 0; iter < count; ++iter) {
    const Len n = static_cast<Len>(uniform_below(rng, max_n + 1));
    const int sigma = 1 + static_cast<int>(uniform_below(rng, max_sigma));
    out.push_back(random_text(n, sigma, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("sieve_primes frozen examples") {
  CHECK(sieve_primes(11).primes == std::vector<Pos>{2, 3, 5, 7, 11});
  CHECK(sieve_primes(1).primes.empty());
  CHECK(sieve_primes(0).primes.empty());
  CHECK(sieve_primes(2).primes == std::vector<Pos>{2});
  CHECK(sieve_primes(30).primes.size() == 10);
  CHECK_THROWS_AS(sieve_primes(-1), std::invalid_argument);
}

TEST_CASE("sieve_primes matches trial division") {
  const PrimeTable table = sieve_primes(2000);
  std::vector<Pos> slow;
  for (Pos v = 2; v <= 2000; ++v)
    if (is_prime_slow(v)) slow.push_back(v);
  CHECK(table.primes == slow);
  CHECK(sieve_primes(10'000).primes.size() == 1229);
}

TEST_CASE("anchored_cadences frozen examples") {
  const AnchoredResult ala = anchored_cadences(kAla);
  CHECK(ala.anchored_set ==
        std::vector<Pos>{7, 9, 10, 11, 12, 13, 14, 15, 16, 17});
  REQUIRE(ala.m.has_value());
  CHECK(*ala.m == 7);
  CHECK(ala.anchored(7));
  CHECK_FALSE(ala.anchored(8));
  CHECK_FALSE(ala.anchored(0));
  CHECK_FALSE(ala.anchored(99));

  CHECK(anchored_cadences(Text("AAAAAAAA")).anchored_set ==
        std::vector<Pos>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(anchored_cadences(Text("AB")).anchored_set == std::vector<Pos>{2});
  CHECK(anchored_cadences(Text("AAAB")).anchored_set == std::vector<Pos>{3, 4});
  CHECK(anchored_cadences(Text("Z")).anchored_set == std::vector<Pos>{1});

  const AnchoredResult empty = anchored_cadences(Text());
  CHECK(empty.anchored_set.empty());
  CHECK_FALSE(empty.m.has_value());
  CHECK(empty.comparisons == 0);
}

TEST_CASE("anchored_cadences matches the brute oracle exhaustively") {
  // every binary text of length 1..11
  for (Len n = 1; n <= 11; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::string s(static_cast<std::size_t>(n), 'a');
      for (Len q = 0; q < n; ++q)
        if (mask >> q & 1) s[static_cast<std::size_t>(q)] = 'b';
      const Text t(std::move(s));
      REQUIRE(anchored_cadences(t).anchored_set == brute_anchored(t));
    }
  }
}

TEST_CASE("anchored_cadences matches the brute oracle on random texts") {
  for (const Text& t : corpus(301, 400, 300, 4)) {
    const AnchoredResult fast = anchored_cadences(t);
    REQUIRE(fast.anchored_set == brute_anchored(t));
    if (fast.m) {
      CHECK(fast.anchored_set.front() == *fast.m);
    } else {
      CHECK(fast.anchored_set.empty());
    }
  }
}

TEST_CASE("positions in the trivial band are always anchored") {
  for (const Text& t : corpus(302, 120, 120, 26)) {
    const Len n = t.length();
    const AnchoredResult res = anchored_cadences(t);
    for (Pos i = n / 2 + 1; i <= n; ++i) REQUIRE(res.anchored(i));
    if (n > 0) REQUIRE(res.m.has_value());  // the band is nonempty
  }
}

TEST_CASE("every rejection is justified by a failing prime multiple") {
  // if i is not anchored and 2i <= n, some prime p with p*i <= n must expose
  // a symbol mismatch or a non-anchored multiple
  for (const Text& t : corpus(303, 150, 200, 3)) {
    const Len n = t.length();
    const AnchoredResult res = anchored_cadences(t);
    const PrimeTable table = sieve_primes(n);
    for (Pos i = 1; 2 * i <= n; ++i) {
      if (res.anchored(i)) continue;
      bool justified = false;
      for (Pos p : table.primes) {
        if (p > n / i) break;
        if (t[p * i] != t[i] || !res.anchored(p * i)) {
          justified = true;
          break;
        }
      }
      REQUIRE(justified);
    }
  }
}

TEST_CASE("cell checks are bounded by the prime-divisor sum") {
  for (const Text& t : corpus(304, 80, 400, 2)) {
    const AnchoredResult res = anchored_cadences(t);
    CHECK(res.cell_checks <= omega_sum(t.length()));
    CHECK(res.cell_checks <= res.comparisons);
  }
}

TEST_CASE("unary input saturates the cell-check bound") {
  const AnchoredResult res = anchored_cadences(Text(std::string(10'000, 'u')));
  CHECK(res.comparisons == 24'300);
  CHECK(res.cell_checks == 24'300);
  CHECK(omega_sum(10'000) == 24'300);
  CHECK(res.anchored_set.size() == 10'000);
}

TEST_CASE("positions below half the frontier abort on their first prime") {
  // for 2i < m the doubled position is not anchored, so the very first
  // prime examined settles the question
  std::mt19937_64 rng(305);
  for (int iter = 0; iter < 60; ++iter) {
    const Len n = 20 + static_cast<Len>(uniform_below(rng, 400));
    const Text t = random_text(n, 2, rng);
    const AnchoredResult res = anchored_cadences(t, true);
    REQUIRE(res.primes_examined.size() == static_cast<std::size_t>(n) + 1);
    REQUIRE(res.m.has_value());
    for (Pos i = 1; 2 * i < *res.m; ++i)
      REQUIRE(res.primes_examined[static_cast<std::size_t>(i)] == 1);
    for (Pos i = n / 2 + 1; i <= n; ++i)
      REQUIRE(res.primes_examined[static_cast<std::size_t>(i)] == 0);
  }
  CHECK(anchored_cadences(kAla).primes_examined.empty());  // off by default
}

TEST_CASE("anchored_scaling_probe is deterministic and validated") {
  const std::vector<Len> lengths{0, 64, 256};
  const auto a = anchored_scaling_probe(lengths, 2, 3, 42);
  const auto b = anchored_scaling_probe(lengths, 2, 3, 42);
  REQUIRE(a.size() == 3);
  for (std::size_t q = 0; q < a.size(); ++q) {
    CHECK(a[q].n == lengths[q]);
    CHECK(a[q].mean_comparisons == b[q].mean_comparisons);
    CHECK(a[q].comparisons_per_n == b[q].comparisons_per_n);
  }
  CHECK(a[0].comparisons_per_n == 0.0);
  CHECK(a[1].mean_comparisons > 0.0);
  CHECK(a[1].comparisons_per_n == a[1].mean_comparisons / 64);

  CHECK_THROWS_AS(anchored_scaling_probe({8}, 0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(anchored_scaling_probe({8}, 257, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(anchored_scaling_probe({8}, 2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(anchored_scaling_probe({-1}, 2, 1, 0), std::invalid_argument);
}

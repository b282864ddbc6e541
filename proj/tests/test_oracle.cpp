#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "cadence/oracle.hpp"
#include "cadence/text.hpp"

using namespace cadence;

namespace {

const Text kAla("ALABARALAALABARDA");

std::vector<Text> small_corpus(std::uint64_t seed, int count, Len max_n,
                               int max_sigma) {
  std::mt19937_64 rng(seed);
  std::vector<Text> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int iter = 0; iter < count; ++iter) {
    const Len n = static_cast<Len>(uniform_below(rng, max_n + 1));
    const int sigma = 1 + static_cast<int>(uniform_below(rng, max_sigma));
    out.push_back(random_text(n, sigma, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_cadences frozen examples") {
  const auto k3 = enumerate_cadences(kAla, 3);
  REQUIRE(k3.size() == 2);
  CHECK(k3[0] == Cadence{1, 8, 3, 'A'});
  CHECK(k3[1] == Cadence{3, 7, 3, 'A'});

  CHECK(enumerate_cadences(Text("AB"), 2).empty());

  const auto aa = enumerate_cadences(Text("AA"), 2);
  REQUIRE(aa.size() == 1);
  CHECK(aa[0] == Cadence{1, 1, 2, 'A'});

  CHECK(enumerate_cadences(Text(), 1).empty());
}

TEST_CASE("enumerate_cadences output is sorted, valid, and complete") {
  for (const Text& t : small_corpus(100, 150, 40, 3)) {
    const Len n = t.length();
    const auto all = enumerate_cadences(t, 1);
    std::set<std::pair<Pos, Pos>> found;
    for (std::size_t q = 0; q < all.size(); ++q) {
      const Cadence& c = all[q];
      REQUIRE(is_cadence(t, c.i, c.d));
      REQUIRE(c.k == cadence_order(n, c.i, c.d));
      REQUIRE(c.ch == t[c.i]);
      if (q > 0)
        REQUIRE(std::pair{all[q - 1].i, all[q - 1].d} < std::pair{c.i, c.d});
      found.insert({c.i, c.d});
    }
    // completeness against an independent double loop
    for (Pos i = 1; i <= n; ++i)
      for (Pos d = i; d <= n; ++d)
        REQUIRE(found.count({i, d}) == (is_cadence(t, i, d) ? 1u : 0u));
  }
}

TEST_CASE("k_min filters inside the enumerator") {
  for (const Text& t : small_corpus(101, 80, 50, 2)) {
    const auto all = enumerate_cadences(t, 1);
    for (std::int64_t k_min : {2, 3, 4}) {
      std::vector<Cadence> expect;
      for (const Cadence& c : all)
        if (c.k >= k_min) expect.push_back(c);
      CHECK(enumerate_cadences(t, k_min) == expect);
    }
  }
}

TEST_CASE("brute_anchored frozen examples") {
  CHECK(brute_anchored(kAla) ==
        std::vector<Pos>{7, 9, 10, 11, 12, 13, 14, 15, 16, 17});
  CHECK(brute_anchored(Text("AAAAAAAA")) ==
        std::vector<Pos>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(brute_anchored(Text("AB")) == std::vector<Pos>{2});
  CHECK(brute_anchored(Text()).empty());
}

TEST_CASE("brute_anchored agrees with is_anchored pointwise") {
  for (const Text& t : small_corpus(102, 100, 80, 4)) {
    const auto set = brute_anchored(t);
    std::set<Pos> in(set.begin(), set.end());
    for (Pos i = 1; i <= t.length(); ++i)
      REQUIRE(in.count(i) == (is_anchored(t, i) ? 1u : 0u));
    REQUIRE(std::is_sorted(set.begin(), set.end()));
  }
}

TEST_CASE("brute_k_cadence frozen examples") {
  const auto w = brute_k_cadence(Text("100010001"), 3);
  REQUIRE(w.has_value());
  CHECK(*w == Cadence{1, 4, 3, '1'});

  CHECK_FALSE(brute_k_cadence(Text("000100100100"), 3, '1').has_value());
  CHECK_FALSE(brute_k_cadence(Text("A"), 2).has_value());
  CHECK_THROWS_AS(brute_k_cadence(Text("A"), 0), std::invalid_argument);
}

TEST_CASE("brute_k_cadence witnesses have exactly the requested order") {
  for (const Text& t : small_corpus(103, 120, 40, 2)) {
    for (std::int64_t k : {1, 2, 3, 4}) {
      const auto w = brute_k_cadence(t, k);
      bool oracle = false;
      for (const Cadence& c : enumerate_cadences(t, k))
        if (c.k == k) {
          oracle = true;
          break;
        }
      REQUIRE(w.has_value() == oracle);
      if (w) {
        CHECK(w->k == k);
        CHECK(is_cadence(t, w->i, w->d));
      }
    }
    // symbol restriction
    for (std::uint8_t a : index_occurrences(t).occurring_symbols()) {
      const auto w = brute_k_cadence(t, 3, a);
      bool oracle = false;
      for (const Cadence& c : enumerate_cadences(t, 3))
        if (c.k == 3 && c.ch == a) {
          oracle = true;
          break;
        }
      REQUIRE(w.has_value() == oracle);
      if (w) CHECK(w->ch == a);
    }
  }
}

TEST_CASE("brute_ap_triples frozen examples") {
  CHECK(brute_ap_triples(Text("000100100100"), '1') ==
        std::vector<TripleAP>{TripleAP{4, 7, 10}});
  CHECK(brute_ap_triples(Text("100010001"), '1') ==
        std::vector<TripleAP>{TripleAP{1, 5, 9}});
  CHECK(brute_ap_triples(Text("AB"), 'A').empty());
}

TEST_CASE("brute_ap_triples matches an independent cubic scan") {
  for (const Text& t : small_corpus(104, 80, 30, 2)) {
    const Len n = t.length();
    for (std::uint8_t a : index_occurrences(t).occurring_symbols()) {
      std::vector<TripleAP> cubic;
      for (Pos x = 1; x <= n; ++x)
        for (Pos j = x + 1; j <= n; ++j) {
          const Pos z = 2 * j - x;
          if (z > n) break;
          if (t[x] == a && t[j] == a && t[z] == a)
            cubic.push_back(TripleAP{x, j, z});
        }
      std::sort(cubic.begin(), cubic.end(),
                [](const TripleAP& u, const TripleAP& v) {
                  return std::pair{u.x, u.z} < std::pair{v.x, v.z};
                });
      REQUIRE(brute_ap_triples(t, a) == cubic);
    }
  }
}

TEST_CASE("brute_3sum_zero frozen examples") {
  auto sums_to_zero = [](const std::array<std::int64_t, 3>& t) {
    return t[0] + t[1] + t[2] == 0;
  };
  const auto a = brute_3sum_zero(WeightSet::from_weights({3, 4, -7}));
  REQUIRE(a.has_value());
  CHECK(sums_to_zero(*a));

  CHECK_FALSE(brute_3sum_zero(WeightSet::from_weights({1, 2, 3})).has_value());

  const auto c = brute_3sum_zero(WeightSet::from_weights({1, 9, -10}));
  REQUIRE(c.has_value());
  CHECK(sums_to_zero(*c));

  // set semantics: the duplicated 5 collapses, leaving no triple
  CHECK_FALSE(brute_3sum_zero(WeightSet::from_weights({5, -10, 5})).has_value());
  CHECK_FALSE(brute_3sum_zero(WeightSet()).has_value());
}

TEST_CASE("brute_3sum_zero agrees with an exhaustive distinct-triple scan") {
  std::mt19937_64 rng(105);
  for (int iter = 0; iter < 400; ++iter) {
    const int count = 1 + static_cast<int>(uniform_below(rng, 12));
    std::vector<std::int64_t> w;
    for (int q = 0; q < count; ++q)
      w.push_back(static_cast<std::int64_t>(uniform_below(rng, 21)) - 10);
    const WeightSet ws = WeightSet::from_weights(w);

    std::vector<std::int64_t> v = w;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    bool oracle = false;
    for (std::size_t x = 0; x < v.size() && !oracle; ++x)
      for (std::size_t y = x + 1; y < v.size() && !oracle; ++y)
        for (std::size_t z = y + 1; z < v.size() && !oracle; ++z)
          oracle = v[x] + v[y] + v[z] == 0;

    const auto got = brute_3sum_zero(ws);
    REQUIRE(got.has_value() == oracle);
    if (got) {
      CHECK((*got)[0] + (*got)[1] + (*got)[2] == 0);
      std::set<std::int64_t> distinct(got->begin(), got->end());
      CHECK(distinct.size() == 3);
      for (auto e : *got)
        CHECK(std::binary_search(v.begin(), v.end(), e));
    }
  }
}

TEST_CASE("WeightSet validates its declared range") {
  CHECK_THROWS_AS(WeightSet({5}, 2), std::invalid_argument);
  CHECK_THROWS_AS(WeightSet({-5}, 2), std::invalid_argument);
  CHECK_NOTHROW(WeightSet({4, -4}, 2));
  const WeightSet w = WeightSet::from_weights({9, -10});
  CHECK(w.bound * 2 >= 10);
}

TEST_CASE("order-3 cadences coincide with begin/end constrained triples") {
  // every AP triple with x <= j - x and 3j - 2x > n is an order-3 cadence,
  // and every order-3 cadence yields such a triple
  for (const Text& t : small_corpus(106, 120, 36, 2)) {
    const Len n = t.length();
    for (std::uint8_t a : index_occurrences(t).occurring_symbols()) {
      std::set<std::pair<Pos, Pos>> from_triples;
      for (const TripleAP& tr : brute_ap_triples(t, a))
        if (tr.x <= tr.j - tr.x && 3 * tr.j - 2 * tr.x > n) {
          REQUIRE(is_cadence(t, tr.x, tr.j - tr.x));
          REQUIRE(cadence_order(n, tr.x, tr.j - tr.x) == 3);
          from_triples.insert({tr.x, tr.j - tr.x});
        }
      std::set<std::pair<Pos, Pos>> from_enum;
      for (const Cadence& c : enumerate_cadences(t, 3))
        if (c.k == 3 && c.ch == a) from_enum.insert({c.i, c.d});
      REQUIRE(from_triples == from_enum);
    }
  }
}

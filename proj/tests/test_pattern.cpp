#include <doctest.h>

#include <set>

#include "penney/errors.hpp"
#include "penney/pattern.hpp"
#include "support.hpp"

using namespace penney;
using namespace penney::test;

TEST_CASE("pattern construction") {
  auto s3 = group("S:3");
  Pattern aba(s3, word("BCB", 3));
  CHECK(aba.to_string() == "aba");
  CHECK(aba.orbit_size() == 6);
  Pattern aaa(s3, word("AAA", 3));
  CHECK(aaa.to_string() == "aaa");
  CHECK(aaa.orbit_size() == 3);
  CHECK(aaa.orbit_size() * aaa.stabilizer_order() == s3->order());
  Pattern w(group("T:2"), word("THH", 2));
  CHECK(w.display() == "BAA");
  CHECK(w.orbit_size() == 1);
}

TEST_CASE("pattern enumeration") {
  CHECK(names(enumerate_patterns(group("S:3"), 3)) ==
        std::vector<std::string>{"aaa", "aab", "aba", "abb", "abc"});
  CHECK(names(enumerate_patterns(group("Z:3"), 3)) ==
        std::vector<std::string>{"aaa", "aab", "aac", "aba", "abb", "abc", "aca", "acb", "acc"});
  CHECK(enumerate_patterns(group("T:2"), 2).size() == 4);
  CHECK_THROWS_AS(enumerate_patterns(group("S:4"), 20), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_patterns(group("S:4"), 0), InvalidArgument);
}

TEST_CASE("orbits of enumerated patterns partition all words") {
  for (const char* s : {"S:3", "Z:3", "P:S:1xS:2", "G:4:(0 1)(2 3)"}) {
    auto g = group(s);
    for (std::size_t len = 1; len <= 4; ++len) {
      std::set<Word> seen;
      for (const auto& p : enumerate_patterns(g, len)) {
        for (const auto& w : p.orbit()) CHECK(seen.insert(w).second);
      }
      std::size_t total = 1;
      for (std::size_t k = 0; k < len; ++k) total *= g->degree();
      CHECK(seen.size() == total);
    }
  }
}

TEST_CASE("pattern correlations") {
  auto s3 = group("S:3");
  auto abc = pat(s3, "abc");
  CHECK(correlate_patterns(abc, abc).entries == vec({1, 1, 2}));
  CHECK(correlate_patterns_orbit_sum(abc, abc).entries == vec({1, 1, 2}));
  CHECK(correlate_patterns(abc, abc).normalized ==
        std::vector<Rational>{rat("1/6"), rat("1/6"), rat("1/3")});
  auto s2 = group("S:2");
  CHECK(correlate_patterns(pat(s2, "aa"), pat(s2, "aa")).entries == vec({1, 1}));
  CHECK(correlate_patterns(pat(s2, "aabb"), pat(s2, "aabb")).entries == vec({1, 0, 1, 1}));

  auto s4 = group("S:4");
  auto aabc = pat(s4, "aabc");
  auto abbc = pat(s4, "abbc");
  CHECK(correlate_patterns(aabc, abbc).entries == correlate_patterns_orbit_sum(aabc, abbc).entries);
  CHECK_THROWS_AS(correlate_patterns(abc, pat(s2, "ab")), GroupMismatch);

  auto blocks = group("P:S:2xS:2");
  CHECK(correlate_patterns(pat(blocks, "aaaa"), pat(blocks, "cccc")).entries ==
        vec({0, 0, 0, 0}));
}

TEST_CASE("pattern Conway numbers") {
  CHECK(cln_pattern(pat(group("S:2"), "abab"), pat(group("S:2"), "abab")) == 15);
  auto s4 = group("S:4");
  CHECK(cln_pattern(pat(s4, "aabc"), pat(s4, "aabc")) == 70);
  auto t = group("T:3");
  CHECK(cln_pattern(pat(t, "AAB"), pat(t, "AAB")) == 9);
}

TEST_CASE("pattern periods and overlap classes") {
  auto s5 = group("S:5");
  CHECK(pattern_periods(pat(s5, "abcdaec")) == std::vector<std::size_t>{2, 3, 4, 5, 6});
  CHECK(correlate_patterns(pat(s5, "abcdaec"), pat(s5, "abcdaec")).entries ==
        vec({1, 0, 1, 1, 2, 6, 24}));
  CHECK(pattern_periods(pat(group("S:2"), "aa")) == std::vector<std::size_t>{1});
  CHECK(pattern_periods(pat(group("S:3"), "abc")) == std::vector<std::size_t>{1, 2});

  CHECK(classify_overlap(pat(group("T:2"), "HHTHT")) == OverlapClass::NonSelfOverlapping);
  CHECK(classify_overlap(pat(group("S:3"), "aaab")) == OverlapClass::AlmostNonSelfOverlapping);
  CHECK(classify_overlap(pat(group("S:2"), "aaa")) == OverlapClass::Neither);
  CHECK(classify_overlap(pat(group("S:2"), "aa")) == OverlapClass::AlmostNonSelfOverlapping);
  CHECK(to_string(OverlapClass::AlmostNonSelfOverlapping) == "almost_nso");
}

TEST_CASE("minimum Conway numbers") {
  auto r = min_cln_search(group("S:4"), 5);
  CHECK(r.value == 259);
  CHECK(names(r.witnesses) ==
        std::vector<std::string>{"aaaab", "aaaba", "aabab", "abaaa", "ababb", "abbbb"});
  r = min_cln_search(group("S:3"), 4);
  CHECK(r.value == 29);
  CHECK(names(r.witnesses) ==
        std::vector<std::string>{"aaab", "aaba", "aabc", "abaa", "abbb", "abcc"});
  r = min_cln_search(group("P:S:2xS:2"), 5);
  CHECK(r.value == 256);
}

TEST_CASE("symmetric-group minimum equals q^(l-1)+q-1") {
  // Length 2 is below the bound's range: aa has CLN q+1 < 2q-1 once q >= 3.
  CHECK(min_cln_search(group("S:2"), 2).value == 3);
  CHECK(min_cln_search(group("S:3"), 2).value == 4);
  CHECK(names(min_cln_search(group("S:4"), 2).witnesses) == std::vector<std::string>{"aa"});
  for (std::size_t q = 2; q <= 4; ++q) {
    for (std::size_t len = 3; len <= 5; ++len) {
      auto g = group("S:" + std::to_string(q));
      auto r = min_cln_search(g, len);
      BigInt expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), q, len - 1);
      CAPTURE(q);
      CAPTURE(len);
      CHECK(r.value == Rational(expected + static_cast<unsigned long>(q - 1)));
      CHECK(r.value >= r.bound_low);
      CHECK(r.value <= r.bound_high);
      if (q >= 4) {
        for (const auto& w : r.witnesses) CHECK(__builtin_popcount(letter_mask(w.word())) == 2);
      }
    }
  }
}

TEST_CASE("cyclic-group minimum lies in the single-orbit range") {
  for (std::size_t q = 2; q <= 4; ++q) {
    for (std::size_t len = 2; len <= (q == 4 ? 5u : 6u); ++len) {
      auto r = min_cln_search(group("Z:" + std::to_string(q)), len);
      CHECK(r.value >= r.bound_low);
      CHECK(r.value <= r.bound_high);
    }
  }
}

namespace {

struct Family {
  const char* spec;
  std::size_t max_len;
};

}  // namespace

TEST_CASE("correlation definitions agree") {
  for (Family f : {Family{"S:2", 6}, Family{"S:3", 5}, Family{"S:4", 4}, Family{"Z:2", 6},
                   Family{"Z:3", 5}, Family{"Z:4", 4}}) {
    auto g = group(f.spec);
    for (std::size_t len = 1; len <= f.max_len; ++len) {
      auto ps = enumerate_patterns(g, len);
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          auto x = correlate_patterns(a, b);
          auto y = correlate_patterns_orbit_sum(a, b);
          if (x.entries != y.entries) FAIL(f.spec << " " << a.display() << " " << b.display());
          for (const auto& v : x.normalized) {
            if (v < 0 || v > 1) FAIL("normalized entry out of range");
          }
        }
      }
    }
  }
}

TEST_CASE("orbit-sum balance and normalized symmetry") {
  for (const char* s : {"S:3", "Z:3", "P:S:1xS:2"}) {
    auto g = group(s);
    auto ps = enumerate_patterns(g, 4);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        const Word& v = a.word();
        const Word& w = b.word();
        Correlation left(v.size(), 0), right(v.size(), 0);
        for (const auto& vi : g->orbit(v)) {
          auto c = correlate(vi, w);
          for (std::size_t i = 0; i < c.size(); ++i) left[i] += c[i];
        }
        for (const auto& wi : g->orbit(w)) {
          auto c = correlate(v, wi);
          for (std::size_t i = 0; i < c.size(); ++i) right[i] += c[i];
        }
        const auto sv = static_cast<std::int64_t>(g->stabilizer_order(v));
        const auto sw = static_cast<std::int64_t>(g->stabilizer_order(w));
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(sv * left[i] == sw * right[i]);

        Correlation by_v(v.size(), 0), by_w(v.size(), 0);
        for (const auto& h : g->elements()) {
          auto c1 = correlate(act(h, v), w);
          auto c2 = correlate(v, act(h, w));
          for (std::size_t i = 0; i < v.size(); ++i) {
            by_v[i] += c1[i];
            by_w[i] += c2[i];
          }
        }
        CHECK(by_v == by_w);

        // Normalized entries are a stabilizer fraction or zero.
        auto n = correlate_patterns(a, b).normalized;
        for (std::size_t i = 0; i < n.size(); ++i) {
          if (n[i] == 0) continue;
          Rational frac(static_cast<unsigned long>(g->stabilizer_order(subword(w, 1, v.size() - i))),
                        static_cast<unsigned long>(g->order()));
          frac.canonicalize();
          CHECK(n[i] == frac);
        }
      }
    }
  }
}

TEST_CASE("pattern period lemmas") {
  for (std::size_t q : {2u, 3u}) {
    for (const char* kind : {"S:", "Z:"}) {
      auto g = group(kind + std::to_string(q));
      for (std::size_t len = 2; len <= 10; ++len) {
        for (const auto& p : enumerate_patterns(g, len)) {
          auto periods = pattern_periods(p);
          std::vector<bool> has(len + 1, false);
          for (auto x : periods) has[x] = true;
          for (auto s : periods) {
            // All letters of p appear in its first qs letters.
            if (len >= q * s) {
              auto head = subword(p.word(), 1, q * s);
              if (letter_mask(head) != letter_mask(p.word())) FAIL("all-letters: " << p.display());
            }
            for (auto t : periods) {
              if (s + t < len && !has[s + t]) FAIL("additivity: " << p.display());
              if (s < t && len >= (q + 1) * s + t && !has[t - s]) FAIL("subtraction: " << p.display());
            }
          }
        }
      }
    }
  }
}

#include <doctest.h>

#include "penney/errors.hpp"
#include "penney/genfunc.hpp"
#include "penney/oracle.hpp"
#include "support.hpp"

using namespace penney;
using namespace penney::test;

namespace {

RationalFunction F(std::vector<long long> num, std::vector<long long> den) {
  return RationalFunction(Polynomial::from_integers(num), Polynomial::from_integers(den));
}

void check_against_oracle(const std::vector<Pattern>& set, std::size_t n) {
  auto sol = solve_patterns(set);
  const std::size_t q = set.front().group().degree();
  auto counts = brute_counts(orbit_groups(set), q, n);
  auto avoid = series_coefficients(sol.avoiding, n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (avoid[k] != Rational(static_cast<unsigned long>(counts.avoiding[k]))) {
      FAIL("avoiding count mismatch at n=" << k << " for " << set.front().display());
    }
  }
  for (std::size_t j = 0; j < set.size(); ++j) {
    auto first = series_coefficients(sol.first_occurrence[j], n);
    for (std::size_t k = 0; k <= n; ++k) {
      if (first[k] != Rational(static_cast<unsigned long>(counts.first[j][k]))) {
        FAIL("first-occurrence mismatch at n=" << k << " for " << set[j].display());
      }
    }
  }
}

}  // namespace

TEST_CASE("reduced-set validation") {
  auto v = validate_reduced(std::vector<Word>{word("HTH", 2), word("TTHTH", 2)});
  REQUIRE(v);
  CHECK(v->container == 1);
  CHECK(v->contained == 0);
  auto s3 = group("S:3");
  auto pv = validate_reduced(std::vector<Pattern>{pat(s3, "aba"), pat(s3, "aabcb")});
  REQUIRE(pv);
  CHECK(pv->container == 1);
  CHECK_FALSE(validate_reduced(std::vector<Word>{word("ABA", 3), word("AABCB", 3)}));
  CHECK_THROWS_AS(solve_words({word("HTH", 2), word("TTHTH", 2)}, 2), NotReduced);
  CHECK_THROWS_AS(solve_patterns({pat(s3, "aba"), pat(s3, "aabcb")}), NotReduced);
}

TEST_CASE("word systems") {
  auto hh = solve_words({word("HH", 2)}, 2);
  CHECK(hh.avoiding == F({1, 1}, {1, -1, -1}));
  CHECK(hh.first_occurrence[0] == F({0, 0, 1}, {1, -1, -1}));
  CHECK(closed_form_single(word("HH", 2), 2).first_occurrence[0] == F({0, 0, 1}, {1, -1, -1}));

  for (const auto& w : all_words(2, 5)) {
    auto a = solve_words({w}, 2);
    auto b = closed_form_single(w, 2);
    CHECK(a.avoiding == b.avoiding);
    CHECK(a.first_occurrence[0] == b.first_occurrence[0]);
  }
  auto nso = closed_form_single(word("HHTHT", 2), 2).first_occurrence[0];
  CHECK(nso == F({0, 0, 0, 0, 0, 1}, {1, -2, 0, 0, 0, 1}));

  auto game = solve_words({word("HTHT", 2), word("THTT", 2)}, 2);
  Rational alice = game.first_occurrence[0].evaluate(rat("1/2"));
  Rational bob = game.first_occurrence[1].evaluate(rat("1/2"));
  CHECK(alice == rat("9/14"));
  CHECK(alice / bob == rat("9/5"));
}

TEST_CASE("pattern systems") {
  auto s2 = group("S:2");
  auto aa = solve_patterns({pat(s2, "aa")});
  CHECK(aa.avoiding == F({1, 1}, {1, -1}));
  CHECK(aa.first_occurrence[0] == F({0, 0, 2}, {1, -1}));
  CHECK(closed_form_single(pat(s2, "aa")).first_occurrence[0] == F({0, 0, 2}, {1, -1}));

  auto abc = solve_patterns({pat(group("S:3"), "abc")});
  CHECK(abc.avoiding == F({1, 1, 2}, {1, -2, -1}));
  CHECK(abc.first_occurrence[0] == F({0, 0, 0, 6}, {1, -2, -1}));

  // a1...aq under S_q: numerator sum k! z^k, denominator q! z^q + (1-qz)(numerator).
  for (std::size_t q = 2; q <= 5; ++q) {
    auto g = group("S:" + std::to_string(q));
    Word distinct(q);
    for (std::size_t i = 0; i < q; ++i) distinct[i] = static_cast<Letter>(i);
    std::vector<long long> num;
    long long fact = 1;
    for (std::size_t k = 0; k < q; ++k) {
      num.push_back(fact);
      fact *= static_cast<long long>(k + 1);
    }
    auto c = Polynomial::from_integers(num);
    auto den = Polynomial::monomial(q, Rational(static_cast<long>(fact))) +
               Polynomial::from_integers({1, -static_cast<long long>(q)}) * c;
    auto sol = solve_patterns({Pattern(g, distinct)});
    CHECK(sol.avoiding == RationalFunction(c, den));
    CHECK(sol.first_occurrence[0] == RationalFunction(Polynomial::monomial(q, Rational(static_cast<long>(fact))), den));
  }
}

TEST_CASE("single-pattern solve equals the closed form") {
  for (const char* s : {"S:2", "S:3", "Z:3", "S:4", "P:S:2xS:2"}) {
    auto g = group(s);
    for (std::size_t len = 1; len <= 4; ++len) {
      for (const auto& p : enumerate_patterns(g, len)) {
        auto a = solve_patterns({p});
        auto b = closed_form_single(p);
        CHECK(a.avoiding == b.avoiding);
        CHECK(a.first_occurrence[0] == b.first_occurrence[0]);
      }
    }
  }
}

TEST_CASE("trivial-group patterns reduce to words") {
  auto t = group("T:2");
  auto ps = enumerate_patterns(t, 3);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      auto a = solve_patterns({ps[i], ps[j]});
      auto b = solve_words({ps[i].word(), ps[j].word()}, 2);
      CHECK(a.avoiding == b.avoiding);
      CHECK(a.first_occurrence == b.first_occurrence);
    }
  }
}

TEST_CASE("first equation and conservation") {
  for (const char* s : {"S:3", "Z:3", "T:2"}) {
    auto g = group(s);
    auto ps = enumerate_patterns(g, 3);
    const std::size_t q = g->degree();
    const Rational z(1, static_cast<unsigned long>(q));
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        auto sol = solve_patterns({ps[i], ps[j]});
        auto lhs = RationalFunction(Polynomial::from_integers({1, -static_cast<long long>(q)})) *
                       sol.avoiding +
                   sol.first_occurrence[0] + sol.first_occurrence[1];
        CHECK(lhs == RationalFunction::constant(1));
        CHECK(sol.first_occurrence[0].evaluate(z) + sol.first_occurrence[1].evaluate(z) == 1);
      }
    }
  }
}

TEST_CASE("series equal brute-force counts for single patterns") {
  for (std::size_t q : {2u, 3u}) {
    for (const char* kind : {"S:", "Z:", "T:"}) {
      auto g = group(kind + std::to_string(q));
      for (std::size_t len = 1; len <= 4; ++len) {
        for (const auto& p : enumerate_patterns(g, len)) check_against_oracle({p}, 12);
      }
    }
  }
  auto s4 = group("S:4");
  for (std::size_t len = 1; len <= 4; ++len) {
    for (const auto& p : enumerate_patterns(s4, len)) check_against_oracle({p}, 8);
  }
}

TEST_CASE("series equal brute-force counts for matchups") {
  auto t2 = group("T:2");
  check_against_oracle({pat(t2, "HTHT"), pat(t2, "THTT")}, 12);
  check_against_oracle({pat(t2, "HTHTH"), pat(t2, "HHTHT")}, 12);
  check_against_oracle({pat(t2, "HTT"), pat(t2, "HHT"), pat(t2, "THH")}, 12);
  auto s4 = group("S:4");
  const char* cycle[] = {"aabc", "abbc", "abcc", "abac", "abcb"};
  for (int i = 0; i < 5; ++i) check_against_oracle({pat(s4, cycle[i]), pat(s4, cycle[(i + 1) % 5])}, 8);
  auto s3 = group("S:3");
  check_against_oracle({pat(s3, "abc"), pat(s3, "aab")}, 12);
}

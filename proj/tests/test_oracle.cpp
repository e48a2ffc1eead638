#include <doctest.h>

#include "penney/errors.hpp"
#include "penney/oracle.hpp"
#include "support.hpp"

using namespace penney;
using namespace penney::test;

TEST_CASE("xorshift stream is pinned") {
  Xorshift64Star a(42), b(42), c(43);
  auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  std::uint64_t s = 0;
  CHECK(splitmix64(s) == 0xE220A8397B1DCDAFull);
  Xorshift64Star r(1);
  for (int i = 0; i < 1000; ++i) CHECK(r.letter(3) < 3);
}

TEST_CASE("automaton matching") {
  MatchAutomaton m({{word("ABA", 2)}, {word("BB", 2)}}, 2);
  std::size_t s = 0;
  int hit = -1;
  for (Letter x : word("AABA", 2)) {
    s = m.step(s, x);
    hit = m.match(s);
  }
  CHECK(hit == 0);
  s = 0;
  for (Letter x : word("ABB", 2)) s = m.step(s, x);
  CHECK(m.match(s) == 1);
}

TEST_CASE("avoiding counts") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::uint64_t fib[] = {1, 2, 3, 5, 8, 13};
    CHECK(brute_avoiding({word("HH", 2)}, 2, n) == fib[n]);
  }
  auto abc = pat(group("S:3"), "abc");
  const std::uint64_t expected[] = {1, 3, 9, 21, 51};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(brute_avoiding(abc.orbit(), 3, n) == expected[n]);
  CHECK(brute_avoiding({}, 3, 4) == 81);
}

TEST_CASE("first-occurrence counts") {
  auto orbit = pat(group("S:3"), "abc").orbit();
  const std::uint64_t expected[] = {6, 12, 30, 72};
  for (std::size_t n = 3; n <= 6; ++n) CHECK(brute_first_occurrence(orbit, orbit, 3, n) == expected[n - 3]);
  CHECK(brute_first_occurrence({word("HTHT", 2)}, {word("HTHT", 2)}, 2, 3) == 0);

  // Partial sums of Alice's first-occurrence probability approach 9/14.
  auto counts = automaton_counts({{word("HTHT", 2)}, {word("THTT", 2)}}, 2, 40);
  auto shallow = brute_counts({{word("HTHT", 2)}, {word("THTT", 2)}}, 2, 16);
  for (std::size_t n = 0; n <= 16; ++n) {
    CHECK(counts.avoiding[n] == shallow.avoiding[n]);
    CHECK(counts.first[0][n] == shallow.first[0][n]);
    CHECK(counts.first[1][n] == shallow.first[1][n]);
  }
  Rational sum = 0;
  for (std::size_t n = 0; n <= 40; ++n) {
    sum += Rational(static_cast<unsigned long>(counts.first[0][n])) /
           Rational(BigInt(1) << static_cast<mp_bitcnt_t>(n));
  }
  Rational gap = rat("9/14") - sum;
  // The missing mass is at most the probability that nobody has won by n = 40.
  Rational unfinished = Rational(static_cast<unsigned long>(counts.avoiding[40])) /
                        Rational(BigInt(1) << 40);
  CHECK(gap >= 0);
  CHECK(gap <= unfinished);
  CHECK(unfinished < rat("1/20"));
}

TEST_CASE("budget is enforced") {
  OracleBudget tiny;
  tiny.max_total_strings = 100;
  CHECK_THROWS_AS(brute_avoiding({word("AAAA", 3)}, 3, 10, tiny), BudgetExceeded);
}

TEST_CASE("count recurrence q A(n-1) - A(n) = sum of first-occurrence counts") {
  for (const char* s : {"S:3", "Z:3", "T:2", "S:2"}) {
    auto g = group(s);
    auto ps = enumerate_patterns(g, 3);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      auto counts = brute_counts(orbit_groups({ps[i], ps[i + 1]}), g->degree(), 10);
      for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(g->degree() * counts.avoiding[n - 1] - counts.avoiding[n] ==
              counts.first[0][n] + counts.first[1][n]);
      }
    }
  }
}

TEST_CASE("simulation is deterministic and thread-count independent") {
  auto t2 = group("T:2");
  auto a = simulate_game(pat(t2, "HTHT"), pat(t2, "THTT"), 200000, 99, 1);
  auto b = simulate_game(pat(t2, "HTHT"), pat(t2, "THTT"), 200000, 99, 4);
  CHECK(a.wins == b.wins);
  CHECK(a.length_sum == b.length_sum);
  CHECK(a.length_square_sum == b.length_square_sum);
  auto c = simulate_game(pat(t2, "HTHT"), pat(t2, "THTT"), 200000, 100, 1);
  CHECK(a.wins != c.wins);
}

TEST_CASE("simulation sanity") {
  auto s2 = group("S:2");
  auto r = simulate_game(pat(s2, "aa"), pat(s2, "ab"), 10000, 1);
  CHECK(r.wins[0] + r.wins[1] == r.trials);
  auto w = simulate_wait(pat(group("S:4"), "a"), 1000, 3);
  CHECK(w.mean_length() == 1.0);
  CHECK_THROWS_AS(simulate_wait(pat(s2, "a"), 0, 1), InvalidArgument);
}

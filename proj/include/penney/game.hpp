#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "penney/pattern.hpp"
#include "penney/rational_series.hpp"

namespace penney {

/// Expected wait time (q/r) * pLp.
Rational wait_time(const Pattern& p);

/// A reduced integer ratio printed as "a:b".
std::string odds_label(const Rational& ratio);

struct GameReport {
  Pattern p1;  // Alice
  Pattern p2;  // Bob
  /// Alice's odds of winning, as the ratio P(Alice)/P(Bob).
  Rational alice_odds;
  Rational alice_win_probability;
  Rational expected_length;
  Rational wait1;
  Rational wait2;
  /// True when the generating-function route reproduced the odds and length.
  bool genfunc_verified = false;

  Rational bob_odds() const { return 1 / alice_odds; }
  Rational bob_win_probability() const { return 1 - alice_win_probability; }
};

/// Bob's odds (r2/r1)(p1Lp1 - p1Lp2)/(p2Lp2 - p2Lp1) from Conway numbers.
/// Throws NotReduced or DegenerateMatchup.
Rational bob_odds(const Pattern& p1, const Pattern& p2);

/// Full matchup report. With `verify`, the odds and expected length are also
/// derived from the solved generating functions at z = 1/q and must agree.
GameReport odds(const Pattern& p1, const Pattern& p2, bool verify = true);

/// q((p1Lp1)(p2Lp2) - (p1Lp2)(p2Lp1)) / (r1(p2Lp2 - p2Lp1) + r2(p1Lp1 - p1Lp2)).
Rational expected_game_length(const Pattern& p1, const Pattern& p2);
/// (G'_p1(1/q) + G'_p2(1/q))/q from the solved system.
Rational expected_game_length_genfunc(const Pattern& p1, const Pattern& p2);

struct Beater {
  Pattern pattern;
  Rational bob_odds;
  /// Every pattern achieving the maximum, sorted; `pattern` is the first.
  std::vector<Pattern> ties;
};

/// Exhaustive argmax of Bob's odds over the other patterns of the same
/// length; ties go to the lexicographically least pattern. Empty when p1 is
/// the only pattern of its length.
std::optional<Beater> best_beater(const Pattern& p1,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Patterns x.p1(1..l-1) for each letter x, canonicalized, deduplicated, p1 excluded.
std::vector<Pattern> bob_shift_candidates(const Pattern& p1);

/// Constructive first-letter rule for the shift family: with s the least
/// period of p1, prepend a letter different from p1(1) when p1(s) = p1(s+1),
/// and p1(1) itself otherwise. A heuristic; best_beater is authoritative.
std::optional<Pattern> bob_pick_heuristic(const Pattern& p1);

struct BeaterGraph {
  std::vector<Pattern> nodes;                // sorted
  std::vector<std::optional<Beater>> edges;  // edges[i] leaves nodes[i]

  std::size_t index_of(const Pattern& p) const;
  std::string to_dot(std::string_view symbols = kDefaultSymbols) const;
};

BeaterGraph beater_graph(const GroupPtr& group, std::size_t length,
                         std::uint64_t budget = kDefaultEnumerationBudget,
                         std::size_t threads = 1);

struct BeaterCycle {
  std::vector<Pattern> nodes;    // starts at the least node of the cycle
  std::vector<Rational> labels;  // Bob's odds on nodes[k] -> nodes[k+1]
  /// Every edge gives the beater odds above 1.
  bool non_transitive = false;
};

/// Walks out-edges from the least node (then the next, if a walk dead-ends)
/// until a node repeats.
std::optional<BeaterCycle> find_nontransitive_cycle(const BeaterGraph& graph);

struct ExtremalWait {
  Rational max_value;
  std::vector<Pattern> max_patterns;
  Rational min_value;
  std::vector<Pattern> min_patterns;
  /// (|G_x|/|G|)(q + ... + q^l) for the letter x with the largest stabilizer.
  Rational predicted_max;
  /// q^l/|G|, plus 1 when the letters form a single orbit; only for l >= q+1.
  std::optional<Rational> predicted_min;
};

ExtremalWait extremal_wait(const GroupPtr& group, std::size_t length,
                           std::uint64_t budget = kDefaultEnumerationBudget);

struct AdvantageReport {
  Pattern alice;
  std::vector<std::pair<Pattern, Rational>> bob_odds;  // every other pattern, sorted
};

/// Under S_q with 2l < q + 2, checks that the all-distinct pattern a1..al
/// beats every other pattern of its length. Throws HypothesisViolated with the
/// counterexample otherwise.
AdvantageReport alice_advantage_check(const GroupPtr& group, std::size_t length,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace penney

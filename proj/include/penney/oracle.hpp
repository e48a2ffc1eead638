#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "penney/pattern.hpp"

namespace penney {

struct OracleBudget {
  /// Cap on DFS nodes (letter-steps) visited by an exhaustive count.
  std::uint64_t max_total_strings = 100'000'000;
  std::uint64_t rng_seed = 20261016;
};

/// SplitMix64 (Steele, Lea, Flood). Used to expand seeds.
///   z += 0x9E3779B97F4A7C15; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
///   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
std::uint64_t splitmix64(std::uint64_t& state);

/// xorshift64* (Vigna): x ^= x>>12; x ^= x<<25; x ^= x>>27; out = x * 0x2545F4914F6CDD1D.
/// The state is seeded with splitmix64(seed), remapped to 1 if it comes out 0.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform letter in [0, q) by rejection of the top partial range.
  Letter letter(std::size_t q);

 private:
  std::uint64_t state_;
};

/// Aho-Corasick automaton over groups of words; each state reports the group
/// of a word ending there, or -1.
class MatchAutomaton {
 public:
  MatchAutomaton(const std::vector<std::vector<Word>>& groups, std::size_t q);

  std::size_t step(std::size_t state, Letter x) const { return next_[state * q_ + x]; }
  int match(std::size_t state) const { return match_[state]; }
  std::size_t size() const { return match_.size(); }
  std::size_t alphabet() const { return q_; }

 private:
  std::size_t q_;
  std::vector<std::size_t> next_;
  std::vector<int> match_;
};

/// Counts for n = 0..n_max: strings avoiding every group, and strings whose
/// first occurrence of any word is a word of group g at the very end.
struct BruteCounts {
  std::vector<std::uint64_t> avoiding;
  std::vector<std::vector<std::uint64_t>> first;  // [group][n]
};

/// Depth-first extension with incremental matching. Throws BudgetExceeded.
BruteCounts brute_counts(const std::vector<std::vector<Word>>& groups, std::size_t q,
                         std::size_t n_max, const OracleBudget& budget = {});

/// Same counts by dynamic programming over automaton states, for horizons
/// where depth-first enumeration is too slow. Throws BudgetExceeded when q^n_max
/// would overflow 64 bits.
BruteCounts automaton_counts(const std::vector<std::vector<Word>>& groups, std::size_t q,
                             std::size_t n_max);

std::uint64_t brute_avoiding(const std::vector<Word>& words, std::size_t q, std::size_t n,
                             const OracleBudget& budget = {});
/// Strings of length n avoiding `words` except for a final occurrence of a word in `targets`.
std::uint64_t brute_first_occurrence(const std::vector<Word>& words,
                                     const std::vector<Word>& targets, std::size_t q,
                                     std::size_t n, const OracleBudget& budget = {});

/// Union of the orbits of the patterns.
std::vector<Word> expand_orbits(const std::vector<Pattern>& patterns);
/// One orbit word group per pattern, for brute_counts and simulation.
std::vector<std::vector<Word>> orbit_groups(const std::vector<Pattern>& patterns);

struct GameSimulation {
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> wins;  // per contender
  std::uint64_t length_sum = 0;
  double length_square_sum = 0;

  double win_frequency(std::size_t contender) const;
  double win_standard_error(std::size_t contender) const;
  double mean_length() const;
  double length_standard_error() const;
};

/// Streams uniform letters until a word from some contender group appears.
/// Trials run in blocks of 65536; block b draws from seed' = seed + b, so the
/// result is identical for any thread count.
GameSimulation simulate_game(const std::vector<std::vector<Word>>& contenders, std::size_t q,
                             std::uint64_t trials, std::uint64_t seed, std::size_t threads = 1);
GameSimulation simulate_game(const Pattern& p1, const Pattern& p2, std::uint64_t trials,
                             std::uint64_t seed, std::size_t threads = 1);

/// Mean first-occurrence time of any orbit member.
GameSimulation simulate_wait(const Pattern& p, std::uint64_t trials, std::uint64_t seed,
                             std::size_t threads = 1);

}  // namespace penney

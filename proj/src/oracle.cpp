#include "penney/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <limits>
#include <thread>

#include "penney/errors.hpp"

namespace penney {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) {
  state_ = splitmix64(seed);
  if (state_ == 0) state_ = 1;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1Dull;
}

Letter Xorshift64Star::letter(std::size_t q) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t excess = (max % q + 1) % q;  // 2^64 mod q
  const std::uint64_t limit = max - excess;        // accept r <= limit
  std::uint64_t r;
  do {
    r = next();
  } while (excess != 0 && r > limit);
  return static_cast<Letter>(r % q);
}

// --- automaton -------------------------------------------------------------

MatchAutomaton::MatchAutomaton(const std::vector<std::vector<Word>>& groups, std::size_t q)
    : q_(q) {
  if (q == 0) throw InvalidArgument("empty alphabet");
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> trie(q, kNone);
  match_.push_back(-1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const Word& w : groups[g]) {
      if (w.empty()) throw InvalidArgument("empty word in matcher");
      std::size_t state = 0;
      for (Letter x : w) {
        if (x >= q) throw InvalidArgument("letter outside the alphabet");
        if (trie[state * q + x] == kNone) {
          trie[state * q + x] = match_.size();
          match_.push_back(-1);
          trie.resize(trie.size() + q, kNone);
        }
        state = trie[state * q + x];
      }
      if (match_[state] < 0) match_[state] = static_cast<int>(g);
    }
  }

  // Breadth-first failure links folded into a full transition table.
  next_.assign(trie.size(), 0);
  std::vector<std::size_t> fail(match_.size(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t x = 0; x < q; ++x) {
    std::size_t child = trie[x];
    if (child == kNone) {
      next_[x] = 0;
    } else {
      next_[x] = child;
      queue.push_back(child);
    }
  }
  while (!queue.empty()) {
    std::size_t state = queue.front();
    queue.pop_front();
    if (match_[state] < 0) match_[state] = match_[fail[state]];
    for (std::size_t x = 0; x < q; ++x) {
      std::size_t child = trie[state * q + x];
      if (child == kNone) {
        next_[state * q + x] = next_[fail[state] * q + x];
      } else {
        fail[child] = next_[fail[state] * q + x];
        next_[state * q + x] = child;
        queue.push_back(child);
      }
    }
  }
}

// --- exhaustive counts -----------------------------------------------------

BruteCounts brute_counts(const std::vector<std::vector<Word>>& groups, std::size_t q,
                         std::size_t n_max, const OracleBudget& budget) {
  MatchAutomaton automaton(groups, q);
  BruteCounts counts;
  counts.avoiding.assign(n_max + 1, 0);
  counts.first.assign(groups.size(), std::vector<std::uint64_t>(n_max + 1, 0));

  struct Frame {
    std::size_t state;
    std::size_t depth;
  };
  std::vector<Frame> stack{{0, 0}};
  std::uint64_t visited = 0;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (++visited > budget.max_total_strings) {
      throw BudgetExceeded("exhaustive enumeration exceeded " +
                           std::to_string(budget.max_total_strings) + " letter-steps");
    }
    int hit = automaton.match(f.state);
    if (hit >= 0) {
      ++counts.first[static_cast<std::size_t>(hit)][f.depth];
      continue;
    }
    ++counts.avoiding[f.depth];
    if (f.depth == n_max) continue;
    for (std::size_t x = q; x-- > 0;) {
      stack.push_back({automaton.step(f.state, static_cast<Letter>(x)), f.depth + 1});
    }
  }
  return counts;
}

BruteCounts automaton_counts(const std::vector<std::vector<Word>>& groups, std::size_t q,
                             std::size_t n_max) {
  if (static_cast<double>(n_max) * std::log2(static_cast<double>(q)) >= 63.0) {
    throw BudgetExceeded("counts of length " + std::to_string(n_max) + " overflow 64 bits");
  }
  MatchAutomaton automaton(groups, q);
  BruteCounts counts;
  counts.avoiding.assign(n_max + 1, 0);
  counts.first.assign(groups.size(), std::vector<std::uint64_t>(n_max + 1, 0));
  std::vector<std::uint64_t> live(automaton.size(), 0), next(automaton.size(), 0);
  live[0] = 1;
  counts.avoiding[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t state = 0; state < live.size(); ++state) {
      if (live[state] == 0) continue;
      for (std::size_t x = 0; x < q; ++x) {
        std::size_t to = automaton.step(state, static_cast<Letter>(x));
        int hit = automaton.match(to);
        if (hit >= 0) {
          counts.first[static_cast<std::size_t>(hit)][n] += live[state];
        } else {
          next[to] += live[state];
        }
      }
    }
    live.swap(next);
    for (auto c : live) counts.avoiding[n] += c;
  }
  return counts;
}

std::uint64_t brute_avoiding(const std::vector<Word>& words, std::size_t q, std::size_t n,
                             const OracleBudget& budget) {
  return brute_counts({words}, q, n, budget).avoiding[n];
}

std::uint64_t brute_first_occurrence(const std::vector<Word>& words,
                                     const std::vector<Word>& targets, std::size_t q,
                                     std::size_t n, const OracleBudget& budget) {
  std::vector<Word> others;
  for (const Word& w : words) {
    if (std::find(targets.begin(), targets.end(), w) == targets.end()) others.push_back(w);
  }
  return brute_counts({targets, others}, q, n, budget).first[0][n];
}

std::vector<Word> expand_orbits(const std::vector<Pattern>& patterns) {
  std::vector<Word> out;
  for (const auto& p : patterns) {
    auto orbit = p.orbit();
    out.insert(out.end(), orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<std::vector<Word>> orbit_groups(const std::vector<Pattern>& patterns) {
  std::vector<std::vector<Word>> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(p.orbit());
  return out;
}

// --- simulation ------------------------------------------------------------

double GameSimulation::win_frequency(std::size_t contender) const {
  return static_cast<double>(wins.at(contender)) / static_cast<double>(trials);
}

double GameSimulation::win_standard_error(std::size_t contender) const {
  double p = win_frequency(contender);
  return std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

double GameSimulation::mean_length() const {
  return static_cast<double>(length_sum) / static_cast<double>(trials);
}

double GameSimulation::length_standard_error() const {
  const double n = static_cast<double>(trials);
  const double mean = mean_length();
  const double variance = (length_square_sum - n * mean * mean) / (n > 1 ? n - 1 : 1);
  return std::sqrt(std::max(variance, 0.0) / n);
}

GameSimulation simulate_game(const std::vector<std::vector<Word>>& contenders, std::size_t q,
                             std::uint64_t trials, std::uint64_t seed, std::size_t threads) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  if (contenders.empty()) throw InvalidArgument("no contenders to simulate");
  const MatchAutomaton automaton(contenders, q);
  constexpr std::uint64_t kBlock = 65536;
  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;

  std::vector<GameSimulation> partial(blocks);
  std::atomic<std::uint64_t> cursor{0};
  auto worker = [&] {
    for (std::uint64_t b = cursor++; b < blocks; b = cursor++) {
      GameSimulation& out = partial[b];
      out.wins.assign(contenders.size(), 0);
      Xorshift64Star rng(seed + b);
      const std::uint64_t count = std::min(kBlock, trials - b * kBlock);
      for (std::uint64_t t = 0; t < count; ++t) {
        std::size_t state = 0;
        std::uint64_t length = 0;
        int hit;
        do {
          state = automaton.step(state, rng.letter(q));
          ++length;
          hit = automaton.match(state);
        } while (hit < 0);
        ++out.wins[static_cast<std::size_t>(hit)];
        out.length_sum += length;
        out.length_square_sum += static_cast<double>(length) * static_cast<double>(length);
      }
      out.trials = count;
    }
  };
  threads = std::max<std::size_t>(1, std::min<std::size_t>(threads, blocks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  GameSimulation total;
  total.wins.assign(contenders.size(), 0);
  for (const auto& part : partial) {
    total.trials += part.trials;
    for (std::size_t c = 0; c < contenders.size(); ++c) total.wins[c] += part.wins[c];
    total.length_sum += part.length_sum;
    total.length_square_sum += part.length_square_sum;
  }
  return total;
}

GameSimulation simulate_game(const Pattern& p1, const Pattern& p2, std::uint64_t trials,
                             std::uint64_t seed, std::size_t threads) {
  if (!p1.same_group(p2)) throw GroupMismatch("patterns belong to different groups");
  return simulate_game({p1.orbit(), p2.orbit()}, p1.group().degree(), trials, seed, threads);
}

GameSimulation simulate_wait(const Pattern& p, std::uint64_t trials, std::uint64_t seed,
                             std::size_t threads) {
  return simulate_game({p.orbit()}, p.group().degree(), trials, seed, threads);
}

}  // namespace penney

#include "penney/game.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "penney/errors.hpp"
#include "penney/genfunc.hpp"

namespace penney {

namespace {

Rational from_size(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

void require_matchup(const Pattern& p1, const Pattern& p2) {
  if (!p1.same_group(p2)) throw GroupMismatch("patterns belong to different groups");
  if (auto bad = validate_reduced(std::vector<Pattern>{p1, p2})) {
    const Pattern& c = bad->container == 0 ? p1 : p2;
    const Pattern& d = bad->container == 0 ? p2 : p1;
    if (c == d) throw NotReduced("both players chose " + p1.display());
    throw NotReduced(c.display() + " contains a copy of " + d.display());
  }
}

struct Clns {
  Rational l11, l12, l21, l22;
  Rational r1, r2;
};

Clns clns(const Pattern& p1, const Pattern& p2) {
  return {cln_pattern(p1, p1), cln_pattern(p1, p2), cln_pattern(p2, p1), cln_pattern(p2, p2),
          from_size(p1.orbit_size()), from_size(p2.orbit_size())};
}

}  // namespace

Rational wait_time(const Pattern& p) {
  return from_size(p.group().degree()) / from_size(p.orbit_size()) * cln_pattern(p, p);
}

std::string odds_label(const Rational& ratio) {
  Rational r = ratio;
  r.canonicalize();
  return r.get_num().get_str() + ":" + r.get_den().get_str();
}

Rational bob_odds(const Pattern& p1, const Pattern& p2) {
  require_matchup(p1, p2);
  Clns c = clns(p1, p2);
  Rational num = c.r2 * (c.l11 - c.l12);
  Rational den = c.r1 * (c.l22 - c.l21);
  if (num == 0 || den == 0) {
    throw DegenerateMatchup("odds of " + p1.display() + " vs " + p2.display() + " are degenerate");
  }
  return num / den;
}

Rational expected_game_length(const Pattern& p1, const Pattern& p2) {
  require_matchup(p1, p2);
  Clns c = clns(p1, p2);
  Rational den = c.r1 * (c.l22 - c.l21) + c.r2 * (c.l11 - c.l12);
  if (den == 0) throw DegenerateMatchup("expected game length has a zero denominator");
  return from_size(p1.group().degree()) * (c.l11 * c.l22 - c.l12 * c.l21) / den;
}

Rational expected_game_length_genfunc(const Pattern& p1, const Pattern& p2) {
  require_matchup(p1, p2);
  auto sol = solve_patterns({p1, p2});
  const Rational q = from_size(p1.group().degree());
  const Rational z = 1 / q;
  return (sol.first_occurrence[0].derivative().evaluate(z) +
          sol.first_occurrence[1].derivative().evaluate(z)) /
         q;
}

GameReport odds(const Pattern& p1, const Pattern& p2, bool verify) {
  Rational bob = bob_odds(p1, p2);
  GameReport report{p1, p2, 1 / bob, Rational(0), expected_game_length(p1, p2),
                    wait_time(p1), wait_time(p2), false};
  report.alice_win_probability = report.alice_odds / (1 + report.alice_odds);
  if (verify) {
    auto sol = solve_patterns({p1, p2});
    const Rational z = 1 / from_size(p1.group().degree());
    Rational alice = sol.first_occurrence[0].evaluate(z);
    Rational bob_p = sol.first_occurrence[1].evaluate(z);
    Rational length = expected_game_length_genfunc(p1, p2);
    if (alice != report.alice_win_probability || alice + bob_p != 1 ||
        length != report.expected_length) {
      throw HypothesisViolated("generating functions disagree with the correlation formulas for " +
                               p1.display() + " vs " + p2.display());
    }
    report.genfunc_verified = true;
  }
  return report;
}

namespace {

std::optional<Beater> best_among(const Pattern& p1, const std::vector<Pattern>& pool) {
  std::optional<Beater> best;
  for (const Pattern& p2 : pool) {
    if (p2 == p1) continue;
    Rational value;
    try {
      value = bob_odds(p1, p2);
    } catch (const NotReduced&) {
      continue;
    } catch (const DegenerateMatchup&) {
      continue;
    }
    if (!best || value > best->bob_odds) {
      best = Beater{p2, value, {p2}};
    } else if (value == best->bob_odds) {
      best->ties.push_back(p2);
    }
  }
  return best;
}

}  // namespace

std::optional<Beater> best_beater(const Pattern& p1, std::uint64_t budget) {
  return best_among(p1, enumerate_patterns(p1.group_ptr(), p1.length(), budget));
}

std::vector<Pattern> bob_shift_candidates(const Pattern& p1) {
  if (p1.length() < 2) throw LengthTooShort("shift candidates need length at least 2");
  std::vector<Pattern> out;
  const Word& w = p1.word();
  for (std::size_t x = 0; x < p1.group().degree(); ++x) {
    Word candidate{static_cast<Letter>(x)};
    candidate.insert(candidate.end(), w.begin(), w.end() - 1);
    Pattern p(p1.group_ptr(), candidate);
    if (p == p1) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Pattern> bob_pick_heuristic(const Pattern& p1) {
  if (p1.length() < 2) throw LengthTooShort("shift candidates need length at least 2");
  const Word& w = p1.word();
  auto periods = pattern_periods(p1);
  bool differ = false;
  if (!periods.empty()) {
    std::size_t s = periods.front();
    differ = w[s - 1] == w[s];
  }
  for (std::size_t x = 0; x < p1.group().degree(); ++x) {
    if ((x != w[0]) != differ) continue;
    Word candidate{static_cast<Letter>(x)};
    candidate.insert(candidate.end(), w.begin(), w.end() - 1);
    Pattern p(p1.group_ptr(), candidate);
    if (!(p == p1)) return p;
  }
  return std::nullopt;
}

std::size_t BeaterGraph::index_of(const Pattern& p) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
  if (it == nodes.end() || !(*it == p)) throw InvalidArgument("pattern is not a graph node");
  return static_cast<std::size_t>(it - nodes.begin());
}

std::string BeaterGraph::to_dot(std::string_view symbols) const {
  std::ostringstream out;
  out << "digraph beaters {\n";
  for (const auto& node : nodes) out << "  \"" << node.display(symbols) << "\";\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!edges[i]) continue;
    out << "  \"" << nodes[i].display(symbols) << "\" -> \""
        << edges[i]->pattern.display(symbols) << "\" [label=\"" << odds_label(edges[i]->bob_odds)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

BeaterGraph beater_graph(const GroupPtr& group, std::size_t length, std::uint64_t budget,
                         std::size_t threads) {
  BeaterGraph graph;
  graph.nodes = enumerate_patterns(group, length, budget);
  graph.edges.resize(graph.nodes.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < graph.nodes.size(); i = cursor++) {
      graph.edges[i] = best_among(graph.nodes[i], graph.nodes);
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, graph.nodes.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return graph;
}

std::optional<BeaterCycle> find_nontransitive_cycle(const BeaterGraph& graph) {
  const std::size_t n = graph.nodes.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> walk;
    std::vector<long> position(n, -1);
    std::size_t at = start;
    while (position[at] < 0) {
      position[at] = static_cast<long>(walk.size());
      walk.push_back(at);
      if (!graph.edges[at]) break;
      at = graph.index_of(graph.edges[at]->pattern);
    }
    if (!graph.edges[walk.back()] || position[at] < 0) continue;

    std::vector<std::size_t> cycle(walk.begin() + position[at], walk.end());
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    BeaterCycle out;
    out.non_transitive = true;
    for (std::size_t idx : cycle) {
      out.nodes.push_back(graph.nodes[idx]);
      out.labels.push_back(graph.edges[idx]->bob_odds);
      if (graph.edges[idx]->bob_odds <= 1) out.non_transitive = false;
    }
    return out;
  }
  return std::nullopt;
}

ExtremalWait extremal_wait(const GroupPtr& group, std::size_t length, std::uint64_t budget) {
  ExtremalWait out;
  bool first = true;
  for (const auto& p : enumerate_patterns(group, length, budget)) {
    Rational w = wait_time(p);
    if (first || w > out.max_value) {
      out.max_value = w;
      out.max_patterns.clear();
    }
    if (w == out.max_value) out.max_patterns.push_back(p);
    if (first || w < out.min_value) {
      out.min_value = w;
      out.min_patterns.clear();
    }
    if (w == out.min_value) out.min_patterns.push_back(p);
    first = false;
  }

  const std::size_t q = group->degree();
  const Rational order = from_size(group->order());
  std::size_t largest = 0;
  for (std::size_t x = 0; x < q; ++x) {
    largest = std::max(largest, group->stabilizer_order(Word{static_cast<Letter>(x)}));
  }
  BigInt power = 1, sum = 0;
  for (std::size_t k = 1; k <= length; ++k) {
    power *= static_cast<unsigned long>(q);
    sum += power;
  }
  out.predicted_max = from_size(largest) / order * Rational(sum);
  if (length >= q + 1) {
    Rational low = Rational(power) / order;
    if (group->letter_orbits().size() == 1) low += 1;
    out.predicted_min = low;
  }
  return out;
}

AdvantageReport alice_advantage_check(const GroupPtr& group, std::size_t length,
                                      std::uint64_t budget) {
  const std::size_t q = group->degree();
  if (!group->is_full_symmetric()) {
    throw WrongGroup("the all-distinct advantage holds for the full symmetric group only");
  }
  if (length < 1 || 2 * length >= q + 2) {
    throw HypothesisViolated("need 2l < q + 2, got q = " + std::to_string(q) +
                             ", l = " + std::to_string(length));
  }
  Word distinct(length);
  for (std::size_t i = 0; i < length; ++i) distinct[i] = static_cast<Letter>(i);
  AdvantageReport report{Pattern(group, distinct), {}};
  for (const auto& p2 : enumerate_patterns(group, length, budget)) {
    if (p2 == report.alice) continue;
    Rational value = bob_odds(report.alice, p2);
    if (value >= 1) {
      throw HypothesisViolated(p2.display() + " gets odds " + odds_label(value) + " against " +
                               report.alice.display());
    }
    report.bob_odds.emplace_back(p2, value);
  }
  return report;
}

}  // namespace penney

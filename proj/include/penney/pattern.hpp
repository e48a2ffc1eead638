#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "penney/group.hpp"
#include "penney/rational_series.hpp"
#include "penney/word_correlation.hpp"

namespace penney {

using GroupPtr = std::shared_ptr<const PermutationGroup>;

GroupPtr make_group(std::string_view spec,
                    std::size_t order_cap = PermutationGroup::kDefaultOrderCap);

/// Default cap on q^l for exhaustive scans over all words of a length.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// An orbit of words under a group, keyed by its lexicographically least member.
class Pattern {
 public:
  /// Canonicalizes `w`.
  Pattern(GroupPtr group, const Word& w);

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  const PermutationGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  /// r = |G.p|
  std::size_t orbit_size() const { return group_->order() / stabilizer_; }
  std::size_t stabilizer_order() const { return stabilizer_; }
  std::vector<Word> orbit() const { return group_->orbit(word_); }
  bool same_group(const Pattern& other) const;

  std::string to_string(std::string_view symbols = kDefaultSymbols) const {
    return format_pattern(word_, symbols);
  }
  /// Lowercase pattern notation, or uppercase when the group is trivial and
  /// every pattern is a single word.
  std::string display(std::string_view symbols = kDefaultSymbols) const {
    return group_->order() == 1 ? format_word(word_, symbols) : format_pattern(word_, symbols);
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.word_ == b.word_ && a.same_group(b);
  }
  friend bool operator<(const Pattern& a, const Pattern& b) { return a.word_ < b.word_; }

 private:
  GroupPtr group_;
  Word word_;
  std::size_t stabilizer_ = 1;
};

Pattern pattern_of(const GroupPtr& group, const Word& w);

/// All patterns of length `length`, sorted. Throws BudgetExceeded if q^length > budget.
std::vector<Pattern> enumerate_patterns(const GroupPtr& group, std::size_t length,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

struct PatternCorrelation {
  Correlation entries;
  std::vector<Rational> normalized;  // entries / r, r the orbit size of the first pattern
};

/// Entry i is the weight of the suffix p(i+1..l) when that suffix is
/// equivalent to the prefix of p2 of the same length, else 0. A suffix longer
/// than p2 is cut to |p2| letters, as for words.
PatternCorrelation correlate_patterns(const Pattern& p, const Pattern& p2);
/// Sum over the orbit of p of the word correlations against p2's canonical word.
/// Costs |G.p| word correlations; used to cross-check correlate_patterns.
PatternCorrelation correlate_patterns_orbit_sum(const Pattern& p, const Pattern& p2);

Rational cln_pattern(const Pattern& p, const Pattern& p2);
std::vector<std::size_t> pattern_periods(const Pattern& p);

enum class OverlapClass { NonSelfOverlapping, AlmostNonSelfOverlapping, Neither };
OverlapClass classify_overlap(const Pattern& p);
std::string to_string(OverlapClass c);

struct MinClnResult {
  Rational value;
  std::vector<Pattern> witnesses;
  /// Range the minimum must fall in given the group's letter orbits.
  Rational bound_low;
  Rational bound_high;
};

/// Exhaustive minimum of the autocorrelation CLN over all patterns of a length.
MinClnResult min_cln_search(const GroupPtr& group, std::size_t length,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/// Throws BudgetExceeded when q^length exceeds budget; returns q^length otherwise.
std::uint64_t checked_word_count(std::size_t q, std::size_t length, std::uint64_t budget);

}  // namespace penney

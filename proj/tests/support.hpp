#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "penney/pattern.hpp"
#include "penney/rational_series.hpp"
#include "penney/word_correlation.hpp"

namespace penney::test {

inline GroupPtr group(std::string_view spec) { return make_group(spec); }

inline Word word(std::string_view text, std::size_t q) { return parse_word(text, q); }

inline Pattern pat(const GroupPtr& g, std::string_view text) {
  return Pattern(g, parse_word(text, g->degree()));
}

inline Rational rat(std::string_view text) { return parse_rational(std::string(text)); }

inline Correlation vec(std::initializer_list<std::int64_t> xs) { return Correlation(xs); }

/// Every word of length n over q letters, in lexicographic order.
inline std::vector<Word> all_words(std::size_t q, std::size_t n) {
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

inline std::vector<std::string> names(const std::vector<Pattern>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.display());
  return out;
}

}  // namespace penney::test

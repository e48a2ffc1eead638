#include "penney/genfunc.hpp"

#include <algorithm>

#include "penney/errors.hpp"

namespace penney {

namespace {

bool contains_word(const Word& haystack, const Word& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

// Rows after clearing z^{-l_j} by multiplying through with z^L, L = max l_j:
//   (1 - qz) G + sum_j G_j = 1
//   z^L G - sum_j weight_j z^{L - l_j} C_{j,i}(z) G_j = 0      (i = 1..k)
GenFuncSolution solve_system(std::size_t q, const std::vector<std::size_t>& lengths,
                             const std::vector<Rational>& weights,
                             const std::vector<std::vector<Polynomial>>& corr) {
  const std::size_t k = lengths.size();
  if (k == 0) throw InvalidArgument("generating-function system needs at least one member");
  const std::size_t top = *std::max_element(lengths.begin(), lengths.end());

  RFMatrix matrix(k + 1, std::vector<RationalFunction>(k + 1));
  std::vector<RationalFunction> rhs(k + 1);
  matrix[0][0] = Polynomial{Rational(1), Rational(-static_cast<long>(q))};
  for (std::size_t j = 0; j < k; ++j) matrix[0][j + 1] = Polynomial::constant(1);
  rhs[0] = Polynomial::constant(1);
  for (std::size_t i = 0; i < k; ++i) {
    matrix[i + 1][0] = Polynomial::monomial(top);
    for (std::size_t j = 0; j < k; ++j) {
      matrix[i + 1][j + 1] = corr[j][i].shifted(top - lengths[j]).scaled(-weights[j]);
    }
  }
  auto x = solve_linear_system(std::move(matrix), std::move(rhs));
  GenFuncSolution out;
  out.avoiding = x[0];
  out.first_occurrence.assign(x.begin() + 1, x.end());
  return out;
}

}  // namespace

std::optional<ReducedViolation> validate_reduced(const std::vector<Word>& words) {
  for (std::size_t c = 0; c < words.size(); ++c) {
    for (std::size_t d = 0; d < words.size(); ++d) {
      if (c != d && contains_word(words[c], words[d])) return ReducedViolation{c, d};
    }
  }
  return std::nullopt;
}

std::optional<ReducedViolation> validate_reduced(const std::vector<Pattern>& patterns) {
  for (std::size_t c = 0; c < patterns.size(); ++c) {
    for (std::size_t d = 0; d < patterns.size(); ++d) {
      if (c == d) continue;
      if (!patterns[c].same_group(patterns[d])) throw GroupMismatch("pattern set mixes groups");
      const Word& container = patterns[c].word();
      const Word& needle = patterns[d].word();
      if (needle.size() > container.size()) continue;
      for (std::size_t start = 0; start + needle.size() <= container.size(); ++start) {
        Word piece(container.begin() + static_cast<std::ptrdiff_t>(start),
                   container.begin() + static_cast<std::ptrdiff_t>(start + needle.size()));
        if (patterns[c].group().equivalent(piece, needle)) return ReducedViolation{c, d};
      }
    }
  }
  return std::nullopt;
}

GenFuncSolution solve_words(const std::vector<Word>& words, std::size_t q) {
  if (auto bad = validate_reduced(words)) {
    throw NotReduced("word set is not reduced: " + format_word(words[bad->container]) +
                     " contains " + format_word(words[bad->contained]));
  }
  std::vector<std::size_t> lengths;
  std::vector<Rational> weights(words.size(), Rational(1));
  std::vector<std::vector<Polynomial>> corr(words.size());
  for (std::size_t j = 0; j < words.size(); ++j) {
    if (words[j].empty()) throw InvalidArgument("empty word in set");
    for (Letter x : words[j]) {
      if (x >= q) throw InvalidArgument("letter outside the alphabet");
    }
    lengths.push_back(words[j].size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      corr[j].push_back(correlation_polynomial(correlate(words[j], words[i])));
    }
  }
  return solve_system(q, lengths, weights, corr);
}

GenFuncSolution solve_patterns(const std::vector<Pattern>& patterns) {
  if (auto bad = validate_reduced(patterns)) {
    throw NotReduced("pattern set is not reduced: " + patterns[bad->container].to_string() +
                     " contains a copy of " + patterns[bad->contained].to_string());
  }
  if (patterns.empty()) throw InvalidArgument("empty pattern set");
  std::vector<std::size_t> lengths;
  std::vector<Rational> weights;
  std::vector<std::vector<Polynomial>> corr(patterns.size());
  for (std::size_t j = 0; j < patterns.size(); ++j) {
    lengths.push_back(patterns[j].length());
    weights.emplace_back(1, static_cast<unsigned long>(patterns[j].orbit_size()));
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      corr[j].push_back(correlation_polynomial(correlate_patterns(patterns[j], patterns[i]).entries));
    }
  }
  return solve_system(patterns.front().group().degree(), lengths, weights, corr);
}

namespace {

GenFuncSolution single(const Polynomial& corr, std::size_t length, std::size_t r, std::size_t q) {
  Polynomial lead = Polynomial::monomial(length, Rational(static_cast<unsigned long>(r)));
  Polynomial den = lead + Polynomial{Rational(1), Rational(-static_cast<long>(q))} * corr;
  GenFuncSolution out;
  out.avoiding = RationalFunction(corr, den);
  out.first_occurrence.emplace_back(lead, den);
  return out;
}

}  // namespace

GenFuncSolution closed_form_single(const Word& w, std::size_t q) {
  if (w.empty()) throw InvalidArgument("empty word");
  return single(correlation_polynomial(correlate(w, w)), w.size(), 1, q);
}

GenFuncSolution closed_form_single(const Pattern& p) {
  return single(correlation_polynomial(correlate_patterns(p, p).entries), p.length(),
                p.orbit_size(), p.group().degree());
}

}  // namespace penney

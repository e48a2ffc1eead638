#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "penney/pattern.hpp"
#include "penney/rational_series.hpp"

namespace penney {

/// Avoiding function G(z) and one first-occurrence function per set member,
/// in input order. Satisfies (1 - qz) G + sum_i G_i = 1.
struct GenFuncSolution {
  RationalFunction avoiding;
  std::vector<RationalFunction> first_occurrence;
};

/// Indices of a (container, contained) pair breaking reducedness.
struct ReducedViolation {
  std::size_t container;
  std::size_t contained;
};

/// No word is a substring of another (duplicates also violate).
std::optional<ReducedViolation> validate_reduced(const std::vector<Word>& words);
/// No substring of any canonical word is equivalent to another set member.
std::optional<ReducedViolation> validate_reduced(const std::vector<Pattern>& patterns);

/// Solves the linear system for a reduced word set over q letters.
/// Throws NotReduced or SingularSystem.
GenFuncSolution solve_words(const std::vector<Word>& words, std::size_t q);
/// Same system with each correlation polynomial replaced by (1/r_j) C_{p_j,p_i}(z).
GenFuncSolution solve_patterns(const std::vector<Pattern>& patterns);

/// Direct k = 1 forms: G = C/(r z^l + (1-qz) C), G_p = r z^l/(r z^l + (1-qz) C).
GenFuncSolution closed_form_single(const Word& w, std::size_t q);
GenFuncSolution closed_form_single(const Pattern& p);

}  // namespace penney

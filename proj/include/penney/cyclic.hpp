#pragma once

#include <cstddef>
#include <cstdint>

#include "penney/genfunc.hpp"
#include "penney/oracle.hpp"
#include "penney/pattern.hpp"

namespace penney {

/// Consecutive differences p(i+1) - p(i) mod q, one letter shorter than p.
/// Throws WrongGroup unless the group is Z_q, LengthTooShort for length < 2.
Word signature(const Pattern& p);
/// Same differences for a bare word over q letters.
Word signature(const Word& w, std::size_t q);

/// The word with first letter `first` whose differences are `sig`.
Word lift(const Word& sig, Letter first, std::size_t q);

struct CountIdentityReport {
  std::size_t n = 0;
  std::uint64_t pattern_avoiding = 0;    // avoiding every word of the orbit, length n
  std::uint64_t signature_avoiding = 0;  // avoiding S(p), length n-1
  std::uint64_t pattern_first = 0;       // first orbit occurrence at the end, length n
  std::uint64_t signature_first = 0;
  bool holds = false;
};

/// Exhaustive check of A(n,{p}) = q A(n-1,{S(p)}) and the matching
/// first-occurrence count, with A = 1, T = 0 at n = 0.
CountIdentityReport count_identity_check(const Pattern& p, std::size_t n,
                                         const OracleBudget& budget = {});

struct ClnIdentityReport {
  Rational pattern_cln;    // pLp'
  Rational signature_cln;  // S(p)LS(p')
  bool cln_holds = false;
  bool entries_hold = false;
  /// Only evaluated when p = p'.
  bool genfunc_holds = false;

  bool holds() const { return cln_holds && entries_hold && genfunc_holds; }
};

/// Checks pLp' = 1 + q S(p)LS(p'), the entrywise correlation identity, and,
/// for p = p', the generating-function relations G = 1 + qz G_S and
/// G_p = qz G_{S,S}.
ClnIdentityReport cln_identity_check(const Pattern& p, const Pattern& p2);

}  // namespace penney

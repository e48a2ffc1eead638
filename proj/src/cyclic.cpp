#include "penney/cyclic.hpp"

#include "penney/errors.hpp"

namespace penney {

namespace {

void require_cyclic(const Pattern& p) {
  if (!p.group().is_cyclic_shift()) {
    throw WrongGroup("signatures are defined for the cyclic group only, got " + p.group().name());
  }
}

}  // namespace

Word signature(const Word& w, std::size_t q) {
  if (w.size() < 2) throw LengthTooShort("signature needs length at least 2");
  Word out(w.size() - 1);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    out[i] = static_cast<Letter>((w[i + 1] + q - w[i]) % q);
  }
  return out;
}

Word signature(const Pattern& p) {
  require_cyclic(p);
  return signature(p.word(), p.group().degree());
}

Word lift(const Word& sig, Letter first, std::size_t q) {
  Word out{first};
  for (Letter s : sig) out.push_back(static_cast<Letter>((out.back() + s) % q));
  return out;
}

CountIdentityReport count_identity_check(const Pattern& p, std::size_t n,
                                         const OracleBudget& budget) {
  require_cyclic(p);
  const std::size_t q = p.group().degree();
  const Word sig = signature(p);
  CountIdentityReport report;
  report.n = n;
  auto left = brute_counts({p.orbit()}, q, n, budget);
  report.pattern_avoiding = left.avoiding[n];
  report.pattern_first = left.first[0][n];
  if (n == 0) {
    report.holds = report.pattern_avoiding == 1 && report.pattern_first == 0;
    return report;
  }
  auto right = brute_counts({{sig}}, q, n - 1, budget);
  report.signature_avoiding = right.avoiding[n - 1];
  report.signature_first = right.first[0][n - 1];
  report.holds = report.pattern_avoiding == q * report.signature_avoiding &&
                 report.pattern_first == q * report.signature_first;
  if (n == 1) report.holds = report.holds && report.pattern_avoiding == q;
  return report;
}

ClnIdentityReport cln_identity_check(const Pattern& p, const Pattern& p2) {
  require_cyclic(p);
  require_cyclic(p2);
  if (!p.same_group(p2)) throw GroupMismatch("patterns belong to different groups");
  const std::size_t q = p.group().degree();
  const Word s1 = signature(p);
  const Word s2 = signature(p2);

  ClnIdentityReport report;
  report.pattern_cln = cln_pattern(p, p2);
  report.signature_cln = cln_word(s1, s2, q);
  report.cln_holds =
      report.pattern_cln == 1 + Rational(static_cast<unsigned long>(q)) * report.signature_cln;

  // Z_q acts freely on words, so every suffix weight is 1.
  const auto pattern_entries = correlate_patterns(p, p2).entries;
  const auto word_entries = correlate(s1, s2);
  report.entries_hold = pattern_entries.back() == 1;
  for (std::size_t i = 0; i + 1 < pattern_entries.size(); ++i) {
    report.entries_hold =
        report.entries_hold && pattern_entries[i] == word_entries[i];
  }

  report.genfunc_holds = true;
  if (p == p2) {
    auto pattern_side = solve_patterns({p});
    auto word_side = solve_words({s1}, q);
    Polynomial qz = Polynomial::monomial(1, Rational(static_cast<unsigned long>(q)));
    RationalFunction one(Polynomial::constant(1));
    RationalFunction factor(qz);
    report.genfunc_holds = pattern_side.avoiding == one + factor * word_side.avoiding &&
                           pattern_side.first_occurrence[0] ==
                               factor * word_side.first_occurrence[0];
  }
  return report;
}

}  // namespace penney
